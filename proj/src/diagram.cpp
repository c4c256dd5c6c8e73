#include "tlcat/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

// position of point p along the boundary walk: upper row left to right, then
// lower row right to left
int boundary_position(int p, int nu, int nl) {
  return p < nu ? p : nu + (nl - 1 - (p - nu));
}

bool noncrossing(const std::vector<int>& partner, int nu) {
  const int n = static_cast<int>(partner.size());
  const int nl = n - nu;
  std::vector<std::pair<int, int>> chords;
  for (int p = 0; p < n; ++p) {
    if (partner[p] > p) {
      int a = boundary_position(p, nu, nl);
      int b = boundary_position(partner[p], nu, nl);
      chords.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  return true;
}

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

class DiagramBuilder {
 public:
  // trusted construction for internal operations whose output is noncrossing
  // by planarity; from_pairs stays the validating entry point
  static Diagram make(Word upper, Word lower, std::vector<int> partner) {
    Diagram d;
    d.upper_ = std::move(upper);
    d.lower_ = std::move(lower);
    d.partner_ = std::move(partner);
    return d;
  }
};

Diagram Diagram::from_pairs(Word upper, Word lower,
                            const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(2 * (upper.size() + lower.size()));
  std::vector<int> partner(n, -1);
  if (static_cast<int>(pairs.size()) * 2 != n)
    throw ParseError("matching must cover every boundary point exactly once");
  for (auto [p, q] : pairs) {
    if (p < 0 || q < 0 || p >= n || q >= n)
      throw ParseError("pair index out of range");
    if (p == q || partner[p] != -1 || partner[q] != -1)
      throw ParseError("matching must cover every boundary point exactly once");
    partner[p] = q;
    partner[q] = p;
  }
  if (!noncrossing(partner, static_cast<int>(2 * upper.size())))
    throw ParseError("matching has crossing strings");
  return DiagramBuilder::make(std::move(upper), std::move(lower), std::move(partner));
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(partner_.size() / 2);
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p)
    if (partner_[p] > p) out.emplace_back(p, partner_[p]);
  return out;
}

Diagram Diagram::reworded(Word new_upper, Word new_lower) const {
  if (new_upper.size() != upper_.size() || new_lower.size() != lower_.size())
    throw InvalidArgument("reworded: word lengths must match");
  return DiagramBuilder::make(std::move(new_upper), std::move(new_lower), partner_);
}

std::strong_ordering Diagram::operator<=>(const Diagram& o) const {
  if (auto c = upper_ <=> o.upper_; c != 0) return c;
  if (auto c = lower_ <=> o.lower_; c != 0) return c;
  return partner_ <=> o.partner_;
}

namespace {

// colors as 0 = x, 1 = y; rule a -> (x,y), b -> (y,x) per leg
void word_colors(const Word& w, std::vector<int>& out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int first = w.at(i) == 'a' ? 0 : 1;
    out.push_back(first);
    out.push_back(1 - first);
  }
}

// fixed pattern x,y,y,x,x,y,y,x,... along a row of n points
void fixed_colors(std::size_t n, std::vector<int>& out) {
  for (std::size_t i = 0; i < n; ++i) {
    int m = static_cast<int>(i % 4);
    out.push_back(m == 1 || m == 2 ? 1 : 0);
  }
}

int count_mismatches(const Diagram& d, const std::vector<int>& color) {
  int bad = 0;
  for (int p = 0; p < static_cast<int>(d.points()); ++p)
    if (d.partner(p) > p && color[p] != color[d.partner(p)]) ++bad;
  return bad;
}

}  // namespace

int Diagram::mismatches_word_rule() const {
  std::vector<int> color;
  color.reserve(points());
  word_colors(upper_, color);
  word_colors(lower_, color);
  return count_mismatches(*this, color);
}

int Diagram::mismatches_fixed_rule() const {
  std::vector<int> color;
  color.reserve(points());
  fixed_colors(upper_points(), color);
  fixed_colors(lower_points(), color);
  return count_mismatches(*this, color);
}

LegPartition Diagram::unfatten() const {
  const int legs = static_cast<int>(upper_.size() + lower_.size());
  UF uf(legs);
  for (int p = 0; p < static_cast<int>(points()); ++p)
    if (partner_[p] > p) uf.unite(p / 2, partner_[p] / 2);
  std::vector<std::vector<int>> by_root(legs);
  for (int leg = 0; leg < legs; ++leg) by_root[uf.find(leg)].push_back(leg);
  LegPartition out;
  out.upper_legs = upper_.size();
  out.lower_legs = lower_.size();
  for (auto& b : by_root)
    if (!b.empty()) out.blocks.push_back(std::move(b));
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool Diagram::is_doubled() const {
  for (const auto& b : unfatten().blocks)
    if (b.size() != 2) return false;
  return true;
}

Diagram identity(const Word& w) {
  const int n = static_cast<int>(2 * w.size());
  std::vector<int> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    partner[i] = n + i;
    partner[n + i] = i;
  }
  return DiagramBuilder::make(w, w, std::move(partner));
}

Diagram duality_cap(const Word& w) {
  const int n = static_cast<int>(4 * w.size());
  std::vector<int> partner(n);
  for (int i = 0; i < n; ++i) partner[i] = n - 1 - i;
  return DiagramBuilder::make(Word(), w + w.rev_bar(), std::move(partner));
}

Diagram duality_cup(const Word& w) { return involute(duality_cap(w)); }

Diagram tensor(const Diagram& d, const Diagram& e) {
  const int du = static_cast<int>(d.upper_points()), dl = static_cast<int>(d.lower_points());
  const int eu = static_cast<int>(e.upper_points()), el = static_cast<int>(e.lower_points());
  auto map_d = [&](int p) { return p < du ? p : p + eu; };
  auto map_e = [&](int p) { return p < eu ? du + p : du + dl + p; };
  std::vector<int> partner(du + eu + dl + el);
  for (int p = 0; p < du + dl; ++p) partner[map_d(p)] = map_d(d.partner(p));
  for (int p = 0; p < eu + el; ++p) partner[map_e(p)] = map_e(e.partner(p));
  return DiagramBuilder::make(d.upper() + e.upper(), d.lower() + e.lower(),
                              std::move(partner));
}

ComposeResult compose(const Diagram& d, const Diagram& e) {
  if (d.lower() != e.upper())
    throw WordMismatch("compose: lower word of first diagram (" + d.lower().str() +
                       ") must equal upper word of second (" + e.upper().str() + ")");
  const int nu = static_cast<int>(d.upper_points());
  const int nm = static_cast<int>(d.lower_points());
  const int ng = static_cast<int>(e.lower_points());
  const int mid_legs = nm / 2;

  // middle-leg graph: components and whether they reach a surviving boundary
  UF uf(mid_legs);
  std::vector<char> touched(mid_legs, 0);
  auto feed = [&](const Diagram& g, int boundary_lo, int boundary_hi, int mid_off) {
    // points in [boundary_lo, boundary_hi) are surviving boundary, the rest of
    // g's points are glued middle points at (p - mid_off)
    for (int p = 0; p < static_cast<int>(g.points()); ++p) {
      int q = g.partner(p);
      if (q < p) continue;
      bool pm = p < boundary_lo || p >= boundary_hi;
      bool qm = q < boundary_lo || q >= boundary_hi;
      if (pm && qm)
        uf.unite((p - mid_off) / 2, (q - mid_off) / 2);
      else if (pm)
        touched[(p - mid_off) / 2] = 1;
      else if (qm)
        touched[(q - mid_off) / 2] = 1;
    }
  };
  feed(d, 0, nu, nu);  // d: upper boundary, lower glued
  feed(e, nm, nm + ng, 0);  // e: upper glued, lower boundary
  std::vector<char> comp_touched(mid_legs, 0);
  for (int leg = 0; leg < mid_legs; ++leg)
    if (touched[leg]) comp_touched[uf.find(leg)] = 1;
  unsigned rc = 0;
  for (int leg = 0; leg < mid_legs; ++leg)
    if (uf.find(leg) == leg && !comp_touched[leg]) ++rc;

  // trace boundary-to-boundary paths through the glued rows
  std::vector<int> partner(nu + ng, -1);
  auto trace = [&](bool start_in_d, int start) {
    bool in_d = start_in_d;
    int p = start;
    while (true) {
      int q = in_d ? d.partner(p) : e.partner(p);
      if (in_d) {
        if (q < nu) return std::pair{true, q};   // d upper: boundary
        p = q - nu;                              // glued: hop into e's upper
        in_d = false;
      } else {
        if (q >= nm) return std::pair{false, q};  // e lower: boundary
        p = q + nu;                               // glued: hop into d's lower
        in_d = true;
      }
    }
  };
  auto global_index = [&](bool in_d, int p) { return in_d ? p : nu + (p - nm); };
  for (int p = 0; p < nu; ++p)
    if (partner[p] == -1) {
      auto [ind, q] = trace(true, p);
      int gq = global_index(ind, q);
      partner[p] = gq;
      partner[gq] = p;
    }
  for (int p = nm; p < nm + ng; ++p)
    if (partner[nu + (p - nm)] == -1) {
      auto [ind, q] = trace(false, p);
      int gp = nu + (p - nm), gq = global_index(ind, q);
      partner[gp] = gq;
      partner[gq] = gp;
    }
  return {DiagramBuilder::make(d.upper(), e.lower(), std::move(partner)), rc};
}

Diagram involute(const Diagram& d) {
  const int nu = static_cast<int>(d.upper_points());
  const int nl = static_cast<int>(d.lower_points());
  auto map = [&](int p) { return p < nu ? nl + p : p - nu; };
  std::vector<int> partner(nu + nl);
  for (int p = 0; p < nu + nl; ++p) partner[map(p)] = map(d.partner(p));
  return DiagramBuilder::make(d.lower(), d.upper(), std::move(partner));
}

Diagram conjugate(const Diagram& d) {
  std::vector<int> partner(d.points());
  for (int p = 0; p < static_cast<int>(d.points()); ++p) partner[p] = d.partner(p);
  return DiagramBuilder::make(d.upper().bar(), d.lower().bar(), std::move(partner));
}

Diagram double_diagram(const Diagram& d) {
  const int nu = static_cast<int>(d.upper_points());
  const int nl = static_cast<int>(d.lower_points());
  // children of point p in boundary order; upper rows read left to right,
  // lower rows right to left, so lower children swap
  auto child = [&](int p, int which) {  // which: 0 first, 1 second on the walk
    if (p < nu) return 2 * p + which;
    int r = p - nu;
    return 2 * nu + 2 * r + (1 - which);
  };
  std::vector<int> partner(2 * (nu + nl));
  for (int p = 0; p < nu + nl; ++p) {
    int q = d.partner(p);
    if (q < p) continue;
    int a1 = child(p, 0), a2 = child(p, 1);
    int b1 = child(q, 0), b2 = child(q, 1);
    partner[a1] = b2;
    partner[b2] = a1;
    partner[a2] = b1;
    partner[b1] = a2;
  }
  return DiagramBuilder::make(Word::all_a(nu), Word::all_a(nl), std::move(partner));
}

Diagram bend_to_fixed(const Diagram& d) {
  const int nu = static_cast<int>(d.upper_points());
  const int nl = static_cast<int>(d.lower_points());
  auto map = [&](int p) { return p < nu ? nu - 1 - p : p; };
  std::vector<int> partner(nu + nl);
  for (int p = 0; p < nu + nl; ++p) partner[map(p)] = map(d.partner(p));
  return DiagramBuilder::make(Word(), d.upper().rev_bar() + d.lower(),
                              std::move(partner));
}

Diagram fatten(const LegPartition& p, const Word& upper, const Word& lower) {
  if (upper.size() != p.upper_legs || lower.size() != p.lower_legs)
    throw InvalidArgument("fatten: word lengths must match leg counts");
  const int k = static_cast<int>(p.upper_legs), l = static_cast<int>(p.lower_legs);
  // boundary walk order of legs, and each leg's (first, second) point on it
  auto boundary_leg_pos = [&](int leg) { return leg < k ? leg : k + (k + l - 1 - leg); };
  auto first_point = [&](int leg) { return leg < k ? 2 * leg : 2 * k + 2 * (leg - k) + 1; };
  auto second_point = [&](int leg) { return leg < k ? 2 * leg + 1 : 2 * k + 2 * (leg - k); };
  std::vector<int> partner(2 * (k + l), -1);
  for (auto block : p.blocks) {
    std::sort(block.begin(), block.end(),
              [&](int a, int b) { return boundary_leg_pos(a) < boundary_leg_pos(b); });
    const int r = static_cast<int>(block.size());
    for (int i = 0; i < r; ++i) {
      int a = second_point(block[i]);
      int b = first_point(block[(i + 1) % r]);
      partner[a] = b;
      partner[b] = a;
    }
  }
  for (int q : partner)
    if (q < 0) throw InvalidArgument("fatten: blocks must cover every leg");
  return DiagramBuilder::make(upper, lower, std::move(partner));
}

bool leg_partition_noncrossing(const LegPartition& p) {
  const int k = static_cast<int>(p.upper_legs), l = static_cast<int>(p.lower_legs);
  auto pos = [&](int leg) { return leg < k ? leg : k + (k + l - 1 - leg); };
  // two blocks cross iff they interleave around the boundary circle
  const int n = k + l;
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int leg : p.blocks[b]) block_of[pos(leg)] = static_cast<int>(b);
  // scan with a stack of open blocks
  std::vector<int> stack;
  std::vector<char> closed(p.blocks.size(), 0);
  std::vector<int> remaining(p.blocks.size(), 0);
  for (const auto& b : p.blocks) remaining[&b - p.blocks.data()] = static_cast<int>(b.size());
  for (int i = 0; i < n; ++i) {
    int b = block_of[i];
    if (b < 0) return false;
    if (closed[b]) return false;
    if (!stack.empty() && stack.back() == b) {
      // continuing the open block
    } else if (std::find(stack.begin(), stack.end(), b) != stack.end()) {
      return false;  // re-entering a block that was interrupted: crossing
    } else {
      stack.push_back(b);
    }
    if (--remaining[b] == 0) {
      if (stack.back() != b) return false;
      stack.pop_back();
      closed[b] = 1;
    }
  }
  return true;
}

std::string to_text(const Diagram& d) {
  std::ostringstream os;
  os << '(' << (d.upper().size() ? d.upper().str() : "-") << '|'
     << (d.lower().size() ? d.lower().str() : "-") << ')';
  for (const auto& [a, b] : d.pairs()) os << ' ' << a << '-' << b;
  return os.str();
}

}  // namespace tlcat
