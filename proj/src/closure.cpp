#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tlcat/category.hpp"
#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

// A diagram of at most 16 points packs into 12 bytes: partner indices as
// nibbles of m, then letter counts and b-letter masks of both words in w.
// Bit 31 of w marks an occupied slot so the zero key can serve as "empty".
struct PackedKey {
  std::uint64_t m = 0;
  std::uint32_t w = 0;

  bool operator==(const PackedKey&) const = default;
};

std::uint32_t b_mask(const Word& w) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i) == 'b') bits |= 1u << i;
  return bits;
}

PackedKey encode(const Diagram& d) {
  PackedKey k;
  for (std::size_t p = 0; p < d.points(); ++p)
    k.m |= static_cast<std::uint64_t>(d.partner(static_cast<int>(p)))
           << (4 * p);
  k.w = static_cast<std::uint32_t>(d.upper().size()) |
        static_cast<std::uint32_t>(d.lower().size()) << 4 |
        b_mask(d.upper()) << 8 | b_mask(d.lower()) << 16 | 1u << 31;
  return k;
}

Diagram decode(const PackedKey& k) {
  const std::size_t nu = k.w & 0xF, nl = (k.w >> 4) & 0xF;
  std::string up(nu, 'a'), lo(nl, 'a');
  for (std::size_t i = 0; i < nu; ++i)
    if ((k.w >> (8 + i)) & 1) up[i] = 'b';
  for (std::size_t i = 0; i < nl; ++i)
    if ((k.w >> (16 + i)) & 1) lo[i] = 'b';
  std::vector<std::pair<int, int>> pairs;
  const int pts = static_cast<int>(2 * (nu + nl));
  for (int p = 0; p < pts; ++p) {
    const int q = static_cast<int>((k.m >> (4 * p)) & 0xF);
    if (p < q) pairs.emplace_back(p, q);
  }
  return Diagram::from_pairs(Word(up), Word(lo), pairs);
}

// Open-addressing set of packed keys, keeping insertion order on the side.
class KeySet {
 public:
  KeySet() : slots_(1u << 16) {}

  bool insert(const PackedKey& k) {
    if (2 * (order_.size() + 1) > slots_.size()) grow();
    std::size_t i = probe(k);
    if (slots_[i].w) return false;
    slots_[i] = k;
    order_.push_back(k);
    return true;
  }

  std::size_t size() const { return order_.size(); }
  const std::vector<PackedKey>& order() const { return order_; }

 private:
  std::size_t probe(const PackedKey& k) const {
    const std::size_t mask = slots_.size() - 1;
    std::uint64_t x = k.m ^ (static_cast<std::uint64_t>(k.w) * 0x9E3779B97F4A7C15ull);
    x ^= x >> 32;
    x *= 0xD6E8FEB86659FD93ull;
    x ^= x >> 32;
    std::size_t i = static_cast<std::size_t>(x) & mask;
    while (slots_[i].w && !(slots_[i] == k)) i = (i + 1) & mask;
    return i;
  }

  void grow() {
    std::vector<PackedKey> bigger(2 * slots_.size());
    slots_.swap(bigger);
    for (const PackedKey& k : order_) slots_[probe(k)] = k;
  }

  std::vector<PackedKey> slots_;
  std::vector<PackedKey> order_;
};

class Saturator {
 public:
  Saturator(const std::vector<Diagram>& generators, unsigned max_points,
            unsigned slack, const ClosureProgress& progress)
      : generators_(generators),
        max_points_(max_points),
        work_cap_(max_points + slack),
        progress_(progress) {
    if (work_cap_ > 16)
      throw InvalidArgument("closure: max_points + slack must be at most 16");
    orthogonal_ = true;
    for (const Diagram& g : generators_) {
      if (g.points() > work_cap_)
        throw InvalidArgument("closure: generator exceeds the working cap");
      if (!g.upper().all_a() || !g.lower().all_a()) orthogonal_ = false;
    }
  }

  CategorySpec run() {
    seed();
    unsigned round = 0;
    while (!frontier_.empty()) {
      ++round;
      if (progress_) progress_({round, frontier_.size(), seen_.size()});
      next_.clear();
      for (const PackedKey& k : frontier_) expand(decode(k));
      frontier_.swap(next_);
    }
    if (progress_) progress_({round, 0, seen_.size()});

    std::vector<Diagram> kept;
    for (const PackedKey& k : seen_.order()) {
      Diagram d = decode(k);
      if (d.points() <= max_points_) kept.push_back(std::move(d));
    }
    return CategorySpec::generated(generators_, std::move(kept), max_points_,
                                   work_cap_ - max_points_);
  }

 private:
  void discover(const Diagram& d) {
    const PackedKey k = encode(d);
    if (seen_.insert(k)) next_.push_back(k);
  }

  void add_elementary(const Diagram& d) {
    if (d.points() > work_cap_) return;
    for (const Diagram& e : elems_)
      if (e == d) return;
    elems_.push_back(d);
  }

  // every word usable as an identity seed: all-a in the orthogonal world,
  // all letter combinations otherwise
  std::vector<Word> seed_words(std::size_t max_letters) const {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_letters; ++len) {
      if (orthogonal_) {
        out.push_back(Word::all_a(len));
        continue;
      }
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        std::string s(len, 'a');
        for (std::size_t i = 0; i < len; ++i)
          if ((bits >> i) & 1) s[i] = 'b';
        out.push_back(Word(s));
      }
    }
    return out;
  }

  void seed() {
    for (const Diagram& g : generators_) {
      discover(g);
      add_elementary(g);
      add_elementary(involute(g));
      if (!orthogonal_) {
        add_elementary(conjugate(g));
        add_elementary(involute(conjugate(g)));
      }
    }
    // duality structure: in the all-a world the object is self dual, so the
    // caps are the nested all-a rainbows
    if (orthogonal_) {
      for (std::size_t k = 1; 4 * k <= work_cap_; ++k) {
        std::vector<std::pair<int, int>> rainbow;
        for (std::size_t i = 0; i < 2 * k; ++i)
          rainbow.emplace_back(static_cast<int>(i),
                               static_cast<int>(4 * k - 1 - i));
        discover(Diagram::from_pairs(Word(), Word::all_a(2 * k), rainbow));
      }
      add_elementary(cap_plain());
      add_elementary(involute(cap_plain()));
      pads_.push_back(identity(Word("a")));
    } else {
      for (const Word& w : seed_words(work_cap_ / 4))
        if (w.size() > 0) discover(duality_cap(w));
      add_elementary(duality_cap(Word("a")));
      add_elementary(duality_cap(Word("b")));
      add_elementary(duality_cup(Word("a")));
      add_elementary(duality_cup(Word("b")));
      pads_.push_back(identity(Word("a")));
      pads_.push_back(identity(Word("b")));
    }
    for (const Word& w : seed_words(work_cap_ / 4)) discover(identity(w));
    frontier_.swap(next_);
  }

  // id_pre (x) g (x) id_post, with pre and post cut out of word so the sheet
  // composes against it: below a diagram the sheet's upper row is its lower
  // word, above a diagram the sheet's lower row is its upper word
  const Diagram& sheet(bool above, const Word& word, std::size_t idx,
                       std::size_t pos) {
    const std::uint64_t key =
        b_mask(word) | static_cast<std::uint64_t>(word.size()) << 8 |
        static_cast<std::uint64_t>(pos) << 12 | (above ? 1ull << 16 : 0) |
        static_cast<std::uint64_t>(idx) << 17;
    auto it = sheets_.find(key);
    if (it != sheets_.end()) return it->second;
    const Diagram& g = elems_[idx];
    const std::size_t cut = above ? g.lower().size() : g.upper().size();
    const Word pre(word.str().substr(0, pos));
    const Word post(word.str().substr(pos + cut));
    Diagram e = tensor(tensor(identity(pre), g), identity(post));
    return sheets_.emplace(key, std::move(e)).first->second;
  }

  void expand(const Diagram& d) {
    discover(involute(d));
    if (!orthogonal_) discover(conjugate(d));
    if (d.points() + 4 <= work_cap_) {
      for (const Diagram& pad : pads_) {
        discover(tensor(pad, d));
        discover(tensor(d, pad));
      }
    }
    for (std::size_t idx = 0; idx < elems_.size(); ++idx) {
      const Diagram& g = elems_[idx];
      const std::string& gu = g.upper().str();
      const std::string& gl = g.lower().str();
      const std::string& low = d.lower().str();
      if (low.size() >= gu.size()) {
        for (std::size_t pos = 0; pos + gu.size() <= low.size(); ++pos) {
          if (low.compare(pos, gu.size(), gu) != 0) continue;
          const std::size_t pts =
              d.upper_points() + 2 * (low.size() - gu.size() + gl.size());
          if (pts > work_cap_) continue;
          discover(compose(d, sheet(false, d.lower(), idx, pos)).diagram);
        }
      }
      const std::string& up = d.upper().str();
      if (up.size() >= gl.size()) {
        for (std::size_t pos = 0; pos + gl.size() <= up.size(); ++pos) {
          if (up.compare(pos, gl.size(), gl) != 0) continue;
          const std::size_t pts =
              d.lower_points() + 2 * (up.size() - gl.size() + gu.size());
          if (pts > work_cap_) continue;
          discover(compose(sheet(true, d.upper(), idx, pos), d).diagram);
        }
      }
    }
  }

  std::vector<Diagram> generators_;
  unsigned max_points_;
  unsigned work_cap_;
  ClosureProgress progress_;
  bool orthogonal_ = true;

  std::vector<Diagram> elems_;
  std::vector<Diagram> pads_;
  std::unordered_map<std::uint64_t, Diagram> sheets_;
  KeySet seen_;
  std::vector<PackedKey> frontier_, next_;
};

}  // namespace

CategorySpec closure(const std::vector<Diagram>& generators,
                     unsigned max_points, unsigned slack,
                     const ClosureProgress& progress) {
  return Saturator(generators, max_points, slack, progress).run();
}

}  // namespace tlcat
