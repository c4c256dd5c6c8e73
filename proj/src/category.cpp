#include "tlcat/category.hpp"

#include <algorithm>
#include <map>

#include "tlcat/enumerate.hpp"
#include "tlcat/errors.hpp"

namespace tlcat {

std::string_view id_string(CategoryId id) {
  switch (id) {
    case CategoryId::O: return "o";
    case CategoryId::H: return "h";
    case CategoryId::S: return "s";
    case CategoryId::SPrime: return "s-prime";
    case CategoryId::U: return "u";
    case CategoryId::K: return "k";
    case CategoryId::P: return "p";
  }
  return "?";
}

std::optional<CategoryId> parse_category(std::string_view s) {
  for (CategoryId id : all_category_ids)
    if (s == id_string(id)) return id;
  return std::nullopt;
}

bool is_orthogonal_id(CategoryId id) {
  return id == CategoryId::O || id == CategoryId::H || id == CategoryId::S ||
         id == CategoryId::SPrime;
}

namespace {

int surplus(const Word& w) {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w.at(i) == 'a' ? 1 : -1;
  return s;
}

}  // namespace

bool words_balanced(const Word& upper, const Word& lower) {
  return surplus(upper) == surplus(lower);
}

namespace {

// token stream for collapses_to_scalar: z = +1/-1 winding, block >= 0 the
// string component of a letter (z == 0 for block tokens)
struct Token {
  int z = 0;
  int block = -1;
};

// The rules only ever shrink the stream and commute with each other (a
// cancellation or merge can never disable another one elsewhere), so a
// greedy fixpoint reaches the empty stream whenever any order does.
bool reduce_tokens(std::vector<Token>& t) {
  bool changed = true;
  while (changed && !t.empty()) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t.size();) {
      const Token& c = t[i];
      const Token& n = t[i + 1];
      if (c.z != 0 && n.z == -c.z) {
        t.erase(t.begin() + i, t.begin() + i + 2);
        changed = true;
        if (i > 0) --i;
      } else if (c.z == 0 && n.z == 0 && c.block == n.block) {
        t.erase(t.begin() + i + 1);
        changed = true;
      } else {
        ++i;
      }
    }
    std::map<int, int> occurrences;
    for (const Token& tok : t)
      if (tok.z == 0) ++occurrences[tok.block];
    const std::size_t before = t.size();
    std::erase_if(t, [&](const Token& tok) {
      return tok.z == 0 && occurrences[tok.block] == 1;
    });
    if (t.size() != before) changed = true;
  }
  return t.empty();
}

}  // namespace

bool collapses_to_scalar(const Diagram& d) {
  if (!words_balanced(d.upper(), d.lower())) return false;
  const Diagram flat = bend_to_fixed(d);
  const LegPartition part = flat.unfatten();
  std::vector<int> block_of(part.lower_legs, -1);
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (int leg : part.blocks[b]) block_of[static_cast<std::size_t>(leg)] = static_cast<int>(b);
  const Word& w = flat.lower();
  std::vector<Token> toks;
  toks.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.at(i) == 'a') {
      toks.push_back({+1, -1});
      toks.push_back({0, block_of[i]});
    } else {
      toks.push_back({0, block_of[i]});
      toks.push_back({-1, -1});
    }
  }
  return reduce_tokens(toks);
}

bool member_named(CategoryId id, const Diagram& d) {
  const bool all_a = d.upper().all_a() && d.lower().all_a();
  switch (id) {
    case CategoryId::S:
      return all_a;
    case CategoryId::SPrime:
      return all_a && (d.upper().size() + d.lower().size()) % 2 == 0;
    case CategoryId::H:
      return all_a && d.is_xyyx_colorable();
    case CategoryId::O:
      return all_a && d.is_doubled();
    case CategoryId::U:
      return words_balanced(d.upper(), d.lower()) && d.is_doubled() &&
             d.is_colored();
    case CategoryId::K:
      return words_balanced(d.upper(), d.lower()) && d.is_colored();
    case CategoryId::P:
      return collapses_to_scalar(d);
  }
  return false;
}

std::vector<Diagram> predicate_cell(CategoryId id, const Word& upper,
                                    const Word& lower) {
  std::vector<Diagram> out;
  for (Diagram& d : enumerate_cell(upper, lower))
    if (member_named(id, d)) out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

Diagram cap_plain() {
  return Diagram::from_pairs(Word(), Word("aa"), {{0, 3}, {1, 2}});
}

Diagram block4(const Word& upper, const Word& lower) {
  return Diagram::from_pairs(Word::all_a(2), Word::all_a(2),
                             {{0, 4}, {3, 7}, {1, 2}, {5, 6}})
      .reworded(upper, lower);
}

Diagram jdiag(const Word& upper, const Word& lower) {
  return Diagram::from_pairs(Word("a"), Word("a"), {{0, 1}, {2, 3}})
      .reworded(upper, lower);
}

Diagram unit_cap() { return Diagram::from_pairs(Word(), Word("a"), {{0, 1}}); }

std::vector<Diagram> standard_generators(CategoryId id) {
  const Word a("a"), b("b"), ab("ab"), ba("ba"), aa("aa");
  switch (id) {
    case CategoryId::O:
      return {cap_plain()};
    case CategoryId::H:
      return {cap_plain(), block4(aa, aa)};
    case CategoryId::SPrime:
      return {cap_plain(), block4(aa, aa), jdiag(a, a)};
    case CategoryId::S:
      return {cap_plain(), block4(aa, aa), unit_cap()};
    case CategoryId::U:
      return {duality_cap(a), duality_cap(b)};
    case CategoryId::K:
      return {duality_cap(a), duality_cap(b), block4(ab, ab), block4(ba, ba)};
    case CategoryId::P:
      return {duality_cap(a), duality_cap(b), block4(ab, ab), block4(ba, ba),
              jdiag(a, a), jdiag(b, b)};
  }
  return {};
}

// --- CategorySpec -----------------------------------------------------------

struct CategorySpec::Impl {
  Kind kind = Kind::Named;
  std::optional<CategoryId> id;
  bool orthogonal = true;
  unsigned max_points = 0;
  std::vector<Diagram> generators;
  std::map<std::pair<std::string, std::string>, std::vector<Diagram>> cells;
  std::shared_ptr<const Impl> parent;  // Decomplexified, ParityMasked

  bool member(const Diagram& d) const;
  std::vector<Diagram> cell(const Word& u, const Word& l) const;
};

namespace {

void fill_table(CategorySpec::Impl& impl, std::vector<Diagram> diagrams,
                unsigned max_points) {
  impl.max_points = max_points;
  impl.orthogonal = true;
  for (Diagram& d : diagrams) {
    if (d.points() > max_points)
      throw InvalidArgument("explicit cell diagram exceeds the cap");
    if (!d.upper().all_a() || !d.lower().all_a()) impl.orthogonal = false;
    impl.cells[{d.upper().str(), d.lower().str()}].push_back(std::move(d));
  }
  for (auto& [key, cell] : impl.cells) {
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
}

}  // namespace

bool CategorySpec::Impl::member(const Diagram& d) const {
  switch (kind) {
    case Kind::Named:
      return member_named(*id, d);
    case Kind::Generated:
    case Kind::Explicit: {
      if (d.points() > max_points)
        throw CapExceeded("membership query beyond the materialized cap");
      auto it = cells.find({d.upper().str(), d.lower().str()});
      if (it == cells.end()) return false;
      return std::binary_search(it->second.begin(), it->second.end(), d);
    }
    case Kind::Decomplexified: {
      if (!d.upper().all_a() || !d.lower().all_a()) return false;
      std::size_t k = d.upper().size(), l = d.lower().size();
      if ((k + l) % 2 != 0) return false;
      return parent->member(
          d.reworded(Word::alternating(k, 'a'), Word::alternating(l, 'a')));
    }
    case Kind::ParityMasked: {
      if ((d.upper().size() + d.lower().size()) % 2 != 0) return false;
      return parent->member(d);
    }
  }
  return false;
}

std::vector<Diagram> CategorySpec::Impl::cell(const Word& u,
                                              const Word& l) const {
  switch (kind) {
    case Kind::Named:
      return predicate_cell(*id, u, l);
    case Kind::Generated:
    case Kind::Explicit: {
      if (2 * (u.size() + l.size()) > max_points)
        throw CapExceeded("cell query beyond the materialized cap");
      auto it = cells.find({u.str(), l.str()});
      if (it == cells.end()) return {};
      return it->second;
    }
    case Kind::Decomplexified: {
      if (!u.all_a() || !l.all_a()) return {};
      if ((u.size() + l.size()) % 2 != 0) return {};
      std::vector<Diagram> out;
      for (const Diagram& d : parent->cell(Word::alternating(u.size(), 'a'),
                                           Word::alternating(l.size(), 'a')))
        out.push_back(d.reworded(u, l));
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::ParityMasked: {
      if ((u.size() + l.size()) % 2 != 0) return {};
      return parent->cell(u, l);
    }
  }
  return {};
}

CategorySpec CategorySpec::named(CategoryId id) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Named;
  impl->id = id;
  impl->orthogonal = is_orthogonal_id(id);
  CategorySpec s;
  s.impl_ = std::move(impl);
  return s;
}

CategorySpec CategorySpec::explicit_cells(std::vector<Diagram> diagrams,
                                          unsigned max_points) {
  auto impl = std::make_shared<Impl>();
  fill_table(*impl, std::move(diagrams), max_points);
  impl->kind = Kind::Explicit;
  CategorySpec s;
  s.impl_ = std::move(impl);
  return s;
}

CategorySpec CategorySpec::generated(std::vector<Diagram> generators,
                                     std::vector<Diagram> diagrams,
                                     unsigned max_points, unsigned slack) {
  auto impl = std::make_shared<Impl>();
  fill_table(*impl, std::move(diagrams), max_points);
  impl->kind = Kind::Generated;
  impl->generators = std::move(generators);
  (void)slack;
  CategorySpec s;
  s.impl_ = std::move(impl);
  return s;
}

CategorySpec CategorySpec::decomplexified(CategorySpec unitary_parent,
                                          unsigned max_points) {
  if (unitary_parent.orthogonal())
    throw InvalidArgument("decomplexified view needs a unitary parent");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Decomplexified;
  impl->orthogonal = true;
  impl->max_points = max_points;
  impl->parent = unitary_parent.impl_;
  CategorySpec s;
  s.impl_ = std::move(impl);
  return s;
}

CategorySpec CategorySpec::parity_masked(CategorySpec inner) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::ParityMasked;
  impl->orthogonal = inner.orthogonal();
  impl->max_points = inner.max_points();
  impl->id = inner.id();
  impl->parent = inner.impl_;
  CategorySpec s;
  s.impl_ = std::move(impl);
  return s;
}

CategorySpec::Kind CategorySpec::kind() const { return impl_->kind; }
std::optional<CategoryId> CategorySpec::id() const { return impl_->id; }
bool CategorySpec::orthogonal() const { return impl_->orthogonal; }
unsigned CategorySpec::max_points() const { return impl_->max_points; }
const std::vector<Diagram>& CategorySpec::generators() const {
  return impl_->generators;
}

const CategorySpec* CategorySpec::unitary_parent() const {
  if (impl_->kind != Kind::Decomplexified) return nullptr;
  // wrap the stored impl back into a spec; keep one cached instance
  thread_local CategorySpec parent;
  parent.impl_ = impl_->parent;
  return &parent;
}

bool CategorySpec::member(const Diagram& d) const { return impl_->member(d); }

std::vector<Diagram> CategorySpec::cell(const Word& u, const Word& l) const {
  return impl_->cell(u, l);
}

std::vector<Diagram> CategorySpec::cell(std::size_t k, std::size_t l) const {
  return impl_->cell(Word::all_a(k), Word::all_a(l));
}

std::string CategorySpec::describe() const {
  switch (impl_->kind) {
    case Kind::Named:
      return "named:" + std::string(id_string(*impl_->id));
    case Kind::Generated:
      return "generated(cap " + std::to_string(impl_->max_points) + ", " +
             std::to_string(impl_->generators.size()) + " generators)";
    case Kind::Explicit:
      return "explicit(cap " + std::to_string(impl_->max_points) + ")";
    case Kind::Decomplexified: {
      CategorySpec p;
      p.impl_ = impl_->parent;
      return "decomplexified(" + p.describe() + ")";
    }
    case Kind::ParityMasked: {
      CategorySpec p;
      p.impl_ = impl_->parent;
      return "parity-masked(" + p.describe() + ")";
    }
  }
  return "?";
}

}  // namespace tlcat
