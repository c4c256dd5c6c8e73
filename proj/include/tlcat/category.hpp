#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlcat/diagram.hpp"

namespace tlcat {

// The seven named categories. The first four are orthogonal (all-a words
// only), the last three are unitary (arbitrary words).
enum class CategoryId { O, H, S, SPrime, U, K, P };

inline constexpr CategoryId all_category_ids[] = {
    CategoryId::O, CategoryId::H,      CategoryId::S, CategoryId::SPrime,
    CategoryId::U, CategoryId::K,      CategoryId::P};

std::string_view id_string(CategoryId id);  // o, h, s, s-prime, u, k, p
std::optional<CategoryId> parse_category(std::string_view s);
bool is_orthogonal_id(CategoryId id);

// same surplus of a-letters over b-letters in both words; conserved by every
// category operation, so unitary cells are empty when it fails
bool words_balanced(const Word& upper, const Word& lower);

// Membership test behind the p category. Model each boundary letter as a
// winding token plus a block token (the string component of its two points),
// then repeatedly cancel adjacent opposite windings, merge adjacent equal
// blocks, and drop any block down to a single occurrence. The diagram's
// delta tensor is a morphism exactly when the stream empties. An even
// mismatch count alone is weaker: it also admits same-color pair blocks
// that no composite of the generators can produce.
bool collapses_to_scalar(const Diagram& d);

// predicate membership in the named category (words included in the test)
bool member_named(CategoryId id, const Diagram& d);

// all members of the named category's cell, canonical order
std::vector<Diagram> predicate_cell(CategoryId id, const Word& upper,
                                    const Word& lower);

// the published generator list of the named category
std::vector<Diagram> standard_generators(CategoryId id);

// named generator diagrams, for reports and tests
Diagram cap_plain();    // (∅, aa), the doubled cap
Diagram block4(const Word& upper, const Word& lower);  // |∪∩| reworded
Diagram jdiag(const Word& upper, const Word& lower);   // ∪ over ∩ reworded
Diagram unit_cap();     // (∅, a)

struct ClosureStats {
  unsigned round = 0;
  std::size_t frontier = 0;
  std::size_t discovered = 0;
};
using ClosureProgress = std::function<void(const ClosureStats&)>;

// A concrete category: a named predicate family, a generated (materialized)
// family, a decomplexified view of a unitary spec, or a parity mask that
// empties the odd cells of an orthogonal spec.
class CategorySpec {
 public:
  enum class Kind { Named, Generated, Explicit, Decomplexified, ParityMasked };

  static CategorySpec named(CategoryId id);
  // materialized list of diagrams bucketed into cells; for tests and for the
  // closure engine
  static CategorySpec explicit_cells(std::vector<Diagram> diagrams,
                                     unsigned max_points);
  static CategorySpec generated(std::vector<Diagram> generators,
                                std::vector<Diagram> diagrams,
                                unsigned max_points, unsigned slack);
  static CategorySpec decomplexified(CategorySpec unitary_parent,
                                     unsigned max_points);
  static CategorySpec parity_masked(CategorySpec inner);

  Kind kind() const;
  std::optional<CategoryId> id() const;
  bool orthogonal() const;
  // 0 means unbounded (named predicates answer at any size)
  unsigned max_points() const;
  const std::vector<Diagram>& generators() const;  // empty unless Generated
  // the unitary spec a Decomplexified view was built from, else null
  const CategorySpec* unitary_parent() const;

  // throws CapExceeded when a materialized spec is asked beyond its cap
  bool member(const Diagram& d) const;
  std::vector<Diagram> cell(const Word& upper, const Word& lower) const;
  std::vector<Diagram> cell(std::size_t k, std::size_t l) const;  // all-a rows

  std::string describe() const;

  struct Impl;  // opaque

 private:
  std::shared_ptr<const Impl> impl_;
};

// Saturate the generators together with identities and duality caps under
// tensor, compose, involute, and conjugate, keeping every intermediate of at
// most max_points+slack points, then truncate to max_points. Orthogonal
// generator sets (all all-a) stay in the all-a world; unitary ones range over
// all words. Deterministic; max_points+slack must be at most 16.
CategorySpec closure(const std::vector<Diagram>& generators,
                     unsigned max_points, unsigned slack,
                     const ClosureProgress& progress = {});

}  // namespace tlcat
