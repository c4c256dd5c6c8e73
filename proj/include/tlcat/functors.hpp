#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlcat/category.hpp"

namespace tlcat {

// --- passage between the orthogonal and unitary worlds ---------------------

// Embed an orthogonal spec into the unitary world. Every diagram of an
// even-difference cell (k,l) within max_points is re-worded to the
// alternating words (abab.., abab..) and taken as a generator; the result is
// the closure of those generators at max_points. Each embedded generator is
// checked to be half-colored (mismatch parity guarantees it), and fully
// colored when the source diagram is doubled or fits the fixed xyyx pattern;
// violations throw Internal. Throws InvalidArgument unless spec is
// orthogonal.
CategorySpec complexify(const CategorySpec& spec, unsigned max_points,
                        unsigned slack = 4, const ClosureProgress& progress = {});

// Restrict a unitary spec to its alternating-word cells, re-worded all-a.
// Throws InvalidArgument unless spec is unitary. The result keeps a handle
// to the parent (CategorySpec::unitary_parent).
CategorySpec decomplexify(const CategorySpec& spec, unsigned max_points);

// Empty every odd cell of an orthogonal spec, keep even cells unchanged.
// Throws InvalidArgument unless spec is orthogonal.
CategorySpec double_category(const CategorySpec& spec);

// --- level ------------------------------------------------------------------

// Smallest l such that the fixed-point cell at odd word length 2l+1 is
// nonempty; when every scanned odd cell is empty, value is unset and
// scanned_max_length records how far the scan actually went (clamped to the
// spec's materialized cap for closure-backed specs).
struct LevelResult {
  std::optional<std::size_t> value;
  std::size_t scanned_max_length = 0;

  bool above_cap() const { return !value.has_value(); }
};

// Scans l = 0..cap. Throws InvalidArgument unless spec is orthogonal.
LevelResult level(const CategorySpec& spec, std::size_t cap);

// --- moments ----------------------------------------------------------------

// m_k = size of the fixed-point cell at word length k: all-a words for
// orthogonal specs, alternating words for unitary ones; k = 0..max_k.
std::vector<std::size_t> moments(const CategorySpec& spec, std::size_t max_k);

// --- axiom and equivalence reports ------------------------------------------

struct AxiomCheck {
  std::string name;
  bool checked = false;  // false = not applicable to this spec, skipped
  bool passed = false;
  std::string witness;  // first counterexample in canonical order
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const AxiomCheck& c : checks)
      if (c.checked && !c.passed) return false;
    return true;
  }
};

// Checks, cell by cell within the point cap: identity diagrams present,
// duality caps present, closure under involution, composition and tensor.
// When the spec carries a unitary parent (it came from decomplexify), also
// verifies the three routed tensor-stability chains on the parent's
// alternating cells: direct concatenation for even left length, conjugation
// of the left factor for odd left length, and conjugation of the right
// factor when both are odd — including the word algebra and the equality of
// conjugated alternating cells these routes rely on.
AxiomReport verify_category_axioms(const CategorySpec& spec, unsigned cap);

struct EquivalenceReport {
  bool odd_cells_empty = false;
  bool doubling_fixed = false;
  bool within_parity = false;  // nonempty cells all have even length difference
  std::string witness_odd;
  std::string witness_doubling;
  std::string witness_parity;

  bool verdicts_agree() const {
    return odd_cells_empty == doubling_fixed && doubling_fixed == within_parity;
  }
  bool all_true() const {
    return odd_cells_empty && doubling_fixed && within_parity;
  }
};

// The three equivalent faces of "infinite level", each checked independently
// within the point cap. Throws InvalidArgument unless spec is orthogonal.
EquivalenceReport infinite_level_equivalences(const CategorySpec& spec,
                                              unsigned cap);

// --- cellwise comparison ----------------------------------------------------

struct CellMismatch {
  Word upper, lower;
  std::vector<Diagram> only_left;
  std::vector<Diagram> only_right;
};

// First cell (in canonical word order) within the point cap where the two
// specs disagree, or nullopt when they agree everywhere scanned. Scans all-a
// words when both specs are orthogonal, all words otherwise.
std::optional<CellMismatch> first_cell_mismatch(const CategorySpec& left,
                                                const CategorySpec& right,
                                                unsigned cap);

}  // namespace tlcat
