#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "tlcat/word.hpp"

namespace tlcat {

// Partition of the legs of a cell. Legs are numbered upper 0..k-1 left to
// right, then lower k..k+l-1 left to right. Blocks are sorted by smallest leg,
// legs ascending within a block.
struct LegPartition {
  std::size_t upper_legs = 0;
  std::size_t lower_legs = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const LegPartition&) const = default;
};

// Noncrossing perfect matching between an upper row of 2|upper| points and a
// lower row of 2|lower| points (each word letter spans two adjacent points).
// Points are numbered upper row 0..2|upper|-1 left to right, then lower row
// 2|upper|..2|upper|+2|lower|-1 left to right.
class Diagram {
 public:
  Diagram() = default;  // the empty diagram, cell (∅,∅)

  // validates: indices in range, perfect matching, noncrossing
  static Diagram from_pairs(Word upper, Word lower,
                            const std::vector<std::pair<int, int>>& pairs);

  const Word& upper() const { return upper_; }
  const Word& lower() const { return lower_; }
  std::size_t upper_points() const { return 2 * upper_.size(); }
  std::size_t lower_points() const { return 2 * lower_.size(); }
  std::size_t points() const { return partner_.size(); }
  int partner(int p) const { return partner_[p]; }

  // pairs as (min,max), sorted ascending; the canonical serialized form
  std::vector<std::pair<int, int>> pairs() const;

  // same matching, new words (lengths must match row for row)
  Diagram reworded(Word new_upper, Word new_lower) const;

  // --- colorings ----------------------------------------------------------
  // word rule: per letter, a -> (x,y), b -> (y,x), both rows
  // fixed rule: x,y,y,x,x,y,y,x,... along each row, restarting per row
  int mismatches_word_rule() const;
  int mismatches_fixed_rule() const;
  bool is_colored() const { return mismatches_word_rule() == 0; }
  bool is_half_colored() const { return mismatches_word_rule() % 2 == 0; }
  bool is_xyyx_colorable() const { return mismatches_fixed_rule() == 0; }

  // --- structure ----------------------------------------------------------
  LegPartition unfatten() const;
  // true iff every block of unfatten() has exactly two legs
  bool is_doubled() const;

  bool operator==(const Diagram&) const = default;
  // canonical order: (upper word, lower word, sorted pair list)
  std::strong_ordering operator<=>(const Diagram& o) const;

 private:
  friend class DiagramBuilder;
  Word upper_, lower_;
  std::vector<int> partner_;
};

struct ComposeResult {
  Diagram diagram;
  unsigned removed_components;  // rc: scalar factor is n^rc
};

// --- constructors ---------------------------------------------------------
Diagram identity(const Word& w);
// duality cap of u^w: the nested rainbow in cell (∅, w·rev_bar(w))
Diagram duality_cap(const Word& w);
// its involute, cell (w·rev_bar(w), ∅)
Diagram duality_cup(const Word& w);
// inverse of unfatten (words must have the partition's leg counts)
Diagram fatten(const LegPartition& p, const Word& upper, const Word& lower);

// --- operations -----------------------------------------------------------
Diagram tensor(const Diagram& d, const Diagram& e);
// glue d's lower row to e's upper row; throws WordMismatch unless
// d.lower() == e.upper(). removed_components counts the middle-leg graph
// components not connected to any surviving boundary point.
ComposeResult compose(const Diagram& d, const Diagram& e);
Diagram involute(const Diagram& d);   // vertical flip, swaps the words
Diagram conjugate(const Diagram& d);  // bar both words, matching unchanged
// interpret d as a matching in the single-point-per-string picture and split
// every point into two, every string into two parallel strings; the result
// carries all-a words (one letter per input point)
Diagram double_diagram(const Diagram& d);
// rotate all upper points down the left side: same matching in cell
// (∅, rev_bar(upper)·lower)
Diagram bend_to_fixed(const Diagram& d);

bool leg_partition_noncrossing(const LegPartition& p);

// canonical one-line rendering "(upper|lower) a-b c-d ...", "-" for an empty
// row; injective on diagrams, used by reports and witnesses
std::string to_text(const Diagram& d);

}  // namespace tlcat
