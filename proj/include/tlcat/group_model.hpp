#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tlcat/errors.hpp"

namespace tlcat {

// Finite group given by a Cayley table. Elements are indices into `elements`;
// `table[i][j]` is the product of element i by element j. Construction
// validates the axioms: identity, two-sided inverses, and associativity
// (checked exhaustively up to order 24, sampled above that).
struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<unsigned>> table;
  std::vector<unsigned> generators;  // indices of the chosen generators
  unsigned identity = 0;
  std::vector<unsigned> inverse;

  std::size_t size() const { return elements.size(); }
  unsigned mul(unsigned a, unsigned b) const { return table[a][b]; }
  unsigned inv(unsigned a) const { return inverse[a]; }

  // Validates and fills in identity/inverse; throws InvalidArgument when the
  // table is not a group or the generator indices are out of range.
  static FiniteGroup create(std::vector<std::string> elements,
                            std::vector<std::vector<unsigned>> table,
                            std::vector<unsigned> generators);
};

// JSON interchange: {"elements":[names],"table":[[indices]],"generators":[...]}
// where generators may be given as indices or element names.
FiniteGroup parse_cayley_json(const std::string& text);
std::string cayley_json(const FiniteGroup& g);

// Built-in groups: "z2", "z4", "z2xz2", "s3" (with their standard generator
// choices: one generator for z2, the pair {g, g^3} for z4, the two factors for
// z2xz2, and two transpositions for s3).
FiniteGroup builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

// One syllable of a word in the free product Z * G: either a nonzero power of
// the free generator z, or a group element. A reduced word alternates the two
// kinds, carries no zero powers, and no identity elements.
struct Syllable {
  int z_exp = 0;   // nonzero when this is a z-power syllable
  int gamma = -1;  // element index when this is a group syllable
  bool is_z() const { return gamma < 0; }
  bool operator==(const Syllable&) const = default;
};

struct FPWord {
  std::vector<Syllable> syllables;
  bool empty() const { return syllables.empty(); }
  bool operator==(const FPWord&) const = default;
};

// Normal form of an arbitrary syllable sequence: merge adjacent syllables of
// the same kind, drop trivial ones, repeat. The result is the unique reduced
// alternating form; reduce is idempotent.
FPWord reduce(const FiniteGroup& g, const std::vector<Syllable>& raw);

FPWord fp_mul(const FiniteGroup& g, const FPWord& a, const FPWord& b);
FPWord fp_inverse(const FiniteGroup& g, const FPWord& a);
FPWord fp_z(int exp);
FPWord fp_gamma(const FiniteGroup& g, unsigned element);

// Rendering such as "z^2.g.z^-1" using the group's element names; the empty
// word renders as "e".
std::string fp_text(const FiniteGroup& g, const FPWord& w);

// Compact byte serialization, injective on reduced words; used as a hash key.
std::string fp_key(const FPWord& w);

// Subgroup generated by the pairwise quotients g_i^-1 g_j of the group's
// generators, as a sorted list of element indices. Throws InvalidArgument
// when the generators do not generate the whole group.
std::vector<unsigned> lambda_subgroup(const FiniteGroup& g);

// The word map behind the embedding check: z -> z g_1 and every group
// syllable to itself (or to the identity when `lambda_to_identity` is set,
// which breaks the map on purpose). A homomorphism on reduced words.
FPWord embed_word(const FiniteGroup& g, const FPWord& w,
                  bool lambda_to_identity = false);

// Result of the desk-scale free-product embedding check. With generators
// g_1..g_n and t_i = z g_i inside Z * G, the subgroup generated by the t_i is
// isomorphic to Z * L, where L is the subgroup generated by the g_i^-1 g_j.
// The check realizes the isomorphism as the word map z -> z g_1, l -> l and
// verifies it on metric balls:
//   (a) injectivity on the radius-r ball of Z * L,
//   (b) every image lies in the t-subgroup ball of radius 2r (each source
//       generator maps to a word of t-length at most 2),
//   (c) the radius-r t-subgroup ball is covered by images of the radius-2r
//       source ball (each t-generator pulls back to a word of length 2).
// Every generator (z, each lambda generator, each t_i, and their inverses)
// counts as length 1 in the ball metrics.
struct EmbeddingReport {
  std::vector<unsigned> lambda;            // element indices, sorted
  std::vector<std::string> lambda_names;
  unsigned radius = 0;
  std::vector<std::size_t> ball_source;    // |ball of Z*L|, radii 0..r
  std::vector<std::size_t> ball_image;     // |image of that ball|, radii 0..r
  std::vector<std::size_t> ball_subgroup;  // |ball of <t_1..t_n>|, radii 0..r
  bool injective = false;
  bool image_in_subgroup = false;
  bool subgroup_covered = false;
  std::string witness;  // first failure, empty when all three checks pass
  bool all_passed() const {
    return injective && image_in_subgroup && subgroup_covered;
  }
};

// Runs the three ball checks at the given radius (guard: radius <= 8).
// `lambda_to_identity` deliberately corrupts the word map by sending every
// group syllable to the identity; the corrupted map must be rejected whenever
// L is nontrivial, which is the negative control for the test harness.
EmbeddingReport verify_free_product_embedding(const FiniteGroup& g,
                                              unsigned radius,
                                              bool lambda_to_identity = false);

}  // namespace tlcat
