#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "tlcat/diagram.hpp"

namespace tlcat {

using BigInt = boost::multiprecision::cpp_int;

// Dense linear map attached to a diagram at dimension n: one index in
// {0..n-1} per leg, upper legs are inputs, lower legs are outputs. The flat
// layout is row-major over the tuple (lower legs..., upper legs...).
struct TensorMap {
  unsigned n = 1;
  std::size_t upper_legs = 0;
  std::size_t lower_legs = 0;
  std::vector<std::int64_t> coeff;

  std::size_t size() const { return coeff.size(); }
  bool operator==(const TensorMap&) const = default;
};

// delta map of the diagram's leg partition: coefficient 1 on assignments that
// are constant on every block, 0 elsewhere
TensorMap realize(const Diagram& d, unsigned n);

TensorMap tensor_product(const TensorMap& a, const TensorMap& b);
// (e ∘ d): apply d first; d's lower legs are summed against e's upper legs
TensorMap compose_maps(const TensorMap& e, const TensorMap& d);
TensorMap transpose(const TensorMap& m);  // realize(involute(d)) = transpose(realize(d))
TensorMap scale(TensorMap m, std::int64_t s);

// exact check of realize(compose(d,e).diagram) * n^rc == realize(e) ∘ realize(d)
struct FunctorialCheck {
  bool ok = false;
  unsigned removed_components = 0;
};
FunctorialCheck check_functorial(const Diagram& d, const Diagram& e, unsigned n);

// --- exact linear algebra ---------------------------------------------------

using Matrix = std::vector<std::vector<BigInt>>;

// rank by fraction-free (Bareiss) elimination with full pivoting
std::size_t rank_exact(Matrix m);

struct GramMatrix {
  std::vector<Diagram> basis;  // canonical cell order
  unsigned n = 1;
  Matrix entries;              // entries[i][j] = n^rc(compose(bend(b_i), involute(bend(b_j))))
};

// guards: n <= dense_guard_n is enforced by span_dim_oracle only; gram itself
// is combinatorial and accepts any n >= 1
GramMatrix gram(const std::vector<Diagram>& cell, unsigned n);

// dimension of the span of the realized tensors, by exact elimination on the
// coefficient matrix; independent route from the gram ranks
std::size_t span_dim_oracle(const std::vector<Diagram>& cell, unsigned n);

inline constexpr unsigned dense_guard_n = 4;
inline constexpr unsigned dense_guard_points = 16;

// smallest n0 <= limit with rank(gram) == |cell| for every n in [n0, limit];
// 0 if none
unsigned gram_rank_stabilization(const std::vector<Diagram>& cell, unsigned limit);

}  // namespace tlcat
