#include "tlcat/linear.hpp"

#include <algorithm>
#include <utility>

#include "tlcat/errors.hpp"

namespace tlcat {
namespace {

std::size_t checked_pow(unsigned base, std::size_t exp, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / std::max(1u, base))
      throw CapExceeded("dense tensor would exceed the size guard");
    v *= base;
  }
  return v;
}

BigInt big_pow(unsigned base, unsigned exp) {
  BigInt v = 1;
  for (unsigned i = 0; i < exp; ++i) v *= base;
  return v;
}

constexpr std::size_t dense_size_limit = 1u << 24;

}  // namespace

TensorMap realize(const Diagram& d, unsigned n) {
  if (n == 0) throw InvalidArgument("realize: n must be positive");
  LegPartition lp = d.unfatten();
  const std::size_t k = lp.upper_legs, l = lp.lower_legs, total = k + l;
  TensorMap m;
  m.n = n;
  m.upper_legs = k;
  m.lower_legs = l;
  m.coeff.assign(checked_pow(n, total, dense_size_limit), 0);

  // tuple layout (lower legs..., upper legs...), row-major
  std::vector<std::size_t> weight(total, 1);
  for (std::size_t i = total; i-- > 1;) weight[i - 1] = weight[i] * n;
  auto tuple_pos = [&](int leg) -> std::size_t {
    return leg < static_cast<int>(k) ? l + leg : leg - k;
  };

  // walk assignments that are constant on blocks: one digit per block
  const std::size_t nb = lp.blocks.size();
  std::vector<std::size_t> block_weight(nb, 0);
  for (std::size_t b = 0; b < nb; ++b)
    for (int leg : lp.blocks[b]) block_weight[b] += weight[tuple_pos(leg)];
  std::vector<unsigned> val(nb, 0);
  for (;;) {
    std::size_t flat = 0;
    for (std::size_t b = 0; b < nb; ++b) flat += val[b] * block_weight[b];
    m.coeff[flat] = 1;
    std::size_t b = 0;
    while (b < nb && ++val[b] == n) val[b++] = 0;
    if (b == nb) break;
  }
  return m;
}

TensorMap tensor_product(const TensorMap& a, const TensorMap& b) {
  if (a.n != b.n) throw InvalidArgument("tensor_product: dimension mismatch");
  const std::size_t n = a.n;
  std::size_t rows_a = 1, cols_a = 1, rows_b = 1, cols_b = 1;
  for (std::size_t i = 0; i < a.lower_legs; ++i) rows_a *= n;
  for (std::size_t i = 0; i < a.upper_legs; ++i) cols_a *= n;
  for (std::size_t i = 0; i < b.lower_legs; ++i) rows_b *= n;
  for (std::size_t i = 0; i < b.upper_legs; ++i) cols_b *= n;

  TensorMap r;
  r.n = a.n;
  r.upper_legs = a.upper_legs + b.upper_legs;
  r.lower_legs = a.lower_legs + b.lower_legs;
  r.coeff.assign(checked_pow(a.n, r.upper_legs + r.lower_legs, dense_size_limit), 0);
  const std::size_t cols = cols_a * cols_b;
  for (std::size_t ra = 0; ra < rows_a; ++ra)
    for (std::size_t ca = 0; ca < cols_a; ++ca) {
      std::int64_t va = a.coeff[ra * cols_a + ca];
      if (va == 0) continue;
      for (std::size_t rb = 0; rb < rows_b; ++rb)
        for (std::size_t cb = 0; cb < cols_b; ++cb) {
          std::int64_t vb = b.coeff[rb * cols_b + cb];
          if (vb == 0) continue;
          r.coeff[(ra * rows_b + rb) * cols + (ca * cols_b + cb)] = va * vb;
        }
    }
  return r;
}

TensorMap compose_maps(const TensorMap& e, const TensorMap& d) {
  if (e.n != d.n) throw InvalidArgument("compose_maps: dimension mismatch");
  if (e.upper_legs != d.lower_legs)
    throw InvalidArgument("compose_maps: inner leg counts differ");
  const std::size_t n = d.n;
  std::size_t mid = 1, cols = 1, rows = 1;
  for (std::size_t i = 0; i < d.lower_legs; ++i) mid *= n;
  for (std::size_t i = 0; i < d.upper_legs; ++i) cols *= n;
  for (std::size_t i = 0; i < e.lower_legs; ++i) rows *= n;

  TensorMap r;
  r.n = d.n;
  r.upper_legs = d.upper_legs;
  r.lower_legs = e.lower_legs;
  r.coeff.assign(checked_pow(d.n, r.upper_legs + r.lower_legs, dense_size_limit), 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t m = 0; m < mid; ++m) {
      std::int64_t ev = e.coeff[i * mid + m];
      if (ev == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        r.coeff[i * cols + j] += ev * d.coeff[m * cols + j];
    }
  return r;
}

TensorMap transpose(const TensorMap& m) {
  std::size_t rows = 1, cols = 1;
  for (std::size_t i = 0; i < m.lower_legs; ++i) rows *= m.n;
  for (std::size_t i = 0; i < m.upper_legs; ++i) cols *= m.n;
  TensorMap r;
  r.n = m.n;
  r.upper_legs = m.lower_legs;
  r.lower_legs = m.upper_legs;
  r.coeff.assign(m.coeff.size(), 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.coeff[j * rows + i] = m.coeff[i * cols + j];
  return r;
}

TensorMap scale(TensorMap m, std::int64_t s) {
  for (auto& c : m.coeff) c *= s;
  return m;
}

FunctorialCheck check_functorial(const Diagram& d, const Diagram& e, unsigned n) {
  ComposeResult cr = compose(d, e);
  std::int64_t factor = 1;
  for (unsigned i = 0; i < cr.removed_components; ++i) factor *= n;
  TensorMap lhs = scale(realize(cr.diagram, n), factor);
  TensorMap rhs = compose_maps(realize(e, n), realize(d, n));
  return {lhs == rhs, cr.removed_components};
}

std::size_t rank_exact(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  while (rank < rows && rank < cols) {
    std::size_t pi = rank, pj = rank;
    bool found = false;
    for (std::size_t i = rank; i < rows && !found; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
          break;
        }
    if (!found) break;
    std::swap(m[rank], m[pi]);
    if (pj != rank)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][rank], m[i][pj]);
    const BigInt& piv = m[rank][rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j)
        m[i][j] = (piv * m[i][j] - m[i][rank] * m[rank][j]) / prev;
      m[i][rank] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

GramMatrix gram(const std::vector<Diagram>& cell, unsigned n) {
  if (n == 0) throw InvalidArgument("gram: n must be positive");
  GramMatrix g;
  g.n = n;
  g.basis = cell;
  std::sort(g.basis.begin(), g.basis.end());
  for (std::size_t i = 1; i < g.basis.size(); ++i)
    if (g.basis[i].upper() != g.basis[0].upper() || g.basis[i].lower() != g.basis[0].lower())
      throw InvalidArgument("gram: diagrams come from different cells");

  std::vector<Diagram> bent, bent_inv;
  bent.reserve(g.basis.size());
  for (const Diagram& d : g.basis) {
    bent.push_back(bend_to_fixed(d));
    bent_inv.push_back(involute(bent.back()));
  }
  const std::size_t m = g.basis.size();
  g.entries.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      ComposeResult cr = compose(bent[i], bent_inv[j]);
      BigInt v = big_pow(n, cr.removed_components);
      g.entries[i][j] = v;
      g.entries[j][i] = v;
    }
  return g;
}

std::size_t span_dim_oracle(const std::vector<Diagram>& cell, unsigned n) {
  if (cell.empty()) return 0;
  if (n == 0 || n > dense_guard_n)
    throw CapExceeded("span_dim_oracle: n beyond the dense guard");
  if (cell[0].points() > dense_guard_points)
    throw CapExceeded("span_dim_oracle: cell beyond the dense guard");
  Matrix coeffs;
  coeffs.reserve(cell.size());
  for (const Diagram& d : cell) {
    TensorMap t = realize(d, n);
    std::vector<BigInt> row(t.coeff.size());
    for (std::size_t i = 0; i < t.coeff.size(); ++i) row[i] = t.coeff[i];
    coeffs.push_back(std::move(row));
  }
  return rank_exact(std::move(coeffs));
}

unsigned gram_rank_stabilization(const std::vector<Diagram>& cell, unsigned limit) {
  unsigned n0 = 0;
  for (unsigned n = limit; n >= 1; --n) {
    if (rank_exact(gram(cell, n).entries) != cell.size()) break;
    n0 = n;
  }
  return n0;
}

}  // namespace tlcat
