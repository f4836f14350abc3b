#pragma once

#include <optional>
#include <vector>

#include "posalg/cyclotomic.hpp"
#include "posalg/rational.hpp"

namespace posalg {

namespace field {
inline Rational zero(const Rational*) { return Rational(0); }
inline Rational one(const Rational*) { return Rational(1); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational invert(const Rational& x) { return Rational(1) / x; }
inline Cyclotomic zero(const Cyclotomic*) { return Cyclotomic(); }
inline Cyclotomic one(const Cyclotomic*) { return Cyclotomic(Rational(1)); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic invert(const Cyclotomic& x) { return x.inverse(); }
}  // namespace field

// Row echelon form in place; returns pivot columns. Exact arithmetic, no
// pivot-size heuristics needed.
template <typename F>
std::vector<long> row_reduce(std::vector<std::vector<F>>& m) {
  const F* tag = nullptr;
  std::vector<long> pivots;
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long p = -1;
    for (long i = r; i < rows; ++i)
      if (!field::is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    F inv = field::invert(m[r][c]);
    for (long j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || field::is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (long j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  (void)tag;
  return pivots;
}

template <typename F>
long matrix_rank(std::vector<std::vector<F>> m) {
  return static_cast<long>(row_reduce(m).size());
}

// Basis of the right kernel of m.
template <typename F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> m) {
  const F* tag = nullptr;
  long cols = m.empty() ? 0 : static_cast<long>(m[0].size());
  std::vector<long> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, field::zero(tag));
    v[free] = field::one(tag);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field::zero(tag) - m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m x = b; nullopt when inconsistent.
template <typename F>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> m,
                                           const std::vector<F>& b) {
  const F* tag = nullptr;
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  for (long i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<long> pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, field::zero(tag));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

// Expresses b in the span of the given vectors (as columns); nullopt when b
// lies outside the span.
template <typename F>
std::optional<std::vector<F>> coordinates_in_span(
    const std::vector<std::vector<F>>& span_vectors, const std::vector<F>& b) {
  const F* tag = nullptr;
  if (span_vectors.empty()) {
    for (const auto& x : b)
      if (!field::is_zero(x)) return std::nullopt;
    return std::vector<F>{};
  }
  long n = static_cast<long>(span_vectors[0].size());
  long m = static_cast<long>(span_vectors.size());
  std::vector<std::vector<F>> sys(n, std::vector<F>(m, field::zero(tag)));
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < n; ++i) sys[i][j] = span_vectors[j][i];
  return solve_linear(std::move(sys), b);
}

std::optional<RatMat> matrix_inverse(const RatMat& m);

// Monic minimal polynomial of a square rational matrix, coefficients in
// ascending degree order.
RatVec minimal_polynomial(const RatMat& m);

}  // namespace posalg
