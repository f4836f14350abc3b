#include "posalg/linalg.hpp"

namespace posalg {

std::optional<RatMat> matrix_inverse(const RatMat& m) {
  long n = static_cast<long>(m.size());
  RatMat aug(n, RatVec(2 * n, Rational(0)));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug);
  if (static_cast<long>(pivots.size()) < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVec minimal_polynomial(const RatMat& m) {
  long n = static_cast<long>(m.size());
  // Stack powers I, M, M^2, ... as flat vectors until linearly dependent.
  std::vector<RatVec> powers;
  RatMat p = identity_matrix(n);
  for (long d = 0; d <= n; ++d) {
    RatVec flat;
    flat.reserve(n * n);
    for (const auto& row : p) flat.insert(flat.end(), row.begin(), row.end());
    auto coords = coordinates_in_span(powers, flat);
    if (coords) {
      RatVec poly(*coords);
      for (auto& c : poly) c = -c;
      poly.push_back(Rational(1));
      return poly;
    }
    powers.push_back(std::move(flat));
    p = mat_mul(p, m);
  }
  throw Error("minimal polynomial not found");  // unreachable
}

}  // namespace posalg
