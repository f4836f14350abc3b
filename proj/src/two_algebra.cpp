#include "posalg/two_algebra.hpp"

namespace posalg {

CycVec AntilinearMap::apply_conj(const CycVec& v) const {
  long n = dim();
  CycVec out(n);
  for (long i = 0; i < n; ++i) {
    Cyclotomic acc;
    for (long j = 0; j < n; ++j)
      if (!is_zero(matrix[i][j]))
        acc += Cyclotomic(matrix[i][j]) * v[j].conj();
    out[i] = acc;
  }
  return out;
}

AntilinearMap AntilinearMap::permutation(const std::vector<long>& perm) {
  long n = static_cast<long>(perm.size());
  RatMat m(n, RatVec(n, Rational(0)));
  for (long j = 0; j < n; ++j) m[perm[j]][j] = 1;
  return {m};
}

bool TwoAlgebra::comult_diagonal() const {
  for (const auto& [key, value] : comult.entries()) {
    if (key[0] != key[1] || key[1] != key[2]) return false;
    if (value != Rational(1)) return false;
  }
  // every basis element must be grouplike
  return static_cast<long>(comult.entries().size()) == dim;
}

bool TwoAlgebra::commutative() const {
  for (const auto& [key, value] : mult.entries())
    if (mult.get(key[1], key[0], key[2]) != value) return false;
  return true;
}

bool TwoAlgebra::cocommutative() const {
  for (const auto& [key, value] : comult.entries())
    if (comult.get(key[0], key[2], key[1]) != value) return false;
  return true;
}

bool isomorphic_under(const TwoAlgebra& a, const TwoAlgebra& b,
                      const std::vector<long>& perm) {
  if (a.dim != b.dim || static_cast<long>(perm.size()) != a.dim) return false;
  for (const auto& [key, value] : a.mult.entries())
    if (b.mult.get(perm[key[0]], perm[key[1]], perm[key[2]]) != value)
      return false;
  if (a.mult.entries().size() != b.mult.entries().size()) return false;
  for (const auto& [key, value] : a.comult.entries())
    if (b.comult.get(perm[key[0]], perm[key[1]], perm[key[2]]) != value)
      return false;
  if (a.comult.entries().size() != b.comult.entries().size()) return false;
  for (long i = 0; i < a.dim; ++i) {
    if (a.unit[i] != b.unit[perm[i]]) return false;
    if (a.counit[i] != b.counit[perm[i]]) return false;
    for (long j = 0; j < a.dim; ++j) {
      if (a.invol.matrix[i][j] != b.invol.matrix[perm[i]][perm[j]])
        return false;
      if (a.coinvol.matrix[i][j] != b.coinvol.matrix[perm[i]][perm[j]])
        return false;
    }
  }
  return true;
}

}  // namespace posalg
