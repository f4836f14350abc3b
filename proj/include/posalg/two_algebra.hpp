#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posalg/cyclotomic.hpp"
#include "posalg/tensor.hpp"

namespace posalg {

// Antilinear map on the distinguished basis: v -> matrix * conj(v).
// Every involution and coinvolution in scope has a rational matrix, so
// conjugation only matters when the map is applied to cyclotomic vectors.
struct AntilinearMap {
  RatMat matrix;

  long dim() const { return static_cast<long>(matrix.size()); }
  RatVec apply(const RatVec& v) const { return mat_apply(matrix, v); }
  CycVec apply_conj(const CycVec& v) const;

  static AntilinearMap identity(long n) { return {identity_matrix(n)}; }
  static AntilinearMap permutation(const std::vector<long>& perm);
  bool operator==(const AntilinearMap&) const = default;
};

// The distinguished-basis package carried by every algebra the workbench
// touches: multiplication and comultiplication tensors, unit vector,
// counit covector, involution and coinvolution.
struct TwoAlgebra {
  long dim = 0;
  StructureTensor mult;    // x_i . x_j = sum_k mult[i][j][k] x_k
  RatVec unit;             // coefficients of the algebra unit
  StructureTensor comult;  // Delta x_i = sum mult[i][j][k] x_j (x) x_k
  RatVec counit;           // covector
  AntilinearMap invol;     // sharp
  AntilinearMap coinvol;   // flat
  std::vector<std::string> labels;  // optional

  RatVec product(const RatVec& u, const RatVec& v) const {
    return tensor_product(mult, u, v);
  }
  RatVec basis_vector(long i) const {
    RatVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  }
  Rational counit_of(const RatVec& v) const {
    Rational s(0);
    for (long i = 0; i < dim; ++i)
      if (!is_zero(v[i])) s += counit[i] * v[i];
    return s;
  }

  bool comult_diagonal() const;
  bool commutative() const;
  bool cocommutative() const;

  // Entrywise equality in the distinguished basis.
  bool operator==(const TwoAlgebra&) const = default;
};

// Entrywise equality after relabeling basis i of a by perm[i] of b.
bool isomorphic_under(const TwoAlgebra& a, const TwoAlgebra& b,
                      const std::vector<long>& perm);

}  // namespace posalg
