#pragma once

#include <optional>

#include "posalg/linalg.hpp"
#include "posalg/tensor.hpp"

namespace posalg {

// Full diagonalization of a commutative semisimple algebra with rational
// structure constants over a cyclotomic field: the n primitive idempotents
// and the n algebra characters evaluated on the distinguished basis.
//
// Splitting succeeds when every eigenvalue of every left-multiplication
// operator is rational or a root of unity of supported order; minimal
// polynomials are factored into rational linear factors and cyclotomic
// polynomials. This covers every algebra in the catalogs (abelian group
// exponents are <= 16). Failure to split returns nullopt, never a wrong
// answer.
struct CommutativeSplit {
  long field_order = 1;  // all values live in Q(zeta_field_order)
  CycMat idempotents;    // idempotents[i] = coefficients of E_i
  CycMat characters;     // characters[i][j] = chi_i(x_j), chi_i dual to E_i
};

std::optional<CommutativeSplit> split_commutative(const StructureTensor& mult);

// Roots of a monic rational polynomial when they are all rational or roots
// of unity; nullopt otherwise. Multiple roots are reported multiply.
std::optional<CycVec> cyclotomic_roots(const RatVec& monic_poly);

// x_i . x_j extended to cyclotomic coefficient vectors.
CycVec tensor_product_cyc(const StructureTensor& mult, const CycVec& u,
                          const CycVec& v);

CycVec mat_apply_cyc(const RatMat& m, const CycVec& v);

}  // namespace posalg
