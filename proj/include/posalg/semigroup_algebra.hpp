#pragma once

#include "posalg/checks.hpp"
#include "posalg/monoid.hpp"
#include "posalg/two_algebra.hpp"

namespace posalg {

// Basis = semigroup elements, Delta(s) = s (x) s, counit(s) = 1,
// sharp sends s to s*, flat is coefficientwise conjugation. The algebra
// unit is solved for; when S itself has no identity element the result is
// weakened: homogeneity fails at Delta(1) = 1 (x) 1 while the bialgebra
// laws still hold.
struct SemigroupBialgebra {
  TwoAlgebra algebra;
  bool weakened = false;
};

SemigroupBialgebra semigroup_bialgebra(const InverseSemigroup& s);

// Group tables get the same construction with sharp = inverse map.
TwoAlgebra group_bialgebra(const FiniteMonoid& g);

// dual(semigroup_bialgebra(s)): pointwise multiplication on functions,
// convolution comultiplication.
SemigroupBialgebra dual_semigroup_bialgebra(const InverseSemigroup& s);

// Dimensions of the simple blocks (each a perfect square summing to dim),
// computed by splitting the center over the needed cyclotomic orders and
// measuring block ranks. Throws when the center fails to split over the
// supported orders.
std::vector<long> wedderburn_dims(const TwoAlgebra& a);

// The linear extension of s -> s^{-1} is an almost antipode: its left and
// right convolutions with the identity map send a to a a^{-1} and a^{-1} a,
// are idempotent operators, and project onto the span of the semigroup
// idempotents.
Verdict almost_antipode_check(const TwoAlgebra& a, const InverseSemigroup& s);

// Executable converse of the semigroup-bialgebra construction: read the
// spectrum of the dual algebra and the binary operation induced by the
// comultiplication on it. recover_semigroup(semigroup_bialgebra(S).algebra)
// returns S's labeled table.
struct RecoveredSemigroup {
  Verdict verdict;
  FiniteMonoid monoid;    // valid when verdict holds
  std::vector<long> inv;  // involution read from sharp
};
RecoveredSemigroup recover_semigroup(const TwoAlgebra& a);

}  // namespace posalg
