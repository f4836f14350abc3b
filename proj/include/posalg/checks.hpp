#pragma once

#include "posalg/two_algebra.hpp"
#include "posalg/verdict.hpp"

namespace posalg {

enum class Side { Algebra, Coalgebra };

// Associativity, unit law, coassociativity, counit law. Checks run in that
// order of cost (unit and counit laws first); a Fails verdict reports the
// first violated identity with its indices.
Verdict validate_2_algebra(const TwoAlgebra& a);

// sharp is a second-order antilinear antiautomorphism of the algebra,
// flat one of the coalgebra, Delta commutes with sharp and the
// multiplication commutes with flat.
Verdict check_involutive(const TwoAlgebra& a);

// Delta and the counit are algebra homomorphisms (unit compatibility of
// Delta is homogeneity's business, not this check's).
Verdict is_bialgebra(const TwoAlgebra& a);

// Trace form of the left regular representation is nondegenerate
// (Dickson criterion, valid over characteristic 0). The coalgebra side
// applies the same criterion to the dual.
Verdict is_semisimple(const TwoAlgebra& a, Side side);

struct PositivityVerdict {
  Verdict mult;
  Verdict comult;
  bool no_fails() const { return !mult.fails() && !comult.fails(); }
  bool both_hold() const { return mult.holds() && comult.holds(); }
};

// Tiered positivity check, strongest applicable tier wins:
//   Tier 2 (exact): bicommutative semisimple algebras with a grouplike
//     distinguished basis are diagonalized over their characters and cone
//     preservation is decided exactly.
//   Tier 1 (sufficient): when sharp and flat act as signed permutations of
//     the basis and every structure constant of both tensors is
//     nonnegative, both operations are positive.
//   Tier 3: Inconclusive (recognition is NP-complete in general).
PositivityVerdict check_positivity(const TwoAlgebra& a);

// counit is an algebra character compatible with sharp, and
// Delta(1) = 1 (x) 1.
Verdict check_homogeneity(const TwoAlgebra& a);

// Conjunction of all of the above; Inconclusive propagates.
Verdict check_positive_2_algebra(const TwoAlgebra& a);

// The dual 2-algebra: transposed tensors, unit and counit swapped,
// involutions transposed across the pairing. An involution of the
// construction: dual(dual(a)) == a entrywise.
TwoAlgebra dual(const TwoAlgebra& a);

// Left regular representation matrix of basis element i.
RatMat left_multiplication_matrix(const TwoAlgebra& a, long i);

// Trace form B(i,j) = tr(L_i L_j).
RatMat trace_form(const TwoAlgebra& a);

}  // namespace posalg
