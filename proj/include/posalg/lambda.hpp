#pragma once

#include <optional>

#include "posalg/checks.hpp"
#include "posalg/splitting.hpp"
#include "posalg/two_algebra.hpp"

namespace posalg {

// The two-dimensional family in the basis {1, u}:
//   u^2 = (1 - lambda) u + lambda 1,   Delta(u) = u (x) u,
// sharp = flat = coefficient conjugation, counit(1) = counit(u) = 1.
// The counit value 1 on u is the algebra character that satisfies the
// counit law with the diagonal comultiplication; the algebra's other
// character sends u to -lambda.
TwoAlgebra a_lambda(const Rational& lambda);

// Canonical-form classification of a two-dimensional 2-algebra.
struct TwoDimClass {
  enum class Kind { Lambda, NotSemisimple, NotPositive } kind;
  Rational lambda;  // valid for Kind::Lambda
  std::string detail;
};
TwoDimClass classify_2dim(const TwoAlgebra& a);

// Strict-dilation predicate for A_lambda into commutative group algebras:
// lambda in (0,1] qualifies iff alpha = (1-lambda)^2 / lambda has the form
// k (s-1)^2 / s for positive integers k, s (equivalently iff lambda is a
// positive root of z^2 - (2+alpha) z + 1 = 0 for such alpha). Rational
// lambda reduce to lambda = 1/n with (k,s) = (1,n); the search over s is
// exhaustive up to numerator*denominator(alpha) + 1.
struct StrictDilationPrediction {
  bool strict_predicted = false;
  long k = 0;
  long s = 0;
};
StrictDilationPrediction strict_dilation_predicate(const Rational& lambda);

// Square matrix with unit first row and column whose coordinatewise row
// (column) products are convex combinations of rows (columns).
struct QuasiCharacterMatrix {
  CycMat entries;
  long dim() const { return static_cast<long>(entries.size()); }
  bool operator==(const QuasiCharacterMatrix& o) const {
    if (dim() != o.dim()) return false;
    for (long i = 0; i < dim(); ++i)
      for (long j = 0; j < dim(); ++j)
        if (!(entries[i][j] == o.entries[i][j])) return false;
    return true;
  }
};

// Rows are the algebra characters evaluated on the grouplike basis, unit
// row and unit column first, remaining rows in serialized order. Validates
// the convex-combination property for rows and columns and throws on
// violation or non-bicommutative input.
QuasiCharacterMatrix quasicharacter_matrix(const TwoAlgebra& a);

// Lexicographically minimal relabeling over row and column permutations
// fixing the pinned first row and column; column_map sends canonical column
// positions to original basis indices.
struct CanonicalQuasiCharacter {
  QuasiCharacterMatrix matrix;
  std::vector<long> column_map;
};
CanonicalQuasiCharacter canonical_quasicharacter(const QuasiCharacterMatrix& q);

}  // namespace posalg
