#pragma once

#include "posalg/lambda.hpp"
#include "posalg/monoid.hpp"
#include "posalg/semigroup_algebra.hpp"

// Shared constructions for the test suites.
inline posalg::TwoAlgebra cyclic_bialgebra(long n) {
  using namespace posalg;
  return group_bialgebra(build_group(cyclic_spec(n)));
}

inline posalg::TwoAlgebra s3_bialgebra() {
  using namespace posalg;
  return group_bialgebra(build_group(symmetric_spec(3)));
}

// Truncated polynomials Q[x]/x^2 with the primitive comultiplication.
inline posalg::TwoAlgebra truncated_polynomials() {
  using namespace posalg;
  TwoAlgebra a;
  a.dim = 2;
  a.mult = StructureTensor(2);
  a.mult.set(0, 0, 0, Rational(1));
  a.mult.set(0, 1, 1, Rational(1));
  a.mult.set(1, 0, 1, Rational(1));
  a.comult = StructureTensor(2);
  a.comult.set(0, 0, 0, Rational(1));
  a.comult.set(1, 0, 1, Rational(1));
  a.comult.set(1, 1, 0, Rational(1));
  a.unit = {Rational(1), Rational(0)};
  a.counit = {Rational(1), Rational(0)};
  a.invol = AntilinearMap::identity(2);
  a.coinvol = AntilinearMap::identity(2);
  a.labels = {"1", "x"};
  return a;
}

// H_2(q) in the unnormalized tau basis with the diagonal comultiplication.
inline posalg::TwoAlgebra h2_tau_basis(const posalg::Rational& q) {
  using namespace posalg;
  TwoAlgebra a;
  a.dim = 2;
  a.mult = StructureTensor(2);
  a.mult.set(0, 0, 0, Rational(1));
  a.mult.set(0, 1, 1, Rational(1));
  a.mult.set(1, 0, 1, Rational(1));
  a.mult.set(1, 1, 1, q - 1);
  a.mult.set(1, 1, 0, q);
  a.comult = StructureTensor(2);
  a.comult.set(0, 0, 0, Rational(1));
  a.comult.set(1, 1, 1, Rational(1));
  a.unit = {Rational(1), Rational(0)};
  a.counit = {Rational(1), Rational(1)};
  a.invol = AntilinearMap::identity(2);
  a.coinvol = AntilinearMap::identity(2);
  a.labels = {"1", "t"};
  return a;
}
