#include "posalg/lambda.hpp"

#include <algorithm>
#include <numeric>

#include "posalg/linalg.hpp"

namespace posalg {

TwoAlgebra a_lambda(const Rational& lambda) {
  if (sgn(lambda) < 0 || lambda > Rational(1))
    throw Error("a_lambda needs lambda in [0, 1]");
  TwoAlgebra a;
  a.dim = 2;
  a.mult = StructureTensor(2);
  a.mult.set(0, 0, 0, Rational(1));
  a.mult.set(0, 1, 1, Rational(1));
  a.mult.set(1, 0, 1, Rational(1));
  a.mult.set(1, 1, 1, Rational(1) - lambda);
  a.mult.set(1, 1, 0, lambda);
  a.comult = StructureTensor(2);
  a.comult.set(0, 0, 0, Rational(1));
  a.comult.set(1, 1, 1, Rational(1));
  a.unit = {Rational(1), Rational(0)};
  a.counit = {Rational(1), Rational(1)};
  a.invol = AntilinearMap::identity(2);
  a.coinvol = AntilinearMap::identity(2);
  a.labels = {"1", "u"};
  return a;
}

TwoDimClass classify_2dim(const TwoAlgebra& a) {
  if (a.dim != 2) throw Error("classify_2dim needs a 2-dimensional algebra");
  Verdict valid = validate_2_algebra(a);
  if (!valid.holds())
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "not a 2-algebra: " + valid.notes};
  if (!is_semisimple(a, Side::Algebra).holds())
    return {TwoDimClass::Kind::NotSemisimple, Rational(0),
            "trace form is degenerate"};
  if (!is_semisimple(a, Side::Coalgebra).holds())
    return {TwoDimClass::Kind::NotSemisimple, Rational(0),
            "dual trace form is degenerate"};

  // grouplike elements: Delta v = v (x) v with counit(v) = 1
  // Write v = x e0 + y e1 and solve the quadratic system exactly.
  std::vector<RatVec> grouplikes;
  {
    // counit(v) = 1 defines a line; parameterize and intersect with the
    // quadratic conditions
    // pick a point v0 with counit(v0) = 1 and a kernel direction w
    RatVec v0(2), w(2);
    if (!is_zero(a.counit[0])) {
      v0 = {Rational(1) / a.counit[0], Rational(0)};
      w = {-a.counit[1] / a.counit[0], Rational(1)};
    } else if (!is_zero(a.counit[1])) {
      v0 = {Rational(0), Rational(1) / a.counit[1]};
      w = {Rational(1), Rational(0)};
    } else {
      return {TwoDimClass::Kind::NotPositive, Rational(0), "zero counit"};
    }
    // Delta(v0 + t w) - (v0 + t w) (x) (v0 + t w) = q0 + q1 t + q2 t^2
    // entrywise; collect the polynomial per matrix entry and solve the
    // common rational roots.
    RatMat d0 = tensor_coproduct(a.comult, v0);
    RatMat dw = tensor_coproduct(a.comult, w);
    // quadratic coefficients per entry
    std::vector<std::array<Rational, 3>> polys;
    for (long i = 0; i < 2; ++i)
      for (long j = 0; j < 2; ++j) {
        std::array<Rational, 3> c;
        c[0] = d0[i][j] - v0[i] * v0[j];
        c[1] = dw[i][j] - v0[i] * w[j] - w[i] * v0[j];
        c[2] = -(w[i] * w[j]);
        polys.push_back(c);
      }
    // roots common to all entries: try roots of the first nonzero quadratic
    std::vector<Rational> roots;
    for (const auto& c : polys) {
      if (is_zero(c[2]) && is_zero(c[1])) continue;
      if (is_zero(c[2])) {
        roots.push_back(-c[0] / c[1]);
        continue;
      }
      // discriminant must be a rational square
      Rational disc = c[1] * c[1] - 4 * c[2] * c[0];
      if (sgn(disc) < 0) break;
      // exact rational square root
      Integer num = disc.get_num(), den = disc.get_den();
      Integer rn = sqrt(num), rd = sqrt(den);
      if (rn * rn != num || rd * rd != den) break;
      Rational root_disc(rn, rd);
      root_disc.canonicalize();
      roots.push_back((-c[1] + root_disc) / (2 * c[2]));
      roots.push_back((-c[1] - root_disc) / (2 * c[2]));
      break;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rational& t : roots) {
      RatVec v{v0[0] + t * w[0], v0[1] + t * w[1]};
      RatMat dv = tensor_coproduct(a.comult, v);
      bool ok = true;
      for (long i = 0; i < 2 && ok; ++i)
        for (long j = 0; j < 2 && ok; ++j)
          if (dv[i][j] != v[i] * v[j]) ok = false;
      if (ok) grouplikes.push_back(v);
    }
  }

  if (grouplikes.size() != 2)
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "no rational grouplike basis"};
  long unit_at = -1;
  for (size_t i = 0; i < grouplikes.size(); ++i)
    if (grouplikes[i] == a.unit) unit_at = static_cast<long>(i);
  if (unit_at < 0)
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "unit is not grouplike (not homogeneous)"};
  const RatVec& u = grouplikes[1 - unit_at];

  // u^2 = (1 - lambda) u + lambda 1
  RatVec u2 = a.product(u, u);
  // solve u2 = x * u + y * unit
  auto coords = coordinates_in_span({u, a.unit}, u2);
  if (!coords)
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "u^2 outside span{1, u}"};
  Rational x = (*coords)[0], y = (*coords)[1];
  if (x + y != Rational(1))
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "u^2 coefficients do not sum to 1"};
  if (sgn(y) < 0 || y > Rational(1))
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "lambda outside [0, 1]"};
  // involutions must fix the canonical basis (conjugation only)
  if (a.invol.apply(u) != u || a.invol.apply(a.unit) != a.unit ||
      a.coinvol.apply(u) != u || a.coinvol.apply(a.unit) != a.unit)
    return {TwoDimClass::Kind::NotPositive, Rational(0),
            "involutions do not fix the canonical basis"};
  return {TwoDimClass::Kind::Lambda, y, ""};
}

StrictDilationPrediction strict_dilation_predicate(const Rational& lambda) {
  if (sgn(lambda) <= 0 || lambda > Rational(1))
    throw Error("strict_dilation_predicate needs lambda in (0, 1]");
  // alpha = (1 - lambda)^2 / lambda
  Rational alpha = (Rational(1) - lambda) * (Rational(1) - lambda) / lambda;
  if (is_zero(alpha)) return {true, 1, 1};  // lambda = 1
  // exhaustive s with exact divisibility: alpha = k (s-1)^2 / s
  Integer bound_z = alpha.get_num() * alpha.get_den() + 1;
  long bound = bound_z.fits_slong_p() ? bound_z.get_si() : 1000000;
  for (long s = 2; s <= bound; ++s) {
    Rational k = alpha * Rational(s) / Rational((s - 1) * (s - 1));
    k.canonicalize();
    if (k.get_den() == 1 && sgn(k) > 0)
      return {true, static_cast<long>(k.get_num().get_si()), s};
  }
  return {false, 0, 0};
}

QuasiCharacterMatrix quasicharacter_matrix(const TwoAlgebra& a) {
  if (!a.commutative() || !a.cocommutative())
    throw Error("quasicharacter_matrix needs a bicommutative algebra");
  if (!a.comult_diagonal())
    throw Error("quasicharacter_matrix needs a grouplike distinguished basis");
  if (!is_semisimple(a, Side::Algebra).holds() ||
      !is_semisimple(a, Side::Coalgebra).holds())
    throw Error("quasicharacter_matrix needs a semisimple algebra");
  const long n = a.dim;

  // unit must be a basis vector; it becomes the first column
  long unit_index = -1;
  for (long i = 0; i < n; ++i) {
    if (is_zero(a.unit[i])) continue;
    if (a.unit[i] != Rational(1) || unit_index != -1)
      throw Error("quasicharacter_matrix: unit is not a basis grouplike");
    unit_index = i;
  }
  if (unit_index < 0) throw Error("quasicharacter_matrix: zero unit");

  auto split = split_commutative(a.mult);
  if (!split)
    throw Error(
        "quasicharacter_matrix: characters do not split over supported "
        "cyclotomic orders");

  std::vector<long> col_order;
  col_order.push_back(unit_index);
  for (long j = 0; j < n; ++j)
    if (j != unit_index) col_order.push_back(j);

  // unit row: the character identically 1 on the grouplike basis
  const Cyclotomic one{Rational(1)};
  long ones_row = -1;
  for (long i = 0; i < n; ++i) {
    bool all_ones = true;
    for (long j = 0; j < n && all_ones; ++j)
      all_ones = split->characters[i][j] == one;
    if (all_ones) {
      ones_row = i;
      break;
    }
  }
  if (ones_row < 0)
    throw Error("quasicharacter_matrix: no unit character (not homogeneous)");

  std::vector<long> row_order;
  row_order.push_back(ones_row);
  for (long i = 0; i < n; ++i)
    if (i != ones_row) row_order.push_back(i);
  // remaining rows already arrive in serialized order from the split

  QuasiCharacterMatrix q;
  q.entries.assign(n, CycVec(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      q.entries[i][j] = split->characters[row_order[i]][col_order[j]];

  // first column must be all ones: chi(1) = 1
  for (long i = 0; i < n; ++i)
    if (!(q.entries[i][0] == one))
      throw Error("quasicharacter_matrix: first column is not all ones");

  // convex-combination property for rows and columns
  auto check_convex = [&](bool rows) {
    CycMat vectors(n, CycVec(n));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        vectors[i][j] = rows ? q.entries[i][j] : q.entries[j][i];
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        CycVec prod(n);
        for (long k = 0; k < n; ++k) prod[k] = vectors[i][k] * vectors[j][k];
        auto weights = coordinates_in_span(vectors, prod);
        if (!weights)
          throw Error("quasicharacter_matrix: product of " +
                      std::string(rows ? "rows" : "columns") +
                      " leaves the span");
        Cyclotomic total;
        for (long k = 0; k < n; ++k) {
          auto r = (*weights)[k].to_rational();
          if (!r || sgn(*r) < 0)
            throw Error("quasicharacter_matrix: " +
                        std::string(rows ? "row" : "column") +
                        " product is not a convex combination");
          total += (*weights)[k];
        }
        if (!(total == one))
          throw Error("quasicharacter_matrix: combination weights sum to " +
                      total.to_string() + ", not 1");
      }
  };
  check_convex(true);
  check_convex(false);
  return q;
}

CanonicalQuasiCharacter canonical_quasicharacter(const QuasiCharacterMatrix& q) {
  const long n = q.dim();
  std::vector<long> rows(n - 1), cols(n - 1);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), 1);

  auto lex_less = [&](const CycMat& a, const CycMat& b) {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (a[i][j] == b[i][j]) continue;
        return serialization_less(a[i][j], b[i][j]);
      }
    return false;
  };
  auto apply = [&](const std::vector<long>& rp, const std::vector<long>& cp) {
    CycMat m(n, CycVec(n));
    std::vector<long> rfull{0}, cfull{0};
    rfull.insert(rfull.end(), rp.begin(), rp.end());
    cfull.insert(cfull.end(), cp.begin(), cp.end());
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m[i][j] = q.entries[rfull[i]][cfull[j]];
    return m;
  };

  CycMat best;
  std::vector<long> best_cols;
  std::vector<long> rp = rows;
  do {
    std::vector<long> cp = cols;
    do {
      CycMat cand = apply(rp, cp);
      if (best.empty() || lex_less(cand, best)) {
        best = std::move(cand);
        best_cols = cp;
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));

  CanonicalQuasiCharacter out;
  out.matrix.entries = std::move(best);
  out.column_map.push_back(0);
  out.column_map.insert(out.column_map.end(), best_cols.begin(),
                        best_cols.end());
  return out;
}

}  // namespace posalg
