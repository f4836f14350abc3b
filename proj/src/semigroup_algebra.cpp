#include "posalg/semigroup_algebra.hpp"

#include <algorithm>

#include "posalg/linalg.hpp"
#include "posalg/splitting.hpp"

namespace posalg {

namespace {

RatVec solve_unit(const StructureTensor& mult) {
  // two-sided identity: sum_s u_s (x_s x_t) = x_t and (x_t x_s) u_s = x_t
  long n = mult.dim();
  RatMat sys(2 * n * n, RatVec(n, Rational(0)));
  RatVec rhs(2 * n * n, Rational(0));
  for (long t = 0; t < n; ++t) {
    for (long s = 0; s < n; ++s) {
      mult.for_slice(s, t, [&](long k, const Rational& c) {
        sys[t * n + k][s] += c;
      });
      mult.for_slice(t, s, [&](long k, const Rational& c) {
        sys[n * n + t * n + k][s] += c;
      });
    }
    rhs[t * n + t] = 1;
    rhs[n * n + t * n + t] = 1;
  }
  auto u = solve_linear(std::move(sys), rhs);
  if (!u) throw Error("semigroup algebra has no unit");
  return *u;
}

}  // namespace

SemigroupBialgebra semigroup_bialgebra(const InverseSemigroup& s) {
  const long n = s.size();
  TwoAlgebra a;
  a.dim = n;
  a.mult = StructureTensor(n);
  a.comult = StructureTensor(n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) a.mult.set(i, j, s.base.table[i][j], Rational(1));
    a.comult.set(i, i, i, Rational(1));
  }
  a.counit = RatVec(n, Rational(1));
  a.unit = s.unital() ? a.basis_vector(*s.base.unit) : solve_unit(a.mult);
  a.invol = AntilinearMap::permutation(s.inv);
  a.coinvol = AntilinearMap::identity(n);
  a.labels = s.base.labels;
  return {std::move(a), !s.unital()};
}

TwoAlgebra group_bialgebra(const FiniteMonoid& g) {
  return semigroup_bialgebra(group_as_inverse(g)).algebra;
}

SemigroupBialgebra dual_semigroup_bialgebra(const InverseSemigroup& s) {
  SemigroupBialgebra b = semigroup_bialgebra(s);
  return {dual(b.algebra), b.weakened};
}

std::vector<long> wedderburn_dims(const TwoAlgebra& a) {
  const long n = a.dim;

  // center: z with z x_i = x_i z for all i
  RatMat sys;
  for (long i = 0; i < n; ++i) {
    RatMat rows(n, RatVec(n, Rational(0)));
    for (long s = 0; s < n; ++s) {
      a.mult.for_slice(s, i, [&](long k, const Rational& c) {
        rows[k][s] += c;
      });
      a.mult.for_slice(i, s, [&](long k, const Rational& c) {
        rows[k][s] -= c;
      });
    }
    for (auto& row : rows) sys.push_back(std::move(row));
  }
  RatMat center = kernel_basis(sys);
  const long z = static_cast<long>(center.size());
  if (z == 0) throw Error("wedderburn_dims: empty center");

  // structure constants of the center in its own basis
  StructureTensor zmult(z);
  for (long i = 0; i < z; ++i)
    for (long j = 0; j < z; ++j) {
      RatVec prod = a.product(center[i], center[j]);
      auto coords = coordinates_in_span(center, prod);
      if (!coords) throw Error("wedderburn_dims: center is not closed");
      for (long k = 0; k < z; ++k) zmult.set(i, j, k, (*coords)[k]);
    }

  auto split = split_commutative(zmult);
  if (!split)
    throw Error(
        "wedderburn_dims: center fails to split over the supported "
        "cyclotomic orders");

  std::vector<long> dims;
  for (const auto& idem_z : split->idempotents) {
    // central idempotent as an element of A, over the cyclotomic field
    CycVec e(n);
    for (long i = 0; i < z; ++i)
      if (!idem_z[i].is_zero())
        for (long s = 0; s < n; ++s)
          if (!is_zero(center[i][s])) e[s] += idem_z[i] * Cyclotomic(center[i][s]);
    // rank of x -> e . x on A
    CycMat image(n, CycVec(n));
    for (long j = 0; j < n; ++j) {
      for (long i = 0; i < n; ++i) {
        if (e[i].is_zero()) continue;
        a.mult.for_slice(i, j, [&](long k, const Rational& c) {
          image[k][j] += e[i] * Cyclotomic(c);
        });
      }
    }
    long rank = matrix_rank(image);
    long root = 0;
    while (root * root < rank) ++root;
    if (root * root != rank)
      throw Error(
          "wedderburn_dims: block rank is not a perfect square; center did "
          "not split absolutely");
    dims.push_back(rank);
  }
  std::sort(dims.rbegin(), dims.rend());
  long total = 0;
  for (long d : dims) total += d;
  if (total != n) throw Error("wedderburn_dims: block dimensions do not sum");
  return dims;
}

Verdict almost_antipode_check(const TwoAlgebra& a, const InverseSemigroup& s) {
  const long n = a.dim;
  if (n != s.size()) throw Error("almost_antipode_check: size mismatch");

  // convolution F * G = mult (F (x) G) Delta as a matrix
  auto convolve = [&](const std::vector<long>& f_perm, bool f_id,
                      const std::vector<long>& g_perm, bool g_id) {
    RatMat m(n, RatVec(n, Rational(0)));
    for (long i = 0; i < n; ++i) {
      a.comult.for_row(i, [&](long j, long k, const Rational& c) {
        long fj = f_id ? j : f_perm[j];
        long gk = g_id ? k : g_perm[k];
        a.mult.for_slice(fj, gk, [&](long l, const Rational& d) {
          m[l][i] += c * d;
        });
      });
    }
    return m;
  };
  RatMat id_star_s = convolve({}, true, s.inv, false);
  RatMat s_star_id = convolve(s.inv, false, {}, true);

  // images on basis elements: a a^{-1} and a^{-1} a
  for (long i = 0; i < n; ++i) {
    long right = s.base.table[i][s.inv[i]];
    long left = s.base.table[s.inv[i]][i];
    for (long k = 0; k < n; ++k) {
      Rational expect_r = (k == right) ? Rational(1) : Rational(0);
      Rational expect_l = (k == left) ? Rational(1) : Rational(0);
      if (id_star_s[k][i] != expect_r)
        return Verdict::fail({"id-star-S", {i, k},
                              to_string(id_star_s[k][i]),
                              to_string(expect_r)},
                             "(id * S)(a) != a a^{-1}");
      if (s_star_id[k][i] != expect_l)
        return Verdict::fail({"S-star-id", {i, k},
                              to_string(s_star_id[k][i]),
                              to_string(expect_l)},
                             "(S * id)(a) != a^{-1} a");
    }
  }

  if (mat_mul(id_star_s, id_star_s) != id_star_s)
    return Verdict::fail({"id-star-S-idempotent", {}, "", ""},
                         "(id * S) is not an idempotent operator");
  if (mat_mul(s_star_id, s_star_id) != s_star_id)
    return Verdict::fail({"S-star-id-idempotent", {}, "", ""},
                         "(S * id) is not an idempotent operator");

  // images lie in the span of semigroup idempotents
  RatMat idempotent_span;
  for (long e = 0; e < n; ++e)
    if (s.base.table[e][e] == e) idempotent_span.push_back(a.basis_vector(e));
  for (long i = 0; i < n; ++i) {
    RatVec col_r(n), col_l(n);
    for (long k = 0; k < n; ++k) {
      col_r[k] = id_star_s[k][i];
      col_l[k] = s_star_id[k][i];
    }
    if (!coordinates_in_span(idempotent_span, col_r) ||
        !coordinates_in_span(idempotent_span, col_l))
      return Verdict::fail({"image-not-idempotent-span", {i}, "", ""},
                           "convolution image leaves the idempotent span");
  }
  return Verdict::pass();
}

RecoveredSemigroup recover_semigroup(const TwoAlgebra& a) {
  RecoveredSemigroup out;
  const long n = a.dim;

  TwoAlgebra d = dual(a);
  // spectrum of the dual algebra: primitive idempotents and characters
  CycMat idempotents, characters;
  bool diagonal = static_cast<long>(d.mult.entries().size()) == n;
  for (const auto& [key, value] : d.mult.entries())
    if (!(key[0] == key[1] && key[1] == key[2] && value == Rational(1)))
      diagonal = false;
  if (diagonal) {
    // the distinguished basis of the dual is its own spectrum
    for (long i = 0; i < n; ++i) {
      CycVec e(n);
      e[i] = Cyclotomic(Rational(1));
      idempotents.push_back(e);
      characters.push_back(std::move(e));
    }
  } else {
    auto split = split_commutative(d.mult);
    if (!split) {
      out.verdict = Verdict::unknown(
          "dual algebra does not split over supported cyclotomic orders");
      return out;
    }
    idempotents = split->idempotents;
    characters = split->characters;
  }
  if (static_cast<long>(idempotents.size()) != n) {
    out.verdict =
        Verdict::unknown("dual algebra is not commutative semisimple of full "
                         "spectrum; not cocommutative semisimple input");
    return out;
  }

  // the comultiplication of the dual induces the binary operation on the
  // spectrum: chi_s . chi_t = chi_{st}
  std::vector<std::vector<long>> table(n, std::vector<long>(n, -1));
  for (long s = 0; s < n; ++s)
    for (long t = 0; t < n; ++t) {
      // (chi_s (x) chi_t)(Delta_dual E_r) must be 1 for exactly one r
      long hit = -1;
      for (long r = 0; r < n; ++r) {
        Cyclotomic val;
        for (long i = 0; i < n; ++i) {
          if (idempotents[r][i].is_zero()) continue;
          Cyclotomic inner;
          d.comult.for_row(i, [&](long j, long k, const Rational& c) {
            if (!characters[s][j].is_zero() && !characters[t][k].is_zero())
              inner += Cyclotomic(c) * characters[s][j] * characters[t][k];
          });
          val += idempotents[r][i] * inner;
        }
        if (val.is_zero()) continue;
        if (val != Cyclotomic(Rational(1)) || hit != -1) {
          out.verdict = Verdict::fail(
              {"spectrum-operation", {s, t, r}, val.to_string(), "0 or 1"},
              "comultiplication does not induce a deterministic operation on "
              "the spectrum");
          return out;
        }
        hit = r;
      }
      if (hit < 0) {
        out.verdict =
            Verdict::fail({"spectrum-operation", {s, t}, "no product", ""},
                          "spectrum operation undefined");
        return out;
      }
      table[s][t] = hit;
    }

  std::vector<std::string> labels = a.labels;
  if (static_cast<long>(labels.size()) != n) labels.clear();
  FiniteMonoid m = FiniteMonoid::from_table(table, labels);
  auto check = is_inverse(m);
  if (!check.verdict.holds()) {
    out.verdict = check.verdict;
    return out;
  }
  out.verdict = Verdict::pass();
  out.monoid = std::move(m);
  out.inv = check.inv;
  return out;
}

}  // namespace posalg
