#include "posalg/checks.hpp"

#include <sstream>

#include "posalg/linalg.hpp"
#include "posalg/splitting.hpp"

namespace posalg {

namespace {

std::string vec_str(const RatVec& v) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << to_string(v[i]);
  }
  out << "]";
  return out.str();
}

std::string mat_str(const RatMat& m) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out << "; ";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ", ";
      out << to_string(m[i][j]);
    }
  }
  out << "]";
  return out.str();
}

void require_consistent(const TwoAlgebra& a) {
  bool ok = a.mult.dim() == a.dim && a.comult.dim() == a.dim &&
            static_cast<long>(a.unit.size()) == a.dim &&
            static_cast<long>(a.counit.size()) == a.dim &&
            a.invol.dim() == a.dim && a.coinvol.dim() == a.dim;
  if (!ok) throw Error("two-algebra components have mismatched dimensions");
}

// Sparse column representation of all left multiplications.
using SparseCols = std::vector<std::vector<std::pair<long, Rational>>>;

SparseCols left_columns(const TwoAlgebra& a, long i) {
  SparseCols cols(a.dim);
  for (long j = 0; j < a.dim; ++j)
    a.mult.for_slice(i, j, [&](long k, const Rational& c) {
      cols[j].emplace_back(k, c);
    });
  return cols;
}

}  // namespace

RatMat left_multiplication_matrix(const TwoAlgebra& a, long i) {
  RatMat m(a.dim, RatVec(a.dim, Rational(0)));
  for (long j = 0; j < a.dim; ++j)
    a.mult.for_slice(i, j, [&](long k, const Rational& c) { m[k][j] = c; });
  return m;
}

RatMat trace_form(const TwoAlgebra& a) {
  std::vector<SparseCols> left(a.dim);
  for (long i = 0; i < a.dim; ++i) left[i] = left_columns(a, i);
  RatMat b(a.dim, RatVec(a.dim, Rational(0)));
  for (long i = 0; i < a.dim; ++i) {
    for (long j = i; j < a.dim; ++j) {
      Rational tr(0);
      // tr(L_i L_j) = sum over columns k of <row k of L_i L_j at k>
      for (long k = 0; k < a.dim; ++k)
        for (const auto& [m, cm] : left[j][k])
          for (const auto& [l, cl] : left[i][m])
            if (l == k) tr += cm * cl;
      b[i][j] = tr;
      b[j][i] = b[i][j];
    }
  }
  return b;
}

Verdict validate_2_algebra(const TwoAlgebra& a) {
  require_consistent(a);
  const long n = a.dim;

  // unit law
  for (long i = 0; i < n; ++i) {
    RatVec e = a.basis_vector(i);
    RatVec lhs = a.product(a.unit, e);
    if (lhs != e)
      return Verdict::fail({"unit-law", {i}, vec_str(lhs), vec_str(e)},
                           "unit vector is not a left identity");
    RatVec rhs = a.product(e, a.unit);
    if (rhs != e)
      return Verdict::fail({"unit-law", {i}, vec_str(rhs), vec_str(e)},
                           "unit vector is not a right identity");
  }

  // counit law
  for (long i = 0; i < n; ++i) {
    RatVec left(n, Rational(0)), right(n, Rational(0));
    a.comult.for_row(i, [&](long j, long k, const Rational& c) {
      left[k] += a.counit[j] * c;
      right[j] += a.counit[k] * c;
    });
    RatVec e = a.basis_vector(i);
    if (left != e)
      return Verdict::fail({"counit-law", {i}, vec_str(left), vec_str(e)},
                           "(counit (x) id) Delta is not the identity");
    if (right != e)
      return Verdict::fail({"counit-law", {i}, vec_str(right), vec_str(e)},
                           "(id (x) counit) Delta is not the identity");
  }

  // associativity, with touched-index scratch reset
  {
    RatVec lhs(n, Rational(0)), rhs(n, Rational(0));
    std::vector<long> touched_l, touched_r;
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        for (long k = 0; k < n; ++k) {
          a.mult.for_slice(i, j, [&](long m, const Rational& c) {
            a.mult.for_slice(m, k, [&](long l, const Rational& d) {
              if (is_zero(lhs[l])) touched_l.push_back(l);
              lhs[l] += c * d;
            });
          });
          a.mult.for_slice(j, k, [&](long m, const Rational& c) {
            a.mult.for_slice(i, m, [&](long l, const Rational& d) {
              if (is_zero(rhs[l])) touched_r.push_back(l);
              rhs[l] += c * d;
            });
          });
          bool equal = true;
          for (long l : touched_l)
            if (lhs[l] != rhs[l]) equal = false;
          for (long l : touched_r)
            if (lhs[l] != rhs[l]) equal = false;
          if (!equal) {
            Verdict v = Verdict::fail(
                {"associativity", {i, j, k}, vec_str(lhs), vec_str(rhs)},
                "(x_i x_j) x_k != x_i (x_j x_k)");
            return v;
          }
          for (long l : touched_l) lhs[l] = 0;
          for (long l : touched_r) rhs[l] = 0;
          touched_l.clear();
          touched_r.clear();
        }
      }
    }
  }

  // coassociativity
  for (long i = 0; i < n; ++i) {
    std::map<std::array<long, 3>, Rational> lhs, rhs;
    a.comult.for_row(i, [&](long j, long k, const Rational& c) {
      a.comult.for_row(j, [&](long p, long q, const Rational& d) {
        auto& slot = lhs[{p, q, k}];
        slot += c * d;
        if (is_zero(slot)) lhs.erase({p, q, k});
      });
      a.comult.for_row(k, [&](long p, long q, const Rational& d) {
        auto& slot = rhs[{j, p, q}];
        slot += c * d;
        if (is_zero(slot)) rhs.erase({j, p, q});
      });
    });
    if (lhs != rhs)
      return Verdict::fail(
          {"coassociativity", {i}, "(Delta (x) id) Delta", "(id (x) Delta) Delta"},
          "comultiplication is not coassociative at basis index " +
              std::to_string(i));
  }

  return Verdict::pass();
}

Verdict check_involutive(const TwoAlgebra& a) {
  require_consistent(a);
  const long n = a.dim;
  const RatMat& s = a.invol.matrix;
  const RatMat& f = a.coinvol.matrix;

  if (mat_mul(s, s) != identity_matrix(n))
    return Verdict::fail({"involution-order", {}, mat_str(mat_mul(s, s)), "id"},
                         "sharp is not of second order");
  if (mat_mul(f, f) != identity_matrix(n))
    return Verdict::fail({"coinvolution-order", {}, mat_str(mat_mul(f, f)), "id"},
                         "flat is not of second order");

  // sharp antiautomorphism: x_i# . x_j# = (x_j . x_i)#
  for (long i = 0; i < n; ++i) {
    RatVec si = a.invol.apply(a.basis_vector(i));
    for (long j = 0; j < n; ++j) {
      RatVec sj = a.invol.apply(a.basis_vector(j));
      RatVec lhs = a.product(si, sj);
      RatVec rhs = a.invol.apply(tensor_product_basis(a.mult, j, i));
      if (lhs != rhs)
        return Verdict::fail(
            {"sharp-antiautomorphism", {i, j}, vec_str(lhs), vec_str(rhs)},
            "delta(sharp (x) sharp) != sharp delta J at (" +
                std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }

  // flat coalgebra antiautomorphism: (flat (x) flat) Delta = J Delta flat
  for (long i = 0; i < n; ++i) {
    RatMat di(n, RatVec(n, Rational(0)));
    a.comult.for_row(i, [&](long j, long k, const Rational& c) { di[j][k] = c; });
    RatMat lhs = mat_mul(mat_mul(f, di), transpose(f));
    RatMat rhs = transpose(tensor_coproduct(a.comult, a.coinvol.apply(a.basis_vector(i))));
    if (lhs != rhs)
      return Verdict::fail({"flat-antiautomorphism", {i}, mat_str(lhs), mat_str(rhs)},
                           "(flat (x) flat) Delta != J Delta flat");
  }

  // Delta sharp = (sharp (x) sharp) Delta
  for (long i = 0; i < n; ++i) {
    RatMat di(n, RatVec(n, Rational(0)));
    a.comult.for_row(i, [&](long j, long k, const Rational& c) { di[j][k] = c; });
    RatMat lhs = tensor_coproduct(a.comult, a.invol.apply(a.basis_vector(i)));
    RatMat rhs = mat_mul(mat_mul(s, di), transpose(s));
    if (lhs != rhs)
      return Verdict::fail({"comult-sharp", {i}, mat_str(lhs), mat_str(rhs)},
                           "Delta sharp != (sharp (x) sharp) Delta");
  }

  // delta (flat (x) flat) = flat delta
  for (long i = 0; i < n; ++i) {
    RatVec fi = a.coinvol.apply(a.basis_vector(i));
    for (long j = 0; j < n; ++j) {
      RatVec fj = a.coinvol.apply(a.basis_vector(j));
      RatVec lhs = a.product(fi, fj);
      RatVec rhs = a.coinvol.apply(tensor_product_basis(a.mult, i, j));
      if (lhs != rhs)
        return Verdict::fail({"mult-flat", {i, j}, vec_str(lhs), vec_str(rhs)},
                             "delta(flat (x) flat) != flat delta");
    }
  }

  return Verdict::pass();
}

Verdict is_bialgebra(const TwoAlgebra& a) {
  require_consistent(a);
  const long n = a.dim;

  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      RatMat lhs = tensor_coproduct(a.comult, tensor_product_basis(a.mult, i, j));
      RatMat rhs(n, RatVec(n, Rational(0)));
      a.comult.for_row(i, [&](long p, long q, const Rational& c) {
        a.comult.for_row(j, [&](long r, long t, const Rational& d) {
          Rational scale = c * d;
          a.mult.for_slice(p, r, [&](long x, const Rational& cx) {
            a.mult.for_slice(q, t, [&](long y, const Rational& cy) {
              rhs[x][y] += scale * cx * cy;
            });
          });
        });
      });
      if (lhs != rhs)
        return Verdict::fail(
            {"comult-multiplicative", {i, j}, mat_str(lhs), mat_str(rhs)},
            "Delta(x_i x_j) != Delta(x_i) Delta(x_j)");
    }
  }

  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rational lhs = a.counit_of(tensor_product_basis(a.mult, i, j));
      Rational rhs = a.counit[i] * a.counit[j];
      if (lhs != rhs)
        return Verdict::fail(
            {"counit-multiplicative", {i, j}, to_string(lhs), to_string(rhs)},
            "counit is not multiplicative");
    }
  Rational at_unit = a.counit_of(a.unit);
  if (at_unit != Rational(1))
    return Verdict::fail({"counit-unital", {}, to_string(at_unit), "1"},
                         "counit(1) != 1");

  return Verdict::pass();
}

Verdict is_semisimple(const TwoAlgebra& a, Side side) {
  require_consistent(a);
  if (side == Side::Coalgebra) return is_semisimple(dual(a), Side::Algebra);
  RatMat b = trace_form(a);
  auto kernel = kernel_basis(b);
  if (kernel.empty())
    return Verdict::pass("trace form nondegenerate (Dickson criterion)");
  return Verdict::fail(
      {"trace-form-kernel", {}, vec_str(kernel[0]), "nondegenerate"},
      "trace form of the left regular representation is degenerate");
}

namespace {

// Tier 2 exact positivity for bicommutative semisimple algebras with a
// grouplike distinguished basis.
std::optional<PositivityVerdict> positivity_tier2(const TwoAlgebra& a) {
  if (!a.commutative() || !a.cocommutative() || !a.comult_diagonal())
    return std::nullopt;
  auto split = split_commutative(a.mult);
  if (!split) return std::nullopt;
  const long n = a.dim;
  const CycMat& q = split->characters;

  // flat must permute the grouplike basis
  std::vector<long> sigma(n, -1);
  for (long j = 0; j < n; ++j) {
    long hit = -1;
    for (long i = 0; i < n; ++i) {
      const Rational& c = a.coinvol.matrix[i][j];
      if (is_zero(c)) continue;
      if (c != Rational(1) || hit != -1) return std::nullopt;
      hit = i;
    }
    if (hit < 0) return std::nullopt;
    sigma[j] = hit;
  }
  for (long j = 0; j < n; ++j)
    if (sigma[sigma[j]] != j) return std::nullopt;

  // sharp must permute the characters with conjugation:
  // chi_pi(i) = conj(chi_i o sharp)
  std::vector<long> pi(n, -1);
  for (long i = 0; i < n; ++i) {
    CycVec row(n);
    for (long j = 0; j < n; ++j) {
      Cyclotomic acc;
      for (long m = 0; m < n; ++m)
        if (!is_zero(a.invol.matrix[m][j]))
          acc += Cyclotomic(a.invol.matrix[m][j]) * q[i][m];
      row[j] = acc.conj();
    }
    for (long t = 0; t < n; ++t)
      if (q[t] == row) {
        pi[i] = t;
        break;
      }
    if (pi[i] < 0) return std::nullopt;
  }
  for (long i = 0; i < n; ++i)
    if (pi[pi[i]] != i) return std::nullopt;

  PositivityVerdict out;
  out.mult = Verdict::pass("tier 2: exact character-cone check");
  out.comult = Verdict::pass("tier 2: exact character-cone check");

  // Multiplication preserves the flat cone: products of sigma-fixed basis
  // elements stay supported on sigma-fixed coordinates with nonnegative
  // coefficients.
  for (long j = 0; j < n && !out.mult.fails(); ++j) {
    if (sigma[j] != j) continue;
    for (long k = 0; k < n && !out.mult.fails(); ++k) {
      if (sigma[k] != k) continue;
      a.mult.for_slice(j, k, [&](long m, const Rational& c) {
        if (out.mult.fails()) return;
        bool bad = (sigma[m] == m) ? sgn(c) < 0 : !is_zero(c);
        if (bad)
          out.mult = Verdict::fail(
              {"mult-positivity", {j, k, m}, to_string(c),
               sigma[m] == m ? ">= 0" : "0"},
              "product of flat-cone generators leaves the cone; tier 2");
      });
    }
  }

  // Comultiplication preserves the sharp cone, checked on the primitive
  // idempotents (cone generators) and the conjugate-pair subspaces.
  // values[i][r][c] = (chi_r (x) chi_c)(Delta E_i)
  std::vector<CycMat> values(n, CycMat(n, CycVec(n)));
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      CycVec rowprod(n);
      for (long j = 0; j < n; ++j) rowprod[j] = q[r][j] * q[c][j];
      for (long i = 0; i < n; ++i) {
        Cyclotomic acc;
        for (long j = 0; j < n; ++j)
          if (!split->idempotents[i][j].is_zero())
            acc += rowprod[j] * split->idempotents[i][j];
        values[i][r][c] = acc;
      }
    }
  auto comult_violation = [&]() -> std::optional<Verdict> {
    for (long i = 0; i < n; ++i)
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
          if (values[pi[i]][pi[r]][pi[c]] != values[i][r][c].conj())
            return Verdict::fail(
                {"comult-positivity-linkage", {i, r, c},
                 values[i][r][c].to_string(),
                 values[pi[i]][pi[r]][pi[c]].to_string()},
                "coproduct image violates the conjugation linkage; tier 2");
          if (pi[r] != r || pi[c] != c) continue;
          if (pi[i] == i) {
            auto rat = values[i][r][c].to_rational();
            if (!rat)
              return Verdict::unknown(
                  "tier 2: irrational cone coordinate, sign undecidable");
            if (sgn(*rat) < 0)
              return Verdict::fail(
                  {"comult-positivity", {i, r, c}, to_string(*rat), ">= 0"},
                  "coproduct of a sharp-cone generator leaves the cone; tier 2");
          } else if (!values[i][r][c].is_zero()) {
            return Verdict::fail(
                {"comult-positivity-pair", {i, r, c},
                 values[i][r][c].to_string(), "0"},
                "coproduct of a conjugate-pair direction leaves the cone; tier 2");
          }
        }
    return std::nullopt;
  };
  if (auto bad = comult_violation()) out.comult = *bad;
  return out;
}

bool signed_permutation(const RatMat& m) {
  long n = static_cast<long>(m.size());
  std::vector<bool> used(n, false);
  for (long j = 0; j < n; ++j) {
    long hit = -1;
    for (long i = 0; i < n; ++i) {
      if (is_zero(m[i][j])) continue;
      if (hit != -1) return false;
      if (m[i][j] != Rational(1) && m[i][j] != Rational(-1)) return false;
      hit = i;
    }
    if (hit < 0 || used[hit]) return false;
    used[hit] = true;
  }
  return true;
}

}  // namespace

PositivityVerdict check_positivity(const TwoAlgebra& a) {
  require_consistent(a);

  auto tier2 = positivity_tier2(a);
  if (tier2 && tier2->mult.status != Status::Inconclusive &&
      tier2->comult.status != Status::Inconclusive)
    return *tier2;
  if (tier2 && (tier2->mult.fails() || tier2->comult.fails())) return *tier2;

  // Tier 1: sharp and flat act as signed permutations of the basis and all
  // structure constants of both tensors are nonnegative.
  if (signed_permutation(a.invol.matrix) && signed_permutation(a.coinvol.matrix)) {
    bool all_nonneg = true;
    for (const auto& [key, value] : a.mult.entries())
      if (sgn(value) < 0) all_nonneg = false;
    for (const auto& [key, value] : a.comult.entries())
      if (sgn(value) < 0) all_nonneg = false;
    if (all_nonneg) {
      PositivityVerdict out;
      out.mult = Verdict::pass("tier 1: nonnegative structure constants");
      out.comult = Verdict::pass("tier 1: nonnegative structure constants");
      return out;
    }
  }
  if (tier2) return *tier2;

  PositivityVerdict out;
  std::string note =
      "no decision tier applies; positivity recognition is NP-complete in "
      "general";
  out.mult = Verdict::unknown(note);
  out.comult = Verdict::unknown(note);
  return out;
}

Verdict check_homogeneity(const TwoAlgebra& a) {
  require_consistent(a);
  const long n = a.dim;

  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rational lhs = a.counit_of(tensor_product_basis(a.mult, i, j));
      Rational rhs = a.counit[i] * a.counit[j];
      if (lhs != rhs)
        return Verdict::fail(
            {"counit-character", {i, j}, to_string(lhs), to_string(rhs)},
            "counit is not an algebra character");
    }
  Rational at_unit = a.counit_of(a.unit);
  if (at_unit != Rational(1))
    return Verdict::fail({"counit-unital", {}, to_string(at_unit), "1"},
                         "counit(1) != 1");

  // counit compatible with sharp (conjugation is trivial on rational values)
  for (long i = 0; i < n; ++i) {
    Rational lhs = a.counit_of(a.invol.apply(a.basis_vector(i)));
    if (lhs != a.counit[i])
      return Verdict::fail(
          {"counit-sharp", {i}, to_string(lhs), to_string(a.counit[i])},
          "counit does not commute with the involution");
  }

  RatMat delta_unit = tensor_coproduct(a.comult, a.unit);
  for (long j = 0; j < n; ++j)
    for (long k = 0; k < n; ++k) {
      Rational expect = a.unit[j] * a.unit[k];
      if (delta_unit[j][k] != expect)
        return Verdict::fail({"coproduct-of-unit",
                              {j, k},
                              to_string(delta_unit[j][k]),
                              to_string(expect)},
                             "Delta(1) != 1 (x) 1");
    }

  return Verdict::pass();
}

Verdict check_positive_2_algebra(const TwoAlgebra& a) {
  auto annotate = [](Verdict v, const std::string& stage) {
    v.notes = stage + ": " + (v.notes.empty() ? status_name(v.status) : v.notes);
    return v;
  };
  Verdict v = validate_2_algebra(a);
  if (!v.holds()) return annotate(v, "validate_2_algebra");
  v = is_semisimple(a, Side::Algebra);
  if (!v.holds()) return annotate(v, "is_semisimple(algebra)");
  v = is_semisimple(a, Side::Coalgebra);
  if (!v.holds()) return annotate(v, "is_semisimple(coalgebra)");
  v = check_involutive(a);
  if (!v.holds()) return annotate(v, "check_involutive");
  PositivityVerdict p = check_positivity(a);
  if (p.mult.fails()) return annotate(p.mult, "check_positivity(mult)");
  if (p.comult.fails()) return annotate(p.comult, "check_positivity(comult)");
  Verdict h = check_homogeneity(a);
  if (h.fails()) return annotate(h, "check_homogeneity");
  if (!p.mult.holds()) return annotate(p.mult, "check_positivity(mult)");
  if (!p.comult.holds()) return annotate(p.comult, "check_positivity(comult)");
  if (!h.holds()) return annotate(h, "check_homogeneity");
  return Verdict::pass();
}

TwoAlgebra dual(const TwoAlgebra& a) {
  require_consistent(a);
  TwoAlgebra d;
  d.dim = a.dim;
  d.mult = StructureTensor(a.dim);
  d.comult = StructureTensor(a.dim);
  for (const auto& [key, value] : a.comult.entries())
    d.mult.set(key[1], key[2], key[0], value);
  for (const auto& [key, value] : a.mult.entries())
    d.comult.set(key[2], key[0], key[1], value);
  d.unit = a.counit;
  d.counit = a.unit;
  d.invol = AntilinearMap{transpose(a.coinvol.matrix)};
  d.coinvol = AntilinearMap{transpose(a.invol.matrix)};
  d.labels = a.labels;
  return d;
}

}  // namespace posalg
