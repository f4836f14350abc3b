#include "posalg/induced.hpp"

#include <map>

#include "posalg/linalg.hpp"

namespace posalg {

TwoAlgebra induced_two_algebra(const StablePartitionCert& cert) {
  const TwoAlgebra& a = *cert.ambient;
  const Partition& p = cert.partition;
  const long m = p.block_count();

  TwoAlgebra out;
  out.dim = m;
  out.mult = StructureTensor(m);
  out.comult = StructureTensor(m);

  RatVec block_size(m);
  for (long b = 0; b < m; ++b)
    block_size[b] = Rational(static_cast<long>(p.blocks[b].size()));

  // u_i u_j = sum_k closure[i][j][k] n_k / (n_i n_j) u_k
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < m; ++k) {
        Rational c = cert.closure[i][j][k] * block_size[k] /
                     (block_size[i] * block_size[j]);
        out.mult.set(i, j, k, c);
      }

  // projected comultiplication (P (x) P) Delta on the normalized basis
  for (long i = 0; i < m; ++i) {
    std::map<std::pair<long, long>, Rational> row;
    for (long g : p.blocks[i]) {
      a.comult.for_row(g, [&](long u, long v, const Rational& c) {
        row[{p.block_of[u], p.block_of[v]}] += c;
      });
    }
    for (const auto& [jk, c] : row) {
      Rational value = c / block_size[i];
      out.comult.add(i, jk.first, jk.second, value);
    }
  }

  // restricted counit
  out.counit.assign(m, Rational(0));
  for (long b = 0; b < m; ++b) {
    Rational s(0);
    for (long g : p.blocks[b]) s += a.counit[g];
    out.counit[b] = s / block_size[b];
  }

  // span unit in the normalized basis
  out.unit.assign(m, Rational(0));
  for (long b = 0; b < m; ++b)
    out.unit[b] = cert.span_unit[b] * block_size[b];

  // restricted involution and coinvolution
  auto restrict_map = [&](const AntilinearMap& map) {
    RatMat mat(m, RatVec(m, Rational(0)));
    for (long b = 0; b < m; ++b) {
      RatVec sum(a.dim, Rational(0));
      for (long g : p.blocks[b]) sum[g] = 1;
      RatVec image = map.apply(sum);
      for (long k = 0; k < m; ++k) {
        const Rational& first = image[p.blocks[k][0]];
        for (long x : p.blocks[k])
          if (image[x] != first)
            throw Error("induced algebra: involution leaves the span");
        mat[k][b] = first * block_size[k] / block_size[b];
      }
    }
    return AntilinearMap{mat};
  };
  out.invol = restrict_map(a.invol);
  out.coinvol = restrict_map(a.coinvol);

  for (long b = 0; b < m; ++b) out.labels.push_back("B" + std::to_string(b));

  Verdict v = validate_2_algebra(out);
  if (!v.holds())
    throw Error("induced algebra normalization failure: " + v.notes);
  return out;
}

namespace {

// column matrix and the coordinate functionals of the orthogonal projection
struct ProjectionData {
  RatMat columns;  // n x m, basis vectors of B as columns
  RatMat alpha;    // m x n, P(x) = columns * alpha * x
};

std::optional<ProjectionData> make_projection(const RatMat& b_basis, long n) {
  const long m = static_cast<long>(b_basis.size());
  ProjectionData out;
  out.columns.assign(n, RatVec(m, Rational(0)));
  for (long j = 0; j < m; ++j) {
    if (static_cast<long>(b_basis[j].size()) != n) return std::nullopt;
    for (long i = 0; i < n; ++i) out.columns[i][j] = b_basis[j][i];
  }
  // gram = V^T V
  RatMat gram(m, RatVec(m, Rational(0)));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < n; ++k)
        gram[i][j] += b_basis[i][k] * b_basis[j][k];
  auto inv = matrix_inverse(gram);
  if (!inv) return std::nullopt;  // dependent basis
  // alpha = gram^{-1} V^T
  out.alpha.assign(m, RatVec(n, Rational(0)));
  for (long i = 0; i < m; ++i)
    for (long k = 0; k < n; ++k) {
      Rational acc(0);
      for (long j = 0; j < m; ++j) acc += (*inv)[i][j] * b_basis[j][k];
      out.alpha[i][k] = acc;
    }
  return out;
}

}  // namespace

Verdict is_strict_subobject(const TwoAlgebra& a, const RatMat& b_basis) {
  const long n = a.dim;
  const long m = static_cast<long>(b_basis.size());
  if (m == 0) return Verdict::fail({"empty-subspace", {}, "", ""}, "B is empty");

  auto proj = make_projection(b_basis, n);
  if (!proj)
    return Verdict::fail({"dependent-basis", {}, "", ""},
                         "B basis vectors are linearly dependent");

  // B is a subalgebra with its own unit, closed under sharp and flat
  {
    RatMat sys(2 * m * m, RatVec(m, Rational(0)));
    RatVec rhs(2 * m * m, Rational(0));
    for (long k = 0; k < m; ++k) {
      RatVec kb = b_basis[k];
      for (long s = 0; s < m; ++s) {
        RatVec left = a.product(b_basis[s], kb);
        RatVec right = a.product(kb, b_basis[s]);
        auto lc = coordinates_in_span(b_basis, left);
        auto rc = coordinates_in_span(b_basis, right);
        if (!lc || !rc)
          return Verdict::fail({"subalgebra-closure", {s, k}, "", ""},
                               "B is not closed under the product");
        for (long t = 0; t < m; ++t) {
          sys[k * m + t][s] += (*lc)[t];
          sys[m * m + k * m + t][s] += (*rc)[t];
        }
      }
    }
    for (long k = 0; k < m; ++k) {
      rhs[k * m + k] = 1;
      rhs[m * m + k * m + k] = 1;
    }
    if (!solve_linear(std::move(sys), rhs))
      return Verdict::fail({"no-unit", {}, "", ""},
                           "B carries no two-sided unit of its own");
  }
  for (long i = 0; i < m; ++i) {
    if (!coordinates_in_span(b_basis, a.invol.apply(b_basis[i])))
      return Verdict::fail({"sharp-closure", {i}, "", ""},
                           "B is not closed under the involution");
    if (!coordinates_in_span(b_basis, a.coinvol.apply(b_basis[i])))
      return Verdict::fail({"flat-closure", {i}, "", ""},
                           "B is not closed under the coinvolution");
  }

  // J = ker(P_B), spanned by x - P(x) over the standard basis; represented
  // through the functionals alpha: j in J iff alpha j = 0.
  // Coideal condition: (P (x) P) Delta(j) = 0 for all j in a kernel basis.
  RatMat kernel = kernel_basis(proj->alpha);
  if (static_cast<long>(kernel.size()) != n - m)
    return Verdict::fail({"complement-dimension", {}, "", ""},
                         "canonical complement has wrong dimension");
  const std::string refuted =
      "canonical complement refuted; general existence undecided";
  for (size_t jv = 0; jv < kernel.size(); ++jv) {
    const RatVec& j = kernel[jv];
    RatMat bb(m, RatVec(m, Rational(0)));
    for (long i = 0; i < n; ++i) {
      if (is_zero(j[i])) continue;
      a.comult.for_row(i, [&](long u, long v, const Rational& c) {
        Rational scale = j[i] * c;
        for (long s = 0; s < m; ++s) {
          if (is_zero(proj->alpha[s][u])) continue;
          for (long t = 0; t < m; ++t)
            bb[s][t] += scale * proj->alpha[s][u] * proj->alpha[t][v];
        }
      });
    }
    for (long s = 0; s < m; ++s)
      for (long t = 0; t < m; ++t)
        if (!is_zero(bb[s][t]))
          return Verdict::fail(
              {"coideal", {static_cast<long>(jv), s, t}, to_string(bb[s][t]),
               "0"},
              refuted);
    // J closed under sharp and flat
    RatVec sharp = a.invol.apply(j);
    RatVec flat = a.coinvol.apply(j);
    for (long s = 0; s < m; ++s) {
      Rational acc_s(0), acc_f(0);
      for (long i = 0; i < n; ++i) {
        acc_s += proj->alpha[s][i] * sharp[i];
        acc_f += proj->alpha[s][i] * flat[i];
      }
      if (!is_zero(acc_s))
        return Verdict::fail({"complement-sharp", {static_cast<long>(jv), s},
                              to_string(acc_s), "0"},
                             refuted);
      if (!is_zero(acc_f))
        return Verdict::fail({"complement-flat", {static_cast<long>(jv), s},
                              to_string(acc_f), "0"},
                             refuted);
    }
  }

  // projected comultiplication on B: Delta_P(b_i) in B (x) B coordinates
  std::vector<RatMat> delta_p(m, RatMat(m, RatVec(m, Rational(0))));
  for (long bi = 0; bi < m; ++bi) {
    for (long i = 0; i < n; ++i) {
      if (is_zero(b_basis[bi][i])) continue;
      a.comult.for_row(i, [&](long u, long v, const Rational& c) {
        Rational scale = b_basis[bi][i] * c;
        for (long s = 0; s < m; ++s) {
          if (is_zero(proj->alpha[s][u])) continue;
          for (long t = 0; t < m; ++t)
            delta_p[bi][s][t] += scale * proj->alpha[s][u] * proj->alpha[t][v];
        }
      });
    }
  }
  // coassociativity of Delta_P
  for (long i = 0; i < m; ++i) {
    std::map<std::array<long, 3>, Rational> lhs, rhs;
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < m; ++k) {
        if (is_zero(delta_p[i][j][k])) continue;
        for (long u = 0; u < m; ++u)
          for (long v = 0; v < m; ++v) {
            if (!is_zero(delta_p[j][u][v])) {
              auto& slot = lhs[{u, v, k}];
              slot += delta_p[i][j][k] * delta_p[j][u][v];
              if (is_zero(slot)) lhs.erase({u, v, k});
            }
            if (!is_zero(delta_p[k][u][v])) {
              auto& slot = rhs[{j, u, v}];
              slot += delta_p[i][j][k] * delta_p[k][u][v];
              if (is_zero(slot)) rhs.erase({j, u, v});
            }
          }
      }
    if (lhs != rhs)
      return Verdict::fail({"projected-coassociativity", {i}, "", ""},
                           refuted);
  }
  // restricted counit is a counit for Delta_P
  RatVec eps(m);
  for (long i = 0; i < m; ++i) eps[i] = a.counit_of(b_basis[i]);
  for (long i = 0; i < m; ++i) {
    RatVec left(m, Rational(0)), right(m, Rational(0));
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < m; ++k) {
        left[k] += eps[j] * delta_p[i][j][k];
        right[j] += eps[k] * delta_p[i][j][k];
      }
    RatVec e(m, Rational(0));
    e[i] = 1;
    if (left != e || right != e)
      return Verdict::fail({"projected-counit", {i}, "", ""}, refuted);
  }

  return Verdict::pass();
}

Verdict verify_nonstrict_witness(const TwoAlgebra& a, const TwoAlgebra& b,
                                 const RatMat& t, const StructureTensor& rho) {
  const long n = a.dim;
  const long m = b.dim;
  if (static_cast<long>(t.size()) != n)
    throw Error("embedding matrix must have ambient dimension rows");
  for (const auto& row : t)
    if (static_cast<long>(row.size()) != m)
      throw Error("embedding matrix must have embedded dimension columns");
  if (rho.dim() != n) throw Error("coaction tensor has wrong dimension");

  // T is an injective unit-, sharp-, flat-preserving algebra map
  RatMat t_cols(m, RatVec(n));
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < n; ++i) t_cols[j][i] = t[i][j];
  if (matrix_rank(t_cols) != m) throw Error("embedding is not injective");
  if (mat_apply(t, b.unit) != a.unit)
    throw Error("embedding does not preserve the unit");
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      RatVec lhs = a.product(t_cols[i], t_cols[j]);
      RatVec prod_b = tensor_product_basis(b.mult, i, j);
      RatVec rhs = mat_apply(t, prod_b);
      if (lhs != rhs) throw Error("embedding is not multiplicative");
    }
  for (long j = 0; j < m; ++j) {
    if (a.invol.apply(t_cols[j]) != mat_apply(t, b.invol.apply(b.basis_vector(j))))
      throw Error("embedding does not intertwine the involutions");
    if (a.coinvol.apply(t_cols[j]) !=
        mat_apply(t, b.coinvol.apply(b.basis_vector(j))))
      throw Error("embedding does not intertwine the coinvolutions");
  }

  // extension: rho(T b_s) = (T (x) T) Delta_B(b_s)
  for (long s = 0; s < m; ++s) {
    RatMat lhs = tensor_coproduct(rho, t_cols[s]);
    RatMat rhs(n, RatVec(n, Rational(0)));
    b.comult.for_row(s, [&](long j, long k, const Rational& c) {
      for (long u = 0; u < n; ++u) {
        if (is_zero(t_cols[j][u])) continue;
        for (long v = 0; v < n; ++v)
          rhs[u][v] += c * t_cols[j][u] * t_cols[k][v];
      }
    });
    if (lhs != rhs)
      return Verdict::fail({"coaction-extension", {s}, "", ""},
                           "coaction does not extend the embedded "
                           "self-coaction");
  }

  // coassociativity of rho
  for (long i = 0; i < n; ++i) {
    std::map<std::array<long, 3>, Rational> lhs, rhs;
    rho.for_row(i, [&](long j, long k, const Rational& c) {
      rho.for_row(j, [&](long u, long v, const Rational& d) {
        auto& slot = lhs[{u, v, k}];
        slot += c * d;
        if (is_zero(slot)) lhs.erase({u, v, k});
      });
      rho.for_row(k, [&](long u, long v, const Rational& d) {
        auto& slot = rhs[{j, u, v}];
        slot += c * d;
        if (is_zero(slot)) rhs.erase({j, u, v});
      });
    });
    if (lhs != rhs)
      return Verdict::fail({"coaction-coassociativity", {i}, "", ""},
                           "coaction is not coassociative");
  }

  // left counit law
  for (long i = 0; i < n; ++i) {
    RatVec acc(n, Rational(0));
    rho.for_row(i, [&](long j, long k, const Rational& c) {
      acc[k] += a.counit[j] * c;
    });
    RatVec e(n, Rational(0));
    e[i] = 1;
    if (acc != e)
      return Verdict::fail({"coaction-counit", {i}, "", ""},
                           "(counit (x) id) rho is not the identity");
  }

  return Verdict::pass();
}

}  // namespace posalg
