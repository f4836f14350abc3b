#include "posalg/splitting.hpp"

#include <algorithm>
#include <numeric>

namespace posalg {

namespace {

// Divides p by (x - r) exactly; p must vanish at r.
RatVec divide_linear(const RatVec& p, const Rational& r) {
  long d = static_cast<long>(p.size()) - 1;
  RatVec q(d, Rational(0));
  Rational carry = p[d];
  for (long i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p[i] + carry * r;
  }
  if (!is_zero(carry)) throw Error("divide_linear: not a root");
  return q;
}

// Divides p by a monic integer polynomial if it divides exactly.
std::optional<RatVec> try_divide(const RatVec& p,
                                 const std::vector<Integer>& den) {
  long dd = static_cast<long>(den.size()) - 1;
  long dn = static_cast<long>(p.size()) - 1;
  if (dn < dd) return std::nullopt;
  RatVec rem = p;
  RatVec quot(dn - dd + 1, Rational(0));
  for (long k = dn - dd; k >= 0; --k) {
    Rational c = rem[k + dd];
    quot[k] = c;
    if (!is_zero(c))
      for (long j = 0; j <= dd; ++j) rem[k + j] -= c * Rational(den[j]);
  }
  for (const auto& c : rem)
    if (!is_zero(c)) return std::nullopt;
  return quot;
}

Rational poly_eval(const RatVec& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> small_divisors(Integer n, size_t cap = 4096) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  if (n == 0) return out;
  if (n > Integer(1000000000000L)) return {};  // divisor walk infeasible
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
      if (out.size() > cap) return {};
    }
  }
  return out;
}

}  // namespace

std::optional<CycVec> cyclotomic_roots(const RatVec& monic_poly) {
  RatVec p = monic_poly;
  while (p.size() > 1 && is_zero(p.back())) p.pop_back();
  CycVec roots;

  // zero roots
  while (p.size() > 1 && is_zero(p[0])) {
    roots.push_back(Cyclotomic());
    p.erase(p.begin());
  }

  // rational roots: clear denominators, candidates u/v with u | P(0), v | lead
  if (p.size() > 1) {
    Integer common(1);
    for (const auto& c : p) common = lcm(common, c.get_den());
    std::vector<Integer> ip;
    for (const auto& c : p) ip.push_back(Rational(c * Rational(common)).get_num());
    auto nums = small_divisors(ip[0]);
    auto dens = small_divisors(ip.back());
    bool progress = true;
    while (progress && p.size() > 1) {
      progress = false;
      for (const auto& u : nums) {
        for (const auto& v : dens) {
          for (int sign : {1, -1}) {
            Rational cand(sign * u, v);
            cand.canonicalize();
            if (p.size() > 1 && is_zero(poly_eval(p, cand))) {
              while (p.size() > 1 && is_zero(poly_eval(p, cand))) {
                roots.push_back(Cyclotomic(cand));
                p = divide_linear(p, cand);
              }
              progress = true;
            }
          }
        }
      }
    }
  }

  // cyclotomic factors Phi_e
  for (long e = 2; e <= max_cyclotomic_order() && p.size() > 1; ++e) {
    if (static_cast<long>(p.size()) - 1 < euler_phi(e)) continue;
    while (true) {
      auto q = try_divide(p, cyclotomic_polynomial(e));
      if (!q) break;
      p = *q;
      for (long j = 1; j < e; ++j)
        if (std::gcd(j, e) == 1) roots.push_back(root_of_unity(e, j));
    }
  }

  if (p.size() != 1) return std::nullopt;
  return roots;
}

CycVec tensor_product_cyc(const StructureTensor& mult, const CycVec& u,
                          const CycVec& v) {
  CycVec out(mult.dim());
  for (long i = 0; i < mult.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (long j = 0; j < mult.dim(); ++j) {
      if (v[j].is_zero()) continue;
      Cyclotomic scale = u[i] * v[j];
      mult.for_slice(i, j, [&](long k, const Rational& c) {
        out[k] += scale * Cyclotomic(c);
      });
    }
  }
  return out;
}

CycVec mat_apply_cyc(const RatMat& m, const CycVec& v) {
  long n = static_cast<long>(m.size());
  CycVec out(n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (!is_zero(m[i][j]) && !v[j].is_zero())
        out[i] += Cyclotomic(m[i][j]) * v[j];
  return out;
}

std::optional<CommutativeSplit> split_commutative(const StructureTensor& mult) {
  const long n = mult.dim();
  if (n == 0) return std::nullopt;

  // Candidate eigenvalues per generator, from the factored minimal
  // polynomial of its left-multiplication operator.
  std::vector<CycVec> candidates(n);
  long field_order = 1;
  for (long g = 0; g < n; ++g) {
    RatMat lg(n, RatVec(n, Rational(0)));
    for (long j = 0; j < n; ++j)
      mult.for_slice(g, j, [&](long k, const Rational& c) { lg[k][j] = c; });
    RatVec mp = minimal_polynomial(lg);
    auto roots = cyclotomic_roots(mp);
    if (!roots) return std::nullopt;
    // A repeated root means the operator is not semisimple.
    for (size_t a = 0; a < roots->size(); ++a)
      for (size_t b = a + 1; b < roots->size(); ++b)
        if ((*roots)[a] == (*roots)[b]) return std::nullopt;
    for (const auto& r : *roots) field_order = std::lcm(field_order, r.order());
    candidates[g] = std::move(*roots);
  }
  if (field_order > max_cyclotomic_order()) return std::nullopt;

  // Refine the full space by eigenspaces of each generator.
  std::vector<CycMat> blocks;
  {
    CycMat full(n);
    for (long i = 0; i < n; ++i) {
      CycVec e(n);
      e[i] = Cyclotomic(Rational(1));
      full[i] = std::move(e);
    }
    blocks.push_back(std::move(full));
  }
  for (long g = 0; g < n; ++g) {
    std::vector<CycMat> next;
    for (auto& block : blocks) {
      long d = static_cast<long>(block.size());
      if (d == 1) {
        next.push_back(std::move(block));
        continue;
      }
      // matrix of L_g on the block basis
      RatMat lg(n, RatVec(n, Rational(0)));
      for (long j = 0; j < n; ++j)
        mult.for_slice(g, j, [&](long k, const Rational& c) { lg[k][j] = c; });
      CycMat op(d, CycVec(d));
      for (long b = 0; b < d; ++b) {
        CycVec img = mat_apply_cyc(lg, block[b]);
        auto coords = coordinates_in_span(block, img);
        if (!coords) return std::nullopt;  // block not invariant: bug guard
        for (long r = 0; r < d; ++r) op[r][b] = (*coords)[r];
      }
      long covered = 0;
      for (const auto& mu : candidates[g]) {
        CycMat shifted = op;
        for (long r = 0; r < d; ++r) shifted[r][r] -= mu;
        auto kernel = kernel_basis(shifted);
        if (kernel.empty()) continue;
        CycMat sub;
        for (const auto& coords : kernel) {
          CycVec v(n);
          for (long b = 0; b < d; ++b)
            if (!coords[b].is_zero())
              for (long i = 0; i < n; ++i) v[i] += coords[b] * block[b][i];
          sub.push_back(std::move(v));
        }
        covered += static_cast<long>(sub.size());
        next.push_back(std::move(sub));
      }
      if (covered != d) return std::nullopt;  // missing eigenvalues
    }
    blocks = std::move(next);
  }
  for (const auto& block : blocks)
    if (block.size() != 1) return std::nullopt;
  if (static_cast<long>(blocks.size()) != n) return std::nullopt;

  // Normalize each line to its idempotent and read off the characters.
  CommutativeSplit split;
  split.field_order = field_order;
  for (const auto& block : blocks) {
    const CycVec& v = block[0];
    CycVec v2 = tensor_product_cyc(mult, v, v);
    Cyclotomic scale;
    bool found = false;
    for (long i = 0; i < n && !found; ++i) {
      if (!v[i].is_zero()) {
        scale = v2[i] / v[i];
        found = true;
      }
    }
    if (!found || scale.is_zero()) return std::nullopt;
    CycVec idem(n);
    Cyclotomic inv = scale.inverse();
    for (long i = 0; i < n; ++i) idem[i] = v[i] * inv;
    split.idempotents.push_back(std::move(idem));
  }
  for (const auto& idem : split.idempotents) {
    CycVec row(n);
    long pivot = -1;
    for (long i = 0; i < n; ++i)
      if (!idem[i].is_zero()) {
        pivot = i;
        break;
      }
    for (long j = 0; j < n; ++j) {
      CycVec ej(n);
      ej[j] = Cyclotomic(Rational(1));
      CycVec prod = tensor_product_cyc(mult, ej, idem);
      row[j] = prod[pivot] / idem[pivot];
    }
    split.characters.push_back(std::move(row));
  }

  // Deterministic order: sort by serialized character row.
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    const CycVec& ra = split.characters[a];
    const CycVec& rb = split.characters[b];
    for (long j = 0; j < n; ++j) {
      if (ra[j] != rb[j]) return serialization_less(ra[j], rb[j]);
    }
    return false;
  });
  CommutativeSplit sorted;
  sorted.field_order = field_order;
  for (long i : order) {
    sorted.idempotents.push_back(split.idempotents[i]);
    sorted.characters.push_back(split.characters[i]);
  }
  return sorted;
}

}  // namespace posalg
