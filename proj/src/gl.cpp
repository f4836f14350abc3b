#include "posalg/gl.hpp"

#include <algorithm>
#include <map>

#include "posalg/induced.hpp"
#include "posalg/semigroup_algebra.hpp"

namespace posalg {

namespace {

long det_mod_p(std::vector<long> m, long n, long p) {
  long det = 1;
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long r = c; r < n; ++r)
      if (m[r * n + c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (long j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[c * n + j]);
      det = (p - det) % p;
    }
    det = (det * m[c * n + c]) % p;
    // normalize pivot row to 1
    long inv = 1;
    for (long t = 1; t < p; ++t)
      if ((m[c * n + c] * t) % p == 1) inv = t;
    for (long j = 0; j < n; ++j) m[c * n + j] = (m[c * n + j] * inv) % p;
    for (long r = c + 1; r < n; ++r) {
      long f = m[r * n + c] % p;
      if (f)
        for (long j = 0; j < n; ++j)
          m[r * n + j] = ((m[r * n + j] - f * m[c * n + j]) % p + p) % p;
    }
  }
  return det % p;
}

long rank_mod_p(std::vector<long> m, long rows, long cols, long p) {
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r * cols + c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (long j = 0; j < cols; ++j)
      std::swap(m[pivot * cols + j], m[rank * cols + j]);
    long inv = 1;
    for (long t = 1; t < p; ++t)
      if ((m[rank * cols + c] * t) % p == 1) inv = t;
    for (long j = 0; j < cols; ++j)
      m[rank * cols + j] = (m[rank * cols + j] * inv) % p;
    for (long r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long f = m[r * cols + c] % p;
      if (f)
        for (long j = 0; j < cols; ++j)
          m[r * cols + j] = ((m[r * cols + j] - f * m[rank * cols + j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FiniteFieldGroup build_gl(long n, long p) {
  if (n < 2 || n > 3) throw Error("build_gl supports n in 2..3");
  if (!is_prime(p)) throw Error("build_gl needs a prime p");
  if ((n == 2 && p > 5) || (n == 3 && p > 3))
    throw Error("build_gl: prime exceeds the supported range");

  // expected order: prod_{k<n} (p^n - p^k)
  long expected = 1;
  for (long k = 0; k < n; ++k) expected *= ipow(p, n) - ipow(p, k);
  if (expected > kGlOrderCap) throw Error("build_gl: order cap exceeded");

  FiniteFieldGroup g;
  g.n = n;
  g.p = p;

  long cells = n * n;
  long total = ipow(p, cells);
  std::vector<long> mat(cells);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (long i = 0; i < cells; ++i) {
      mat[i] = c % p;
      c /= p;
    }
    if (det_mod_p(mat, n, p) != 0) g.elements.push_back(mat);
  }
  if (static_cast<long>(g.elements.size()) != expected)
    throw Error("build_gl: order formula check failed");

  // identity first, then lexicographic
  std::vector<long> id(cells, 0);
  for (long i = 0; i < n; ++i) id[i * n + i] = 1;
  std::sort(g.elements.begin(), g.elements.end(),
            [&](const std::vector<long>& a, const std::vector<long>& b) {
              if (a == id) return b != id;
              if (b == id) return false;
              return a < b;
            });

  std::map<std::vector<long>, long> index;
  for (size_t i = 0; i < g.elements.size(); ++i) index[g.elements[i]] = i;

  long sz = expected;
  std::vector<std::vector<long>> table(sz, std::vector<long>(sz));
  std::vector<long> prod(cells);
  for (long a = 0; a < sz; ++a)
    for (long b = 0; b < sz; ++b) {
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          long acc = 0;
          for (long k = 0; k < n; ++k)
            acc += g.elements[a][i * n + k] * g.elements[b][k * n + j];
          prod[i * n + j] = acc % p;
        }
      table[a][b] = index.at(prod);
    }
  std::vector<std::string> labels(sz);
  for (long a = 0; a < sz; ++a) {
    std::string s;
    for (long i = 0; i < cells; ++i) s += std::to_string(g.elements[a][i]);
    labels[a] = s;
  }
  g.monoid = FiniteMonoid::from_table(std::move(table), std::move(labels));

  for (long a = 0; a < sz; ++a) {
    bool upper = true;
    for (long i = 0; i < n && upper; ++i)
      for (long j = 0; j < i; ++j)
        if (g.elements[a][i * n + j] != 0) upper = false;
    if (upper) g.borel.push_back(a);
  }
  return g;
}

Partition borel_double_cosets(const FiniteFieldGroup& g) {
  const long sz = g.monoid.size;
  std::vector<long> block_of(sz, -1);
  long next = 0;
  for (long x = 0; x < sz; ++x) {
    if (block_of[x] != -1) continue;
    for (long b1 : g.borel)
      for (long b2 : g.borel)
        block_of[g.monoid.table[g.monoid.table[b1][x]][b2]] = next;
    ++next;
  }
  Partition p = Partition::from_assignment(block_of);
  long factorial = 1;
  for (long k = 2; k <= g.n; ++k) factorial *= k;
  if (p.block_count() != factorial)
    throw Error("Bruhat decomposition: unexpected double coset count");
  return p;
}

std::vector<long> bruhat_cell(const FiniteFieldGroup& g, long element) {
  const long n = g.n;
  const auto& m = g.elements[element];
  // r(i,j) = rank of the submatrix on rows i..n-1, columns 0..j
  auto r = [&](long i, long j) -> long {
    if (i >= n || j < 0) return 0;
    std::vector<long> sub;
    for (long row = i; row < n; ++row)
      for (long col = 0; col <= j; ++col) sub.push_back(m[row * n + col]);
    return rank_mod_p(sub, n - i, j + 1, g.p);
  };
  std::vector<long> w(n, -1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long delta = r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1);
      if (delta == 1) w[i] = j;
    }
  return w;
}

IwahoriReport iwahori_check(long n, long p) {
  IwahoriReport report;
  report.n = n;
  report.p = p;

  HeckeAlgebra hecke = build_hecke(n, Rational(p));
  TwoAlgebra target = hecke_two_algebra(hecke);

  FiniteFieldGroup g = build_gl(n, p);
  auto ambient = std::make_shared<const TwoAlgebra>(group_bialgebra(g.monoid));
  Partition cosets = borel_double_cosets(g);

  StabilityResult stable = is_stable_partition(ambient, cosets);
  if (!stable.verdict.holds()) {
    report.verdict = stable.verdict;
    return report;
  }
  TwoAlgebra induced = induced_two_algebra(stable.cert);

  // block -> Hecke basis index via the Bruhat cell of any representative
  std::map<std::vector<long>, long> hecke_index;
  for (size_t i = 0; i < hecke.basis.size(); ++i)
    hecke_index[hecke.basis[i].one_line] = i;
  std::vector<long> perm(cosets.block_count(), -1);
  std::vector<bool> used(hecke.basis.size(), false);
  for (long b = 0; b < cosets.block_count(); ++b) {
    std::vector<long> w = bruhat_cell(g, cosets.blocks[b][0]);
    auto it = hecke_index.find(w);
    if (it == hecke_index.end() || used[it->second]) {
      report.verdict = Verdict::fail(
          {"bruhat-matching", {b}, "", ""},
          "double coset does not match a unique permutation cell");
      return report;
    }
    // every member of the block must share the cell
    for (long x : cosets.blocks[b])
      if (bruhat_cell(g, x) != w) {
        report.verdict =
            Verdict::fail({"bruhat-matching", {b, x}, "", ""},
                          "block members lie in different Bruhat cells");
        return report;
      }
    perm[b] = it->second;
    used[it->second] = true;
  }

  report.identities_checked =
      static_cast<long>(target.dim) * target.dim * target.dim;
  for (long b = 0; b < cosets.block_count(); ++b) {
    report.block_sizes.push_back(
        static_cast<long>(cosets.blocks[b].size()));
    report.block_labels.push_back(target.labels[perm[b]]);
  }

  // entrywise comparison of every structure constant under the matching
  for (long i = 0; i < induced.dim; ++i)
    for (long j = 0; j < induced.dim; ++j)
      for (long k = 0; k < induced.dim; ++k) {
        Rational lhs = induced.mult.get(i, j, k);
        Rational rhs = target.mult.get(perm[i], perm[j], perm[k]);
        if (lhs != rhs) {
          report.verdict = Verdict::fail(
              {"structure-constant", {i, j, k}, to_string(lhs), to_string(rhs)},
              "induced constant differs from the Hecke constant");
          return report;
        }
      }
  if (!isomorphic_under(induced, target, perm)) {
    report.verdict = Verdict::fail(
        {"structure-mismatch", {}, "", ""},
        "induced 2-algebra differs from the Hecke 2-algebra");
    return report;
  }

  // certify the strict subobject end to end
  RatMat block_sums;
  for (long b = 0; b < cosets.block_count(); ++b) {
    RatVec v(ambient->dim, Rational(0));
    for (long x : cosets.blocks[b]) v[x] = 1;
    block_sums.push_back(std::move(v));
  }
  Verdict strict = is_strict_subobject(*ambient, block_sums);
  if (!strict.holds()) {
    report.verdict = strict;
    return report;
  }

  report.verdict = Verdict::pass("strict dilation of H_" + std::to_string(n) +
                                 "(" + std::to_string(p) + ") certified");
  return report;
}

}  // namespace posalg
