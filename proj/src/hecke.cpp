#include "posalg/hecke.hpp"

#include <algorithm>
#include <map>

namespace posalg {

long inversion_count(const std::vector<long>& one_line) {
  long inv = 0;
  for (size_t i = 0; i < one_line.size(); ++i)
    for (size_t j = i + 1; j < one_line.size(); ++j)
      if (one_line[i] > one_line[j]) ++inv;
  return inv;
}

Permutation Permutation::from(std::vector<long> one_line) {
  Permutation p;
  p.length = inversion_count(one_line);
  p.one_line = std::move(one_line);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<long> inv(one_line.size());
  for (long i = 0; i < n(); ++i) inv[one_line[i]] = i;
  return Permutation::from(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<long> c(a.one_line.size());
  for (long i = 0; i < a.n(); ++i) c[i] = b.one_line[a.one_line[i]];
  return Permutation::from(std::move(c));
}

namespace {

std::string word_label(const Permutation& p) {
  std::string s;
  for (size_t i = 0; i < p.one_line.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p.one_line[i] + 1);
  }
  return s;
}

}  // namespace

HeckeAlgebra build_hecke(long n, const Rational& q) {
  if (n < 2 || n > 5) throw Error("build_hecke supports n in 2..5");
  if (sgn(q) <= 0) throw Error("build_hecke needs q > 0");

  HeckeAlgebra h;
  h.n = n;
  h.q = q;

  std::vector<long> p(n);
  for (long i = 0; i < n; ++i) p[i] = i;
  do {
    h.basis.push_back(Permutation::from(p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(h.basis.begin(), h.basis.end(),
                   [](const Permutation& a, const Permutation& b) {
                     if (a.length != b.length) return a.length < b.length;
                     return a.one_line < b.one_line;
                   });
  const long sz = static_cast<long>(h.basis.size());
  std::map<std::vector<long>, long> index;
  for (long i = 0; i < sz; ++i) index[h.basis[i].one_line] = i;
  for (long i = 0; i < sz; ++i) {
    h.length.push_back(h.basis[i].length);
    h.inverse_index.push_back(index[h.basis[i].inverse().one_line]);
  }

  // s_i w for each basis element and Coxeter generator
  std::vector<std::vector<long>> left_gen(n - 1, std::vector<long>(sz));
  std::vector<Permutation> gens;
  for (long i = 0; i + 1 < n; ++i) {
    std::vector<long> g(n);
    for (long k = 0; k < n; ++k) g[k] = k;
    std::swap(g[i], g[i + 1]);
    gens.push_back(Permutation::from(std::move(g)));
  }
  for (long i = 0; i + 1 < n; ++i)
    for (long w = 0; w < sz; ++w)
      left_gen[i][w] = index[(gens[i] * h.basis[w]).one_line];

  // left multiplication of a coefficient vector by tau_i
  auto tau_left = [&](long i, const RatVec& v) {
    RatVec out(sz, Rational(0));
    for (long w = 0; w < sz; ++w) {
      if (is_zero(v[w])) continue;
      long sw = left_gen[i][w];
      if (h.length[sw] > h.length[w]) {
        out[sw] += v[w];
      } else {
        out[w] += v[w] * (q - 1);
        out[sw] += v[w] * q;
      }
    }
    return out;
  };

  // tau_g tau_h for all basis pairs, by induction on l(g):
  // tau_g = tau_i tau_{g'} with g = s_i g', l(g') = l(g) - 1
  h.mult = StructureTensor(sz);
  std::vector<std::vector<RatVec>> products(sz, std::vector<RatVec>(sz));
  for (long hh = 0; hh < sz; ++hh) {
    RatVec e(sz, Rational(0));
    e[hh] = 1;
    products[0][hh] = std::move(e);  // identity has index 0
  }
  // basis is sorted by length, so shorter factors are already done
  std::vector<long> descent(sz, -1);  // i with l(s_i g) < l(g)
  std::vector<long> shorter(sz, -1);  // index of s_i g
  for (long g = 1; g < sz; ++g) {
    for (long i = 0; i + 1 < n; ++i) {
      long sg = left_gen[i][g];
      if (h.length[sg] < h.length[g]) {
        descent[g] = i;
        shorter[g] = sg;
        break;
      }
    }
  }
  for (long g = 1; g < sz; ++g)
    for (long hh = 0; hh < sz; ++hh)
      products[g][hh] = tau_left(descent[g], products[shorter[g]][hh]);

  for (long g = 0; g < sz; ++g)
    for (long hh = 0; hh < sz; ++hh)
      for (long k = 0; k < sz; ++k)
        if (!is_zero(products[g][hh][k]))
          h.mult.set(g, hh, k, products[g][hh][k]);
  return h;
}

TwoAlgebra hecke_two_algebra(const HeckeAlgebra& h) {
  const long sz = static_cast<long>(h.basis.size());
  TwoAlgebra a;
  a.dim = sz;
  a.mult = StructureTensor(sz);
  a.comult = StructureTensor(sz);
  // mu^g_{h1,h2} = q^{l(g) - l(h1) - l(h2)} c^g_{h1,h2}
  auto qpow = [&](long e) {
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= h.q;
    for (long i = 0; i > e; --i) r /= h.q;
    return r;
  };
  for (const auto& [key, value] : h.mult.entries()) {
    long scale = h.length[key[2]] - h.length[key[0]] - h.length[key[1]];
    a.mult.set(key[0], key[1], key[2], value * qpow(scale));
  }
  for (long i = 0; i < sz; ++i) a.comult.set(i, i, i, Rational(1));
  a.unit = RatVec(sz, Rational(0));
  a.unit[0] = 1;
  a.counit = RatVec(sz, Rational(1));
  a.invol = AntilinearMap::permutation(h.inverse_index);
  a.coinvol = AntilinearMap::identity(sz);
  for (const auto& p : h.basis) a.labels.push_back(word_label(p));
  return a;
}

}  // namespace posalg
