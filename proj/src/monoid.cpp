#include "posalg/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace posalg {

namespace {

std::string index_label(long i) { return std::to_string(i); }

// catalog order: size, then cyclic < other abelian < table groups <
// inverse semigroups, then name
int member_rank(const CatalogMember& m) {
  if (!m.is_group) return 3;
  if (!m.spec) return 2;
  if (m.spec->kind == GroupSpec::Kind::Cyclic) return 0;
  if (m.spec->kind == GroupSpec::Kind::Abelian) return 1;
  return 2;
}

bool member_less(const CatalogMember& a, const CatalogMember& b) {
  if (a.semigroup.size() != b.semigroup.size())
    return a.semigroup.size() < b.semigroup.size();
  if (member_rank(a) != member_rank(b)) return member_rank(a) < member_rank(b);
  return a.name < b.name;
}

}  // namespace

FiniteMonoid FiniteMonoid::from_table(std::vector<std::vector<long>> table,
                                      std::vector<std::string> labels) {
  FiniteMonoid m;
  m.size = static_cast<long>(table.size());
  for (const auto& row : table) {
    if (static_cast<long>(row.size()) != m.size)
      throw Error("multiplication table is not square");
    for (long v : row)
      if (v < 0 || v >= m.size) throw Error("table entry out of range");
  }
  m.table = std::move(table);
  for (long a = 0; a < m.size; ++a)
    for (long b = 0; b < m.size; ++b)
      for (long c = 0; c < m.size; ++c)
        if (m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]])
          throw Error("multiplication table is not associative at (" +
                      std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
  m.unit = m.find_unit();
  m.zero = m.find_zero();
  if (labels.empty()) {
    for (long i = 0; i < m.size; ++i) labels.push_back(index_label(i));
  }
  if (static_cast<long>(labels.size()) != m.size)
    throw Error("label count does not match table size");
  m.labels = std::move(labels);
  return m;
}

std::optional<long> FiniteMonoid::find_unit() const {
  for (long e = 0; e < size; ++e) {
    bool ok = true;
    for (long a = 0; a < size && ok; ++a)
      ok = table[e][a] == a && table[a][e] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<long> FiniteMonoid::find_zero() const {
  for (long z = 0; z < size; ++z) {
    bool ok = true;
    for (long a = 0; a < size && ok; ++a)
      ok = table[z][a] == z && table[a][z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

bool FiniteMonoid::is_group() const {
  if (!unit) return false;
  for (long a = 0; a < size; ++a) {
    bool has_inverse = false;
    for (long b = 0; b < size && !has_inverse; ++b)
      has_inverse = table[a][b] == *unit && table[b][a] == *unit;
    if (!has_inverse) return false;
  }
  return true;
}

InverseSemigroup InverseSemigroup::from(FiniteMonoid base,
                                        std::vector<long> inv) {
  if (static_cast<long>(inv.size()) != base.size)
    throw Error("inverse map size mismatch");
  const auto& t = base.table;
  for (long a = 0; a < base.size; ++a) {
    if (inv[inv[a]] != a) throw Error("inverse map is not an involution");
    if (t[t[a][inv[a]]][a] != a) throw Error("a inv(a) a != a");
    if (t[t[inv[a]][a]][inv[a]] != inv[a]) throw Error("inv(a) a inv(a) != inv(a)");
  }
  for (long a = 0; a < base.size; ++a)
    for (long b = 0; b < base.size; ++b)
      if (inv[t[a][b]] != t[inv[b]][inv[a]])
        throw Error("(ab)* != b* a*");
  for (long a = 0; a < base.size; ++a)
    if (t[a][a] == a)
      for (long b = 0; b < base.size; ++b)
        if (t[b][b] == b && t[a][b] != t[b][a])
          throw Error("idempotents do not commute");
  InverseSemigroup s;
  s.base = std::move(base);
  s.inv = std::move(inv);
  return s;
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Cyclic:
      out << "cyclic:" << parameters[0];
      break;
    case Kind::Abelian: {
      out << "abelian:";
      for (size_t i = 0; i < parameters.size(); ++i)
        out << (i ? "," : "") << parameters[i];
      break;
    }
    case Kind::Symmetric:
      out << "symmetric:" << parameters[0];
      break;
    case Kind::DirectProduct: {
      out << "product(";
      for (size_t i = 0; i < factors.size(); ++i)
        out << (i ? ";" : "") << factors[i].to_string();
      out << ")";
      break;
    }
    case Kind::Table:
      out << "table:" << table_name;
      break;
  }
  return out.str();
}

namespace {

FiniteMonoid cyclic_group(long m) {
  if (m < 1) throw Error("cyclic group needs m >= 1");
  std::vector<std::vector<long>> t(m, std::vector<long>(m));
  std::vector<std::string> labels;
  for (long a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (long b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  }
  return FiniteMonoid::from_table(std::move(t), std::move(labels));
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  long n = a.size * b.size;
  if (n > kGroupSizeCap) throw Error("group size cap exceeded");
  auto idx = [&](long x, long y) { return x * b.size + y; };
  std::vector<std::vector<long>> t(n, std::vector<long>(n));
  std::vector<std::string> labels(n);
  for (long x1 = 0; x1 < a.size; ++x1)
    for (long y1 = 0; y1 < b.size; ++y1) {
      labels[idx(x1, y1)] = "(" + a.labels[x1] + "," + b.labels[y1] + ")";
      for (long x2 = 0; x2 < a.size; ++x2)
        for (long y2 = 0; y2 < b.size; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] =
              idx(a.table[x1][x2], b.table[y1][y2]);
    }
  return FiniteMonoid::from_table(std::move(t), std::move(labels));
}

long count_inversions(const std::vector<long>& p) {
  long inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

std::string one_line(const std::vector<long>& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p[i] + 1);
  }
  return s;
}

// Elements ordered by (inversion count, lexicographic one-line notation),
// the distinguished ordering shared with the Hecke basis.
FiniteMonoid symmetric_group(long n) {
  if (n < 1 || n > 6) throw Error("symmetric group supported for n <= 6");
  std::vector<std::vector<long>> perms;
  std::vector<long> p(n);
  for (long i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(perms.begin(), perms.end(),
                   [](const std::vector<long>& a, const std::vector<long>& b) {
                     long ia = count_inversions(a), ib = count_inversions(b);
                     if (ia != ib) return ia < ib;
                     return a < b;
                   });
  std::map<std::vector<long>, long> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  long sz = static_cast<long>(perms.size());
  std::vector<std::vector<long>> t(sz, std::vector<long>(sz));
  std::vector<std::string> labels(sz);
  for (long a = 0; a < sz; ++a) {
    labels[a] = one_line(perms[a]);
    for (long b = 0; b < sz; ++b) {
      // left-to-right: (g then h)(i) = h(g(i))
      std::vector<long> c(n);
      for (long i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = index[c];
    }
  }
  return FiniteMonoid::from_table(std::move(t), std::move(labels));
}

FiniteMonoid dihedral_group(long n) {
  // elements r^i s^j, 0 <= i < n, j in {0,1}; s r s = r^{-1}
  long sz = 2 * n;
  auto idx = [&](long i, long j) { return j * n + i; };
  std::vector<std::vector<long>> t(sz, std::vector<long>(sz));
  std::vector<std::string> labels(sz);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < 2; ++j) {
      labels[idx(i, j)] =
          (j ? "r" + std::to_string(i) + "s" : "r" + std::to_string(i));
      for (long k = 0; k < n; ++k)
        for (long l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + k or i - k} s^{j xor l}
          long e = j ? (i - k % n + n) % n : (i + k) % n;
          t[idx(i, j)][idx(k, l)] = idx(e, j ^ l);
        }
    }
  return FiniteMonoid::from_table(std::move(t), std::move(labels));
}

FiniteMonoid quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k
  const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](long x) { return x ^ 1; };
  // base products on {1:0, i:2, j:4, k:6} with sign flags
  auto mulbase = [&](long a, long b) -> long {
    long sa = a & 1, sb = b & 1;
    long ua = a & ~1L, ub = b & ~1L;
    long res;
    if (ua == 0) res = ub;
    else if (ub == 0) res = ua;
    else if (ua == ub) res = 1;  // i*i = -1
    else if (ua == 2 && ub == 4) res = 6;       // ij = k
    else if (ua == 4 && ub == 6) res = 2;       // jk = i
    else if (ua == 6 && ub == 2) res = 4;       // ki = j
    else if (ua == 4 && ub == 2) res = 7;       // ji = -k
    else if (ua == 6 && ub == 4) res = 3;       // kj = -i
    else res = 5;                               // ik = -j
    long sign = sa ^ sb;
    return sign ? neg(res) : res;
  };
  std::vector<std::vector<long>> t(8, std::vector<long>(8));
  for (long a = 0; a < 8; ++a)
    for (long b = 0; b < 8; ++b) t[a][b] = mulbase(a, b);
  return FiniteMonoid::from_table(
      std::move(t), std::vector<std::string>(names, names + 8));
}

FiniteMonoid alternating4_group() {
  // even permutations of 4 points, composed left to right
  std::vector<std::vector<long>> perms;
  std::vector<long> p{0, 1, 2, 3};
  do {
    if (count_inversions(p) % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<long>, long> index;
  // identity first
  std::stable_sort(perms.begin(), perms.end(),
                   [](const std::vector<long>& a, const std::vector<long>& b) {
                     long ia = count_inversions(a), ib = count_inversions(b);
                     if (ia != ib) return ia < ib;
                     return a < b;
                   });
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  long sz = 12;
  std::vector<std::vector<long>> t(sz, std::vector<long>(sz));
  std::vector<std::string> labels(sz);
  for (long a = 0; a < sz; ++a) {
    labels[a] = one_line(perms[a]);
    for (long b = 0; b < sz; ++b) {
      std::vector<long> c(4);
      for (long i = 0; i < 4; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = index[c];
    }
  }
  return FiniteMonoid::from_table(std::move(t), std::move(labels));
}

}  // namespace

GroupSpec cyclic_spec(long m) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Cyclic;
  s.parameters = {m};
  return s;
}

GroupSpec abelian_spec(std::vector<long> factors) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Abelian;
  s.parameters = std::move(factors);
  return s;
}

GroupSpec symmetric_spec(long n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Symmetric;
  s.parameters = {n};
  return s;
}

namespace {
GroupSpec table_spec(const std::string& name, const FiniteMonoid& m) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Table;
  s.table_name = name;
  s.table = m.table;
  return s;
}
}  // namespace

GroupSpec dihedral_spec(long n) {
  return table_spec("D" + std::to_string(n), dihedral_group(n));
}

GroupSpec quaternion_spec() { return table_spec("Q8", quaternion_group()); }

GroupSpec alternating4_spec() { return table_spec("A4", alternating4_group()); }

FiniteMonoid build_group(const GroupSpec& spec) {
  FiniteMonoid g;
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      if (spec.parameters.size() != 1 || spec.parameters[0] < 1)
        throw Error("cyclic spec needs one positive parameter");
      g = cyclic_group(spec.parameters[0]);
      break;
    }
    case GroupSpec::Kind::Abelian: {
      if (spec.parameters.empty())
        throw Error("abelian spec needs at least one factor");
      g = cyclic_group(spec.parameters[0]);
      for (size_t i = 1; i < spec.parameters.size(); ++i)
        g = direct_product(g, cyclic_group(spec.parameters[i]));
      break;
    }
    case GroupSpec::Kind::Symmetric: {
      if (spec.parameters.size() != 1)
        throw Error("symmetric spec needs one parameter");
      g = symmetric_group(spec.parameters[0]);
      break;
    }
    case GroupSpec::Kind::DirectProduct: {
      if (spec.factors.empty()) throw Error("empty direct product");
      g = build_group(spec.factors[0]);
      for (size_t i = 1; i < spec.factors.size(); ++i)
        g = direct_product(g, build_group(spec.factors[i]));
      break;
    }
    case GroupSpec::Kind::Table: {
      g = FiniteMonoid::from_table(spec.table);
      break;
    }
  }
  if (g.size > kGroupSizeCap) throw Error("group size cap exceeded");
  if (!g.is_group()) throw Error("spec does not define a group");
  return g;
}

InverseCheck is_inverse(const FiniteMonoid& m) {
  const auto& t = m.table;
  std::vector<long> inv(m.size, -1);
  for (long a = 0; a < m.size; ++a) {
    std::vector<long> candidates;
    bool regular = false;
    for (long b = 0; b < m.size; ++b) {
      if (t[t[a][b]][a] == a) {
        regular = true;
        if (t[t[b][a]][b] == b) candidates.push_back(b);
      }
    }
    if (!regular || candidates.empty())
      return {Verdict::fail({"no-generalized-inverse", {a}, m.labels[a], ""},
                            "element has no generalized inverse"),
              {}};
    if (candidates.size() > 1)
      return {Verdict::fail({"non-unique-inverse",
                             {a, candidates[0], candidates[1]},
                             m.labels[candidates[0]], m.labels[candidates[1]]},
                            "element has two distinct inverses"),
              {}};
    inv[a] = candidates[0];
  }
  for (long a = 0; a < m.size; ++a)
    if (t[a][a] == a)
      for (long b = 0; b < m.size; ++b)
        if (t[b][b] == b && t[a][b] != t[b][a])
          return {Verdict::fail({"idempotents-noncommuting", {a, b},
                                 m.labels[a], m.labels[b]},
                                "idempotents do not commute"),
                  {}};
  return {Verdict::pass(), inv};
}

InverseSemigroup group_as_inverse(const FiniteMonoid& g) {
  auto check = is_inverse(g);
  if (!check.verdict.holds()) throw Error("not an inverse semigroup");
  return InverseSemigroup::from(g, check.inv);
}

InverseSemigroup symmetric_inverse_semigroup(long n) {
  if (n < 1 || n > 4) throw Error("symmetric inverse semigroup needs n in 1..4");
  // a partial bijection: image[i] in {-1 (undefined), 0..n-1}, injective
  std::vector<std::vector<long>> maps;
  std::vector<long> cur(n, -1);
  std::function<void(long, long)> gen = [&](long pos, long used_mask) {
    if (pos == n) {
      maps.push_back(cur);
      return;
    }
    cur[pos] = -1;
    gen(pos + 1, used_mask);
    for (long v = 0; v < n; ++v) {
      if (used_mask & (1L << v)) continue;
      cur[pos] = v;
      gen(pos + 1, used_mask | (1L << v));
      cur[pos] = -1;
    }
  };
  gen(0, 0);
  // deterministic order: by domain size, then lexicographically
  std::stable_sort(maps.begin(), maps.end(),
                   [](const std::vector<long>& a, const std::vector<long>& b) {
                     long da = std::count_if(a.begin(), a.end(),
                                             [](long x) { return x >= 0; });
                     long db = std::count_if(b.begin(), b.end(),
                                             [](long x) { return x >= 0; });
                     if (da != db) return da < db;
                     return a < b;
                   });
  std::map<std::vector<long>, long> index;
  for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = i;
  long sz = static_cast<long>(maps.size());
  std::vector<std::vector<long>> t(sz, std::vector<long>(sz));
  std::vector<std::string> labels(sz);
  std::vector<long> inv(sz);
  for (long a = 0; a < sz; ++a) {
    std::ostringstream lab;
    lab << "[";
    bool first = true;
    for (long i = 0; i < n; ++i)
      if (maps[a][i] >= 0) {
        if (!first) lab << ",";
        first = false;
        lab << (i + 1) << ">" << (maps[a][i] + 1);
      }
    lab << "]";
    labels[a] = lab.str();
    std::vector<long> backwards(n, -1);
    for (long i = 0; i < n; ++i)
      if (maps[a][i] >= 0) backwards[maps[a][i]] = i;
    inv[a] = index[backwards];
    for (long b = 0; b < sz; ++b) {
      // left-to-right: x -> a(x), then b
      std::vector<long> c(n, -1);
      for (long i = 0; i < n; ++i)
        if (maps[a][i] >= 0 && maps[b][maps[a][i]] >= 0)
          c[i] = maps[b][maps[a][i]];
      t[a][b] = index[c];
    }
  }
  FiniteMonoid base = FiniteMonoid::from_table(std::move(t), std::move(labels));
  return InverseSemigroup::from(std::move(base), std::move(inv));
}

InverseSemigroup matrix_unit_semigroup(long n) {
  if (n < 1) throw Error("matrix unit semigroup needs n >= 1");
  // indices: e_ij -> i * n + j, zero -> n^2
  long sz = n * n + 1;
  long zero = n * n;
  std::vector<std::vector<long>> t(sz, std::vector<long>(sz, zero));
  std::vector<std::string> labels(sz);
  std::vector<long> inv(sz);
  labels[zero] = "0";
  inv[zero] = zero;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long a = i * n + j;
      labels[a] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
      inv[a] = j * n + i;
      for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l)
          if (j == k) t[a][k * n + l] = i * n + l;
    }
  FiniteMonoid base = FiniteMonoid::from_table(std::move(t), std::move(labels));
  return InverseSemigroup::from(std::move(base), std::move(inv));
}

std::vector<std::vector<long>> subgroups(const FiniteMonoid& g) {
  if (!g.is_group()) throw Error("subgroups: not a group");
  long e = *g.unit;
  auto closure = [&](std::set<long> seed) {
    seed.insert(e);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<long> elems(seed.begin(), seed.end());
      for (long a : elems)
        for (long b : elems) {
          if (seed.insert(g.table[a][b]).second) grew = true;
        }
    }
    return std::vector<long>(seed.begin(), seed.end());
  };
  std::set<std::vector<long>> found;
  found.insert(closure({}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long>> current(found.begin(), found.end());
    for (const auto& h : current) {
      for (long x = 0; x < g.size; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::set<long> seed(h.begin(), h.end());
        seed.insert(x);
        auto bigger = closure(std::move(seed));
        if (found.insert(bigger).second) grew = true;
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<long>> automorphism_generators(const FiniteMonoid& g) {
  if (!g.is_group()) throw Error("automorphism_generators: not a group");
  long n = g.size;
  long e = *g.unit;

  // small generating set of the group itself
  std::vector<long> gens;
  {
    std::set<long> generated{e};
    auto close = [&](std::set<long>& s) {
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<long> elems(s.begin(), s.end());
        for (long a : elems)
          for (long b : elems)
            if (s.insert(g.table[a][b]).second) grew = true;
      }
    };
    for (long x = 0; x < n && static_cast<long>(generated.size()) < n; ++x) {
      if (generated.count(x)) continue;
      gens.push_back(x);
      generated.insert(x);
      close(generated);
    }
  }

  // extend a choice of generator images to a full map by products
  auto extend = [&](const std::vector<long>& images) -> std::vector<long> {
    std::vector<long> phi(n, -1);
    phi[e] = e;
    bool grew = true;
    for (size_t i = 0; i < gens.size(); ++i) phi[gens[i]] = images[i];
    while (grew) {
      grew = false;
      for (long a = 0; a < n; ++a) {
        if (phi[a] < 0) continue;
        for (long b = 0; b < n; ++b) {
          if (phi[b] < 0) continue;
          long ab = g.table[a][b];
          long im = g.table[phi[a]][phi[b]];
          if (phi[ab] < 0) {
            phi[ab] = im;
            grew = true;
          } else if (phi[ab] != im) {
            return {};
          }
        }
      }
    }
    for (long a = 0; a < n; ++a)
      if (phi[a] < 0) return {};
    std::vector<bool> seen(n, false);
    for (long a = 0; a < n; ++a) {
      if (seen[phi[a]]) return {};
      seen[phi[a]] = true;
    }
    return phi;
  };

  // all automorphisms by backtracking over generator images
  std::vector<std::vector<long>> all;
  std::vector<long> images(gens.size());
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == gens.size()) {
      auto phi = extend(images);
      if (!phi.empty()) all.push_back(phi);
      return;
    }
    for (long im = 0; im < n; ++im) {
      images[pos] = im;
      rec(pos + 1);
    }
  };
  rec(0);

  // greedy generating subset of Aut(G); BFS closure over the generators
  std::vector<long> identity(n);
  for (long i = 0; i < n; ++i) identity[i] = i;
  std::set<std::vector<long>> generated{identity};
  std::vector<std::vector<long>> out;
  auto close_aut = [&]() {
    std::vector<std::vector<long>> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<std::vector<long>> next;
      for (const auto& a : frontier)
        for (const auto& b : out) {
          std::vector<long> c(n);
          for (long i = 0; i < n; ++i) c[i] = b[a[i]];
          if (generated.insert(c).second) next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
  };
  for (const auto& phi : all) {
    if (generated.count(phi)) continue;
    out.push_back(phi);
    close_aut();
    if (generated.size() == all.size()) break;
  }
  return out;
}

std::vector<CatalogMember> group_catalog(long max_order) {
  std::vector<CatalogMember> out;

  // abelian groups in invariant-factor form: m_1 | m_2 | ... | m_r
  std::function<void(long, long, std::vector<long>&)> rec =
      [&](long remaining, long min_factor, std::vector<long>& acc) {
        if (remaining == 1) {
          if (acc.empty()) return;
          std::vector<long> factors(acc.rbegin(), acc.rend());
          CatalogMember m;
          GroupSpec spec = factors.size() == 1 ? cyclic_spec(factors[0])
                                               : abelian_spec(factors);
          std::string name = "Z" + std::to_string(factors[0]);
          for (size_t i = 1; i < factors.size(); ++i)
            name += "xZ" + std::to_string(factors[i]);
          m.name = name;
          m.spec = spec;
          m.semigroup = group_as_inverse(build_group(spec));
          out.push_back(std::move(m));
          return;
        }
        for (long d = min_factor; d <= remaining; ++d) {
          // invariant chain built largest-first: d must divide the previous
          if (remaining % d != 0) continue;
          if (!acc.empty() && acc.back() % d != 0) continue;
          acc.push_back(d);
          rec(remaining / d, 2, acc);
          acc.pop_back();
        }
      };
  for (long n = 1; n <= max_order; ++n) {
    if (n == 1) {
      CatalogMember m;
      m.name = "Z1";
      m.spec = cyclic_spec(1);
      m.semigroup = group_as_inverse(build_group(*m.spec));
      out.push_back(std::move(m));
      continue;
    }
    std::vector<long> acc;
    rec(n, 2, acc);
  }

  auto add_table = [&](const std::string& name, const GroupSpec& spec) {
    FiniteMonoid g = build_group(spec);
    if (g.size > max_order) return;
    CatalogMember m;
    m.name = name;
    m.spec = spec;
    m.semigroup = group_as_inverse(g);
    out.push_back(std::move(m));
  };
  add_table("S3", symmetric_spec(3));
  add_table("D4", dihedral_spec(4));
  add_table("Q8", quaternion_spec());
  add_table("D5", dihedral_spec(5));
  add_table("A4", alternating4_spec());
  add_table("D6", dihedral_spec(6));
  add_table("D7", dihedral_spec(7));
  add_table("S4", symmetric_spec(4));
  add_table("D8", dihedral_spec(8));

  std::stable_sort(out.begin(), out.end(), member_less);
  return out;
}

std::vector<CatalogMember> semigroup_catalog() {
  std::vector<CatalogMember> out;
  for (long n = 1; n <= 3; ++n) {
    CatalogMember m;
    m.name = "I" + std::to_string(n);
    m.is_group = false;
    m.semigroup = symmetric_inverse_semigroup(n);
    out.push_back(std::move(m));
  }
  for (long n = 1; n <= 3; ++n) {
    CatalogMember m;
    m.name = "I1_" + std::to_string(n);
    m.is_group = false;
    m.semigroup = matrix_unit_semigroup(n);
    out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), member_less);
  return out;
}

std::vector<CatalogMember> full_catalog(long max_group_order) {
  auto out = group_catalog(max_group_order);
  auto sg = semigroup_catalog();
  out.insert(out.end(), sg.begin(), sg.end());
  std::stable_sort(out.begin(), out.end(), member_less);
  return out;
}

}  // namespace posalg
