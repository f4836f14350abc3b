#include "posalg/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <atomic>
#include <thread>

namespace posalg {

AmbientContext make_ambient(const CatalogMember& m) {
  AmbientContext ctx;
  ctx.member = m;
  SemigroupBialgebra b = semigroup_bialgebra(m.semigroup);
  ctx.bialgebra = std::make_shared<const TwoAlgebra>(std::move(b.algebra));
  ctx.weakened = b.weakened;
  return ctx;
}

std::vector<Partition> all_set_partitions(long n, long max_blocks) {
  std::vector<Partition> out;
  std::vector<long> rgs(n, 0);
  std::function<void(long, long)> rec = [&](long pos, long used) {
    if (pos == n) {
      out.push_back(Partition::from_assignment(rgs));
      return;
    }
    long cap = std::min(used + 1, max_blocks);
    for (long b = 0; b < cap; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
  return out;
}

namespace {

std::string rgs_of(const Partition& p) {
  std::string s;
  for (long b : p.block_of) s += static_cast<char>('a' + b);
  return s;
}

// Block-by-block enumeration of partitions with exactly `blocks` blocks.
// When a block is emitted it is complete, so products of completed blocks
// can be screened: counts must be constant on every completed block.
void stable_exact_blocks(const FiniteMonoid& m, const std::vector<long>& inv,
                         long blocks, std::vector<Partition>& out) {
  const long n = m.size;
  std::vector<std::vector<long>> chosen;
  std::vector<long> block_of(n, -1);

  std::function<bool()> prune_ok = [&]() -> bool {
    // products of completed blocks must have counts constant on every
    // completed block; inverse images of completed blocks must not split
    // completed blocks partially
    std::vector<long> counts(n);
    for (size_t i = 0; i < chosen.size(); ++i) {
      for (size_t j = 0; j < chosen.size(); ++j) {
        std::fill(counts.begin(), counts.end(), 0);
        for (long x : chosen[i])
          for (long y : chosen[j]) ++counts[m.table[x][y]];
        for (const auto& block : chosen) {
          long first = counts[block[0]];
          for (long z : block)
            if (counts[z] != first) return false;
        }
      }
      // sharp closure on completed blocks
      long target = block_of[inv[chosen[i][0]]];
      for (long x : chosen[i]) {
        long t = block_of[inv[x]];
        if (t != target) return false;
      }
    }
    return true;
  };

  std::function<void()> rec = [&]() {
    long first_free = -1;
    for (long x = 0; x < n; ++x)
      if (block_of[x] == -1) {
        first_free = x;
        break;
      }
    if (first_free == -1) {
      if (static_cast<long>(chosen.size()) == blocks) {
        Partition p = Partition::from_blocks(n, chosen);
        if (is_stable_partition_counts(m, inv, p)) out.push_back(p);
      }
      return;
    }
    if (static_cast<long>(chosen.size()) == blocks) return;
    // choose the block containing first_free from the remaining elements
    std::vector<long> rest;
    for (long x = first_free + 1; x < n; ++x)
      if (block_of[x] == -1) rest.push_back(x);
    long r = static_cast<long>(rest.size());
    long remaining_blocks = blocks - static_cast<long>(chosen.size()) - 1;
    for (long mask = 0; mask < (1L << r); ++mask) {
      if (r - __builtin_popcountl(mask) < remaining_blocks) continue;
      std::vector<long> block{first_free};
      for (long t = 0; t < r; ++t)
        if (mask & (1L << t)) block.push_back(rest[t]);
      long id = static_cast<long>(chosen.size());
      for (long x : block) block_of[x] = id;
      chosen.push_back(block);
      if (prune_ok()) rec();
      chosen.pop_back();
      for (long x : block) block_of[x] = -1;
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return rgs_of(a) < rgs_of(b);
  });
}

// Two-block partitions by subsets, feasible up to |M| <= 16.
void stable_two_blocks(const FiniteMonoid& m, const std::vector<long>& inv,
                       std::vector<Partition>& out) {
  const long n = m.size;
  if (n < 2) return;
  // block containing element 0 is the complement of a nonempty subset of
  // the rest
  for (long mask = 1; mask < (1L << (n - 1)); ++mask) {
    std::vector<long> assignment(n, 0);
    for (long t = 0; t < n - 1; ++t)
      if (mask & (1L << t)) assignment[t + 1] = 1;
    Partition p = Partition::from_assignment(assignment);
    if (is_stable_partition_counts(m, inv, p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return rgs_of(a) < rgs_of(b);
  });
}

std::vector<Partition> structured_partitions(const InverseSemigroup& s,
                                             long blocks) {
  std::vector<Partition> out;
  if (!s.base.is_group()) return out;
  std::set<std::string> seen;
  auto add = [&](const Partition& p) {
    if (p.block_count() != blocks) return;
    if (!is_stable_partition_counts(s.base, s.inv, p)) return;
    if (seen.insert(rgs_of(p)).second) out.push_back(p);
  };
  for (const auto& h : subgroups(s.base)) add(double_coset_partition(s.base, h));
  auto gens = automorphism_generators(s.base);
  long k = static_cast<long>(gens.size());
  if (k <= 12) {
    for (long mask = 0; mask < (1L << k); ++mask) {
      std::vector<std::vector<long>> subset;
      for (long t = 0; t < k; ++t)
        if (mask & (1L << t)) subset.push_back(gens[t]);
      add(automorphism_orbit_partition(s.base, subset));
    }
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return rgs_of(a) < rgs_of(b);
  });
  return out;
}

std::vector<Partition> stable_partitions_exact(const InverseSemigroup& s,
                                               long blocks,
                                               bool* exhaustive = nullptr) {
  std::vector<Partition> out;
  if (exhaustive) *exhaustive = true;
  const long n = s.size();
  if (blocks == n) {
    out.push_back(Partition::singletons(n));
    return out;
  }
  if (blocks < 1 || blocks > n) return out;
  if (blocks == 2 && n <= 18) {
    stable_two_blocks(s.base, s.inv, out);
  } else if (n <= 12) {
    stable_exact_blocks(s.base, s.inv, blocks, out);
  } else {
    if (exhaustive) *exhaustive = false;
    out = structured_partitions(s, blocks);
  }
  return out;
}

}  // namespace

std::vector<StablePartitionCert> enumerate_stable_partitions(
    const AmbientContext& ambient, long max_blocks) {
  const long n = ambient.member.semigroup.size();
  std::vector<Partition> parts =
      stable_partitions_exact(ambient.member.semigroup, max_blocks);
  if (max_blocks != n) parts.push_back(Partition::singletons(n));

  std::vector<StablePartitionCert> out;
  for (const auto& p : parts) {
    StabilityResult r = is_stable_partition(ambient.bialgebra, p);
    if (!r.verdict.holds())
      throw Error("enumerator produced an unstable partition");  // cross-check
    out.push_back(std::move(r.cert));
  }
  return out;
}

std::optional<std::vector<long>> find_isomorphism(const TwoAlgebra& from,
                                                  const TwoAlgebra& to) {
  if (from.dim != to.dim) return std::nullopt;
  const long n = from.dim;
  if (n > 6) throw Error("find_isomorphism is bounded at dimension 6");

  auto unit_index = [](const TwoAlgebra& a) -> long {
    long at = -1;
    for (long i = 0; i < a.dim; ++i) {
      if (is_zero(a.unit[i])) continue;
      if (a.unit[i] != Rational(1) || at != -1) return -1;
      at = i;
    }
    return at;
  };
  long uf = unit_index(from), ut = unit_index(to);
  if (uf < 0 || ut < 0) return std::nullopt;

  // canonical quasi-character screen for bicommutative pairs
  if (from.commutative() && from.cocommutative() && to.commutative() &&
      to.cocommutative() && from.comult_diagonal() && to.comult_diagonal()) {
    try {
      auto qf = canonical_quasicharacter(quasicharacter_matrix(from));
      auto qt = canonical_quasicharacter(quasicharacter_matrix(to));
      if (!(qf.matrix == qt.matrix)) return std::nullopt;
    } catch (const Error&) {
      // fall through to backtracking
    }
  }

  std::vector<long> rest_from, rest_to;
  for (long i = 0; i < n; ++i)
    if (i != uf) rest_from.push_back(i);
  for (long i = 0; i < n; ++i)
    if (i != ut) rest_to.push_back(i);
  std::sort(rest_to.begin(), rest_to.end());
  do {
    std::vector<long> perm(n, -1);
    perm[uf] = ut;
    for (size_t t = 0; t < rest_from.size(); ++t)
      perm[rest_from[t]] = rest_to[t];
    if (isomorphic_under(from, to, perm)) return perm;
  } while (std::next_permutation(rest_to.begin(), rest_to.end()));
  return std::nullopt;
}

namespace {

struct MemberResult {
  std::vector<DilationWitness> witnesses;
  bool exhaustive = true;
};

MemberResult search_member(const CatalogMember& member,
                           const TwoAlgebra& target) {
  MemberResult result;
  std::vector<DilationWitness>& out = result.witnesses;
  AmbientContext ambient = make_ambient(member);
  std::vector<Partition> parts = stable_partitions_exact(
      member.semigroup, target.dim, &result.exhaustive);
  for (const auto& p : parts) {
    StabilityResult stable = is_stable_partition(ambient.bialgebra, p);
    if (!stable.verdict.holds()) continue;
    TwoAlgebra induced;
    try {
      induced = induced_two_algebra(stable.cert);
    } catch (const Error&) {
      continue;
    }
    auto iso = find_isomorphism(induced, target);
    if (!iso) continue;
    // independent end-to-end re-verification of the witness
    RatMat block_sums;
    for (long b = 0; b < p.block_count(); ++b) {
      RatVec v(ambient.bialgebra->dim, Rational(0));
      for (long x : p.blocks[b]) v[x] = 1;
      block_sums.push_back(std::move(v));
    }
    if (!is_strict_subobject(*ambient.bialgebra, block_sums).holds()) continue;
    if (!isomorphic_under(induced, target, *iso)) continue;

    DilationWitness w;
    w.ambient_name = member.name;
    w.ambient_spec = member.spec ? member.spec->to_string() : member.name;
    w.ambient_is_group = member.is_group;
    w.partition = p;
    for (long b = 0; b < p.block_count(); ++b)
      w.normalization.push_back(Rational(static_cast<long>(p.blocks[b].size())));
    w.iso = *iso;
    out.push_back(std::move(w));
  }
  return result;
}

}  // namespace

StrictSearchResult strict_dilation_search(const TwoAlgebra& target,
                                          long max_order, long jobs) {
  Verdict ok = check_positive_2_algebra(target);
  if (ok.fails())
    throw Error("strict dilation target is not a positive 2-algebra");
  if (target.dim > 6)
    throw Error("strict dilation search is bounded at target dimension 6");

  std::vector<CatalogMember> members;
  for (auto& m : full_catalog(max_order))
    if (m.semigroup.size() <= max_order) members.push_back(std::move(m));

  std::vector<MemberResult> results(members.size());
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  long nthreads = jobs > 0 ? jobs : std::max<long>(1, hw);
  nthreads = std::min<long>(nthreads, static_cast<long>(members.size()));
  if (nthreads <= 1) {
    for (size_t i = 0; i < members.size(); ++i)
      results[i] = search_member(members[i], target);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (long t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= members.size()) break;
          results[i] = search_member(members[i], target);
        }
      });
    for (auto& th : pool) th.join();
  }

  StrictSearchResult out;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].exhaustive)
      out.structured_only.push_back(members[i].name);
    for (auto& w : results[i].witnesses) out.witnesses.push_back(std::move(w));
  }
  return out;
}

namespace {

struct AbelianCharacters {
  long exponent = 1;
  // chi[t][g] over cyclotomics of order `exponent`
  CycMat chi;
  std::vector<std::string> labels;
};

AbelianCharacters abelian_characters(const GroupSpec& spec) {
  std::vector<long> factors;
  if (spec.kind == GroupSpec::Kind::Cyclic)
    factors = {spec.parameters[0]};
  else if (spec.kind == GroupSpec::Kind::Abelian)
    factors = spec.parameters;
  else
    throw Error("abelian_characters needs a cyclic or abelian spec");

  long order = 1, exponent = 1;
  for (long f : factors) {
    order *= f;
    exponent = std::lcm(exponent, f);
  }
  // element index: mixed radix, most significant first (matches the
  // direct-product construction)
  auto digits = [&](long index) {
    std::vector<long> d(factors.size());
    for (long i = static_cast<long>(factors.size()) - 1; i >= 0; --i) {
      d[i] = index % factors[i];
      index /= factors[i];
    }
    return d;
  };
  AbelianCharacters out;
  out.exponent = exponent;
  out.chi.assign(order, CycVec(order));
  for (long t = 0; t < order; ++t) {
    auto td = digits(t);
    std::string label = "chi(";
    for (size_t i = 0; i < td.size(); ++i)
      label += (i ? "," : "") + std::to_string(td[i]);
    label += ")";
    out.labels.push_back(label);
    for (long g = 0; g < order; ++g) {
      auto gd = digits(g);
      long e = 0;
      for (size_t i = 0; i < factors.size(); ++i)
        e = (e + td[i] * gd[i] * (exponent / factors[i])) % exponent;
      out.chi[t][g] = root_of_unity(exponent, e);
    }
  }
  return out;
}

}  // namespace

std::optional<CoarseGrainWitness> coarse_grain_search(const TwoAlgebra& target,
                                                      long max_order) {
  if (max_order > 16)
    throw Error("coarse_grain_search supports bounds up to order 16");
  QuasiCharacterMatrix q = quasicharacter_matrix(target);
  const long n = q.dim();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (!q.entries[i][j].is_rational())
        throw Error("coarse_grain_search needs a rational quasi-character matrix");

  for (const auto& member : group_catalog(max_order)) {
    if (!member.spec) continue;
    if (member.spec->kind != GroupSpec::Kind::Cyclic &&
        member.spec->kind != GroupSpec::Kind::Abelian)
      continue;
    const long order = member.semigroup.size();
    if (order < n) continue;
    if (n > 2 && order > 12) continue;  // partition stream too large
    AbelianCharacters chars = abelian_characters(*member.spec);

    // candidate column partitions into exactly n blocks, unit block first
    std::vector<Partition> parts = all_set_partitions(order, n);
    for (const auto& p : parts) {
      if (p.block_count() != n) continue;
      // ordered selections of distinct nontrivial characters for rows 2..n
      std::vector<long> selection(n, -1);
      selection[0] = 0;  // trivial character
      std::function<bool(long)> choose = [&](long row) -> bool {
        if (row == n) return true;
        for (long t = 1; t < order; ++t) {
          bool used = false;
          for (long r = 0; r < row; ++r)
            if (selection[r] == t) used = true;
          if (used) continue;
          // block averages of chi_t must reproduce row `row` of Q
          bool match = true;
          for (long b = 0; b < n && match; ++b) {
            Cyclotomic sum;
            for (long g : p.blocks[b]) sum += chars.chi[t][g];
            Cyclotomic avg =
                sum * Cyclotomic(make_rational(
                          1, static_cast<long>(p.blocks[b].size())));
            match = avg == q.entries[row][b];
          }
          if (!match) continue;
          selection[row] = t;
          if (choose(row + 1)) return true;
          selection[row] = -1;
        }
        return false;
      };
      if (!choose(1)) continue;

      // assemble the witness: T sends target grouplike j to the normalized
      // block sum of C_j; coaction rho(x_g) = T(b_{block(g)}) (x) x_g
      AmbientContext ambient = make_ambient(member);
      const long big = ambient.bialgebra->dim;
      // target column j of Q corresponds to target basis...: columns of Q
      // are ordered unit-first over the target basis
      std::vector<long> target_basis_of_column(n);
      {
        long unit_at = -1;
        for (long i = 0; i < target.dim; ++i)
          if (target.unit[i] == Rational(1)) unit_at = i;
        std::vector<long> cols{unit_at};
        for (long i = 0; i < target.dim; ++i)
          if (i != unit_at) cols.push_back(i);
        for (long j = 0; j < n; ++j) target_basis_of_column[j] = cols[j];
      }
      RatMat t_embed(big, RatVec(target.dim, Rational(0)));
      for (long b = 0; b < n; ++b) {
        Rational inv_size =
            make_rational(1, static_cast<long>(p.blocks[b].size()));
        for (long g : p.blocks[b])
          t_embed[g][target_basis_of_column[b]] = inv_size;
      }
      StructureTensor rho(big);
      for (long g = 0; g < big; ++g) {
        long b = p.block_of[g];
        Rational inv_size =
            make_rational(1, static_cast<long>(p.blocks[b].size()));
        for (long u : p.blocks[b]) rho.set(g, u, g, inv_size);
      }
      try {
        if (!verify_nonstrict_witness(*ambient.bialgebra, target, t_embed, rho)
                 .holds())
          continue;
      } catch (const Error&) {
        continue;  // not an embedding; keep searching
      }
      CoarseGrainWitness w;
      w.group_name = member.name;
      w.group_spec = member.spec->to_string();
      w.partition = p;
      for (long r = 0; r < n; ++r) w.characters.push_back(chars.labels[selection[r]]);
      w.matrix = q;
      w.embedding = std::move(t_embed);
      w.coaction = std::move(rho);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<CoarseGrainWitness> coarse_grain_search_lambda(
    const Rational& lambda, long max_order) {
  return coarse_grain_search(a_lambda(lambda), max_order);
}

CensusReport lambda_census(long max_order, long jobs) {
  CensusReport report;
  report.max_order = max_order;

  std::vector<CatalogMember> members;
  for (auto& m : full_catalog(max_order))
    if (m.semigroup.size() <= max_order) members.push_back(std::move(m));

  // per-member harvest of two-block stable partitions, parallel over
  // members with a deterministic merge in catalog order
  using Harvest = std::vector<std::pair<Rational, DilationWitness>>;
  std::vector<Harvest> harvests(members.size());
  auto harvest_member = [&](size_t idx) {
    const CatalogMember& member = members[idx];
    AmbientContext ambient = make_ambient(member);
    for (const auto& p : stable_partitions_exact(member.semigroup, 2)) {
      StabilityResult stable = is_stable_partition(ambient.bialgebra, p);
      if (!stable.verdict.holds()) continue;
      TwoAlgebra induced;
      try {
        induced = induced_two_algebra(stable.cert);
      } catch (const Error&) {
        continue;
      }
      TwoDimClass cls = classify_2dim(induced);
      if (cls.kind != TwoDimClass::Kind::Lambda) continue;

      TwoAlgebra model = a_lambda(cls.lambda);
      auto iso = find_isomorphism(induced, model);
      if (!iso) continue;
      RatMat block_sums;
      for (long b = 0; b < p.block_count(); ++b) {
        RatVec v(ambient.bialgebra->dim, Rational(0));
        for (long x : p.blocks[b]) v[x] = 1;
        block_sums.push_back(std::move(v));
      }
      if (!is_strict_subobject(*ambient.bialgebra, block_sums).holds())
        continue;

      DilationWitness w;
      w.ambient_name = member.name;
      w.ambient_spec = member.spec ? member.spec->to_string() : member.name;
      w.ambient_is_group = member.is_group;
      w.partition = p;
      for (long b = 0; b < p.block_count(); ++b)
        w.normalization.push_back(
            Rational(static_cast<long>(p.blocks[b].size())));
      w.iso = *iso;
      harvests[idx].emplace_back(cls.lambda, std::move(w));
    }
  };
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  long nthreads = jobs > 0 ? jobs : std::max<long>(1, hw);
  nthreads = std::min<long>(nthreads, static_cast<long>(members.size()));
  if (nthreads <= 1) {
    for (size_t i = 0; i < members.size(); ++i) harvest_member(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (long t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= members.size()) break;
          harvest_member(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::map<Rational, CensusRow> rows;
  for (size_t idx = 0; idx < members.size(); ++idx) {
    for (auto& [lambda, w] : harvests[idx]) {
      auto it = rows.find(lambda);
      if (it == rows.end()) {
        CensusRow row;
        row.lambda = lambda;
        if (sgn(lambda) > 0) {
          row.predicate_applicable = true;
          row.prediction = strict_dilation_predicate(lambda);
        }
        it = rows.emplace(lambda, std::move(row)).first;
      }
      if (members[idx].is_group)
        it->second.strict_group.push_back(std::move(w));
      else
        it->second.strict_semigroup.push_back(std::move(w));
    }
  }

  for (auto& [lambda, row] : rows) {
    row.nonstrict = coarse_grain_search_lambda(lambda, max_order);
    report.rows.push_back(row);
  }

  // discrepancy section
  for (const auto& row : report.rows) {
    std::string ls = to_string(row.lambda);
    if (!row.strict_group.empty() && row.predicate_applicable &&
        !row.prediction.strict_predicted)
      report.discrepancies.push_back(
          "lambda = " + ls +
          ": strict group dilation found but the predicate rules it out");
    if (!row.strict_group.empty() && !row.nonstrict)
      report.discrepancies.push_back(
          "lambda = " + ls +
          ": strict group witness exists but no coarse-grain witness was "
          "found within the same bound");
    if (row.lambda == make_rational(1, 3) && !row.strict_group.empty())
      report.discrepancies.push_back(
          "lambda = 1/3: a strict dilation witness exists (ambient " +
          row.strict_group[0].ambient_name +
          ", partition " + row.strict_group[0].partition.to_string() +
          ") and the predicate is satisfied (k=1, s=3); this contradicts "
          "the documented claim that A_{1/3} admits a nonstrict but "
          "not a strict dilation");
  }
  return report;
}

}  // namespace posalg
