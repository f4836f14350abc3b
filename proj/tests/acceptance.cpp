// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, every tolerance pinned to zero.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include "builders.hpp"
#include "posalg/checks.hpp"
#include "posalg/gl.hpp"
#include "posalg/hecke.hpp"
#include "posalg/search.hpp"
#include "posalg/serialize.hpp"

using namespace posalg;

namespace {

void report(int criterion, const char* what, bool pass) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what);
  std::fflush(stdout);
  CHECK(pass);
}

}  // namespace

TEST_CASE("criterion 1: positivity holds across the involutive catalog") {
  bool pass = true;
  for (const auto& member : full_catalog(16)) {
    TwoAlgebra a = semigroup_bialgebra(member.semigroup).algebra;
    if (!validate_2_algebra(a).holds()) pass = false;
    if (!check_involutive(a).holds()) pass = false;
    PositivityVerdict p = check_positivity(a);
    if (!p.both_hold()) {
      pass = false;
      std::printf("  positivity not decided for %s\n", member.name.c_str());
    }
  }
  report(1, "check_positivity holds/holds on every catalog bialgebra", pass);
}

TEST_CASE("criterion 2: inverse semigroup bialgebras") {
  bool pass = true;
  for (const auto& member : semigroup_catalog()) {
    SemigroupBialgebra b = semigroup_bialgebra(member.semigroup);
    if (!is_bialgebra(b.algebra).holds()) pass = false;
    if (!check_involutive(b.algebra).holds()) pass = false;
    if (!is_semisimple(b.algebra, Side::Algebra).holds()) pass = false;
    if (!is_semisimple(b.algebra, Side::Coalgebra).holds()) pass = false;
    if (!b.algebra.cocommutative()) pass = false;
    RecoveredSemigroup r = recover_semigroup(b.algebra);
    if (!r.verdict.holds() ||
        r.monoid.table != member.semigroup.base.table ||
        r.monoid.labels != member.semigroup.base.labels ||
        r.inv != member.semigroup.inv)
      pass = false;
  }
  if (wedderburn_dims(semigroup_bialgebra(matrix_unit_semigroup(2)).algebra) !=
      std::vector<long>{4, 1})
    pass = false;
  if (wedderburn_dims(semigroup_bialgebra(matrix_unit_semigroup(3)).algebra) !=
      std::vector<long>{9, 1})
    pass = false;
  report(2, "semigroup bialgebras verify and recover; block dims {4,1}/{9,1}",
         pass);
}

TEST_CASE("criterion 3: Hecke algebras across the q grid") {
  bool pass = true;
  const char* grid[] = {"1/2", "1", "2", "3", "5/2"};
  for (long n = 2; n <= 4; ++n) {
    for (const char* qs : grid) {
      Rational q = parse_rational(qs);
      TwoAlgebra a = hecke_two_algebra(build_hecke(n, q));
      if (!validate_2_algebra(a).holds()) pass = false;
      for (long g = 0; g < a.dim && pass; ++g)
        for (long h = 0; h < a.dim; ++h) {
          Rational sum(0);
          a.mult.for_slice(g, h, [&](long, const Rational& c) { sum += c; });
          if (sum != Rational(1)) pass = false;
        }
      bool holds_both = check_positivity(a).both_hold();
      if (holds_both != (q >= Rational(1))) pass = false;
    }
    if (!(hecke_two_algebra(build_hecke(n, Rational(1))) ==
          group_bialgebra(build_group(symmetric_spec(n)))))
      pass = false;
  }
  report(3, "H_n(q) valid, stochastic, positive iff q >= 1, H_n(1) = C[S_n]",
         pass);
}

TEST_CASE("criterion 4: Iwahori dilations at desk scale") {
  bool pass = true;
  for (auto [n, p] :
       std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}}) {
    IwahoriReport r = iwahori_check(n, p);
    if (!r.verdict.holds()) pass = false;
    if (n == 3 && r.identities_checked != 216) pass = false;
  }
  report(4, "iwahori_check holds at (2,2),(2,3),(2,5),(3,2) with 216 identities",
         pass);
}

TEST_CASE("criterion 5: strict census at order 8") {
  CensusReport census = lambda_census(8);
  bool pass = true;

  std::set<std::string> strict_group;
  for (const auto& row : census.rows)
    if (!row.strict_group.empty()) strict_group.insert(to_string(row.lambda));
  if (strict_group != std::set<std::string>{"1", "1/2", "1/3", "1/4", "1/5",
                                            "1/6", "1/7"})
    pass = false;

  for (const auto& row : census.rows) {
    if (row.strict_group.empty()) continue;
    if (!row.predicate_applicable || !row.prediction.strict_predicted)
      pass = false;
    // re-verify each witness end to end
    for (const auto& w : row.strict_group) {
      CatalogMember member;
      bool found = false;
      for (auto& m : full_catalog(8))
        if (m.name == w.ambient_name) {
          member = m;
          found = true;
        }
      if (!found) {
        pass = false;
        continue;
      }
      TwoAlgebra ambient = semigroup_bialgebra(member.semigroup).algebra;
      RatMat sums;
      for (const auto& block : w.partition.blocks) {
        RatVec v(ambient.dim, Rational(0));
        for (long x : block) v[x] = 1;
        sums.push_back(v);
      }
      if (!is_strict_subobject(ambient, sums).holds()) pass = false;
    }
  }

  bool third = false;
  for (const auto& d : census.discrepancies)
    if (d.find("lambda = 1/3") != std::string::npos &&
        d.find("nonstrict but not a strict") != std::string::npos)
      third = true;
  if (!third) pass = false;

  report(5, "strict census = {1/n}, witnesses re-verified, 1/3 discrepancy",
         pass);
}

TEST_CASE("criterion 6: nonstrict census and the 2/5 negative") {
  bool pass = true;
  for (const char* ls : {"1", "1/2", "1/3", "1/4"}) {
    Rational lambda = parse_rational(ls);
    auto w = coarse_grain_search_lambda(lambda, 8);
    if (!w) {
      pass = false;
      continue;
    }
    // certify explicitly with the verifier
    TwoAlgebra target = a_lambda(lambda);
    CatalogMember member;
    for (auto& m : full_catalog(8))
      if (m.name == w->group_name) member = m;
    TwoAlgebra ambient = semigroup_bialgebra(member.semigroup).algebra;
    if (!verify_nonstrict_witness(ambient, target, w->embedding, w->coaction)
             .holds())
      pass = false;
  }

  Rational two_fifths = make_rational(2, 5);
  if (strict_dilation_predicate(two_fifths).strict_predicted) pass = false;
  StrictSearchResult result = strict_dilation_search(a_lambda(two_fifths), 16);
  if (!result.witnesses.empty()) pass = false;
  if (!result.structured_only.empty()) pass = false;  // exhaustive at 16

  report(6, "coarse witnesses for 1, 1/2, 1/3, 1/4; A_{2/5} empty at 16", pass);
}

TEST_CASE("criterion 7: enumerator equals the brute-force oracle") {
  bool pass = true;
  for (const auto& member : full_catalog(6)) {
    if (member.semigroup.size() > 6) continue;
    long n = member.semigroup.size();
    AmbientContext ambient = make_ambient(member);
    std::set<std::string> brute;
    for (const auto& p : all_set_partitions(n, n))
      if (is_stable_partition(ambient.bialgebra, p).verdict.holds())
        brute.insert(p.to_string());
    std::set<std::string> enumerated;
    for (long k = 1; k <= n; ++k)
      for (const auto& cert : enumerate_stable_partitions(ambient, k))
        enumerated.insert(cert.partition.to_string());
    if (brute != enumerated) pass = false;
  }

  // Z4 two-block partitions against an independent block-sum oracle:
  // pair counts constant per block, inverse-closure, and a span unit found
  // by direct 2x2 elimination over the closure coefficients.
  {
    FiniteMonoid z4 = build_group(cyclic_spec(4));
    std::set<std::string> oracle;
    for (long mask = 1; mask < 8; ++mask) {
      std::vector<long> assign(4, 0);
      for (long t = 0; t < 3; ++t)
        if (mask & (1L << t)) assign[t + 1] = 1;
      Partition p = Partition::from_assignment(assign);
      bool stable = true;
      Rational gamma[2][2][2];  // S_i S_j = sum_k gamma[i][j][k] S_k
      for (long i = 0; i < 2 && stable; ++i)
        for (long j = 0; j < 2 && stable; ++j) {
          std::vector<long> counts(4, 0);
          for (long x : p.blocks[i])
            for (long y : p.blocks[j]) ++counts[z4.table[x][y]];
          for (long b = 0; b < 2; ++b) {
            gamma[i][j][b] = Rational(counts[p.blocks[b][0]]);
            for (long z : p.blocks[b])
              if (counts[z] != counts[p.blocks[b][0]]) stable = false;
          }
        }
      for (long b = 0; b < 2 && stable; ++b) {
        long target = p.block_of[(4 - p.blocks[b][0]) % 4];
        for (long x : p.blocks[b])
          if (p.block_of[(4 - x) % 4] != target) stable = false;
      }
      if (stable) {
        // span unit u = a S_0 + b S_1 with u S_k = S_k: two 2x2 systems
        // sharing the same solution; solve the first and verify all.
        bool unit_found = false;
        // a gamma[0][k][t] + b gamma[1][k][t] = delta_{kt}
        Rational det = gamma[0][0][0] * gamma[1][0][1] -
                       gamma[0][0][1] * gamma[1][0][0];
        if (!is_zero(det)) {
          Rational a = gamma[1][0][1] / det;
          Rational b = -gamma[1][0][0] / det;
          unit_found = true;
          for (long k = 0; k < 2; ++k)
            for (long t = 0; t < 2; ++t) {
              Rational lhs = a * gamma[0][k][t] + b * gamma[1][k][t];
              Rational rhs = (k == t) ? Rational(1) : Rational(0);
              if (lhs != rhs) unit_found = false;
            }
        }
        if (unit_found) oracle.insert(p.to_string());
      }
    }
    // The subgroup-coset partition {0,2}|{1,3} is certified stable by the
    // oracle (it is the double-coset partition of the subgroup {0,2});
    // the companion claim that {0}|{1,2,3} is the only stable two-block
    // partition contradicts the double-coset invariant and is reported
    // here as a documented discrepancy rather than asserted.
    std::set<std::string> expected{"{0}|{1,2,3}", "{0,2}|{1,3}"};
    if (oracle != expected) pass = false;
    if (!oracle.count("{0}|{1,2,3}")) pass = false;
    if (oracle.count("{0,1}|{2,3}")) pass = false;
    std::printf(
        "  note: the independent oracle certifies two stable two-block "
        "partitions of Z4,\n        {0}|{1,2,3} and the subgroup-coset "
        "partition {0,2}|{1,3}; the reference\n        list naming only the "
        "first conflicts with the double-coset invariant\n");

    AmbientContext ambient = make_ambient([&] {
      for (auto& m : full_catalog(4))
        if (m.name == "Z4") return m;
      throw Error("missing Z4");
    }());
    std::set<std::string> two_block;
    for (const auto& cert : enumerate_stable_partitions(ambient, 2))
      if (cert.partition.block_count() == 2)
        two_block.insert(cert.partition.to_string());
    if (two_block != oracle) pass = false;
  }
  report(7, "enumerate_stable_partitions matches brute force on |G| <= 6",
         pass);
}

TEST_CASE("criterion 8: structural involutions over the catalog") {
  bool pass = true;
  for (const auto& member : full_catalog(16)) {
    TwoAlgebra a = semigroup_bialgebra(member.semigroup).algebra;
    if (!(dual(dual(a)) == a)) pass = false;
    if (!(parse_2alg(emit_2alg(a)) == a)) pass = false;
  }
  report(8, "dual(dual(A)) = A and parse(emit(A)) = A on the whole catalog",
         pass);
}

TEST_CASE("criterion 9: negative controls fail with the documented witnesses") {
  bool pass = true;

  PositivityVerdict p =
      check_positivity(hecke_two_algebra(build_hecke(2, make_rational(1, 2))));
  if (!p.mult.fails()) pass = false;
  if (p.mult.witnesses.empty() ||
      p.mult.witnesses.front().indices != std::vector<long>{1, 1, 1})
    pass = false;

  TwoAlgebra perturbed = cyclic_bialgebra(2);
  perturbed.mult.set(0, 1, 1, Rational(2));
  Verdict v = validate_2_algebra(perturbed);
  if (!v.fails() || v.witnesses.front().identity != "unit-law") pass = false;

  TwoAlgebra z4 = cyclic_bialgebra(4);
  RatMat bad{{Rational(1), Rational(1), Rational(0), Rational(0)},
             {Rational(0), Rational(0), Rational(1), Rational(1)}};
  Verdict sub = is_strict_subobject(z4, bad);
  if (!sub.fails() || sub.witnesses.front().identity != "subalgebra-closure")
    pass = false;

  // full transformation monoid on 2 points is not inverse
  std::vector<std::vector<long>> t2{{0, 1, 2, 3},
                                    {1, 0, 2, 3},
                                    {2, 3, 2, 3},
                                    {3, 2, 2, 3}};
  // table above: left-to-right composition of id, swap, const0, const1
  FiniteMonoid t2m = FiniteMonoid::from_table(t2, {"id", "swap", "c0", "c1"});
  InverseCheck ic = is_inverse(t2m);
  if (!ic.verdict.fails()) pass = false;

  report(9, "negative controls fail exactly as documented", pass);
}
