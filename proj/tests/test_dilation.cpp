#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "builders.hpp"
#include "posalg/checks.hpp"
#include "posalg/hecke.hpp"
#include "posalg/search.hpp"

using namespace posalg;

namespace {

std::shared_ptr<const TwoAlgebra> shared(TwoAlgebra a) {
  return std::make_shared<const TwoAlgebra>(std::move(a));
}

Partition parts(long n, std::vector<std::vector<long>> blocks) {
  return Partition::from_blocks(n, std::move(blocks));
}

bool equal_up_to_labels(TwoAlgebra a, TwoAlgebra b) {
  a.labels.clear();
  b.labels.clear();
  return a == b;
}

}  // namespace

TEST_CASE("stable partitions") {
  auto s3 = shared(s3_bialgebra());
  FiniteMonoid g3 = build_group(symmetric_spec(3));

  // double cosets of <(12)>
  long t12 = -1;
  for (long i = 0; i < 6; ++i)
    if (g3.labels[i] == "2.1.3") t12 = i;
  Partition dc = double_coset_partition(g3, {0, t12});
  CHECK(dc.block_count() == 2);
  std::multiset<size_t> sizes{dc.blocks[0].size(), dc.blocks[1].size()};
  CHECK(sizes == std::multiset<size_t>{2, 4});
  CHECK(is_stable_partition(s3, dc).verdict.holds());

  // conjugacy classes of S3: identity, transpositions, 3-cycles
  std::vector<std::vector<long>> classes(3);
  for (long i = 0; i < 6; ++i) {
    long len = inversion_count([&] {
      std::vector<long> p;
      for (char c : g3.labels[i])
        if (c != '.') p.push_back(c - '1');
      return p;
    }());
    classes[len == 0 ? 0 : (len % 2 == 1 ? 1 : 2)].push_back(i);
  }
  Partition conj = parts(6, classes);
  CHECK(conj.block_count() == 3);
  CHECK(is_stable_partition(s3, conj).verdict.holds());

  // {0,1},{2,3} of Z4 is not stable: (x0+x1)^2 = x0 + 2 x1 + x2
  auto z4 = shared(cyclic_bialgebra(4));
  StabilityResult bad = is_stable_partition(z4, parts(4, {{0, 1}, {2, 3}}));
  CHECK(bad.verdict.fails());
  RatVec sq = z4->product({1, 1, 0, 0}, {1, 1, 0, 0});
  CHECK(sq == RatVec{Rational(1), Rational(2), Rational(1), Rational(0)});
}

TEST_CASE("double coset partitions, degenerate subgroups") {
  FiniteMonoid g = build_group(cyclic_spec(6));
  std::vector<long> all(6);
  for (long i = 0; i < 6; ++i) all[i] = i;
  CHECK(double_coset_partition(g, {0}) == Partition::singletons(6));
  CHECK(double_coset_partition(g, all).block_count() == 1);
  CHECK_THROWS_AS(double_coset_partition(g, {0, 1}), Error);  // not closed
}

TEST_CASE("automorphism orbit partitions") {
  FiniteMonoid z4 = build_group(cyclic_spec(4));
  Partition inv_orbits =
      automorphism_orbit_partition(z4, {{0, 3, 2, 1}});  // g -> -g
  CHECK(inv_orbits == parts(4, {{0}, {2}, {1, 3}}));
  CHECK(is_stable_partition(shared(cyclic_bialgebra(4)), inv_orbits)
            .verdict.holds());

  FiniteMonoid z5 = build_group(cyclic_spec(5));
  Partition doubling =
      automorphism_orbit_partition(z5, {{0, 2, 4, 1, 3}});  // g -> 2g
  CHECK(doubling == parts(5, {{0}, {1, 2, 3, 4}}));

  CHECK(automorphism_orbit_partition(z4, {{0, 1, 2, 3}}) ==
        Partition::singletons(4));
  CHECK_THROWS_AS(automorphism_orbit_partition(z4, {{1, 0, 3, 2}}), Error);
}

TEST_CASE("induced 2-algebras hit the A_lambda family") {
  auto induce = [&](const TwoAlgebra& ambient, const Partition& p) {
    auto sp = shared(ambient);
    StabilityResult r = is_stable_partition(sp, p);
    REQUIRE(r.verdict.holds());
    return induced_two_algebra(r.cert);
  };

  TwoAlgebra half = induce(cyclic_bialgebra(3), parts(3, {{0}, {1, 2}}));
  CHECK(equal_up_to_labels(half, a_lambda(make_rational(1, 2))));

  TwoAlgebra third = induce(cyclic_bialgebra(4), parts(4, {{0}, {1, 2, 3}}));
  CHECK(equal_up_to_labels(third, a_lambda(make_rational(1, 3))));

  // S3 with the double cosets of <(12)> matches H_2(2) in stochastic form
  FiniteMonoid g3 = build_group(symmetric_spec(3));
  long t12 = -1;
  for (long i = 0; i < 6; ++i)
    if (g3.labels[i] == "2.1.3") t12 = i;
  TwoAlgebra borel =
      induce(s3_bialgebra(), double_coset_partition(g3, {0, t12}));
  CHECK(equal_up_to_labels(borel, hecke_two_algebra(build_hecke(2, Rational(2)))));

  // induced algebras are homogeneous positive 2-algebras
  for (const TwoAlgebra& a : {half, third, borel}) {
    CHECK(check_positive_2_algebra(a).holds());
    CHECK(check_homogeneity(a).holds());
  }
}

TEST_CASE("strict subobjects") {
  TwoAlgebra s3 = s3_bialgebra();
  FiniteMonoid g3 = build_group(symmetric_spec(3));
  long t12 = -1;
  for (long i = 0; i < 6; ++i)
    if (g3.labels[i] == "2.1.3") t12 = i;
  Partition dc = double_coset_partition(g3, {0, t12});
  RatMat sums;
  for (const auto& block : dc.blocks) {
    RatVec v(6, Rational(0));
    for (long x : block) v[x] = 1;
    sums.push_back(v);
  }
  CHECK(is_strict_subobject(s3, sums).holds());

  // span{1} is always a strict subobject
  CHECK(is_strict_subobject(s3, {s3.unit}).holds());

  // not a subalgebra
  TwoAlgebra z4 = cyclic_bialgebra(4);
  RatMat bad{{Rational(1), Rational(1), Rational(0), Rational(0)},
             {Rational(0), Rational(0), Rational(1), Rational(1)}};
  Verdict v = is_strict_subobject(z4, bad);
  REQUIRE(v.fails());
  CHECK(v.witnesses.front().identity == "subalgebra-closure");
}

TEST_CASE("nonstrict witnesses") {
  // strict implies nonstrict with the bialgebra's own comultiplication
  TwoAlgebra z2 = cyclic_bialgebra(2);
  TwoAlgebra a1 = a_lambda(Rational(1));
  RatMat t = identity_matrix(2);
  CHECK(verify_nonstrict_witness(z2, a1, t, z2.comult).holds());

  // the coarse-grain witness for A_{1/3} inside C[Z4]
  auto w = coarse_grain_search_lambda(make_rational(1, 3), 4);
  REQUIRE(w.has_value());
  CHECK(w->group_name == "Z4");
  CHECK(w->partition == parts(4, {{0}, {1, 2, 3}}));
  TwoAlgebra z4 = cyclic_bialgebra(4);
  TwoAlgebra third = a_lambda(make_rational(1, 3));
  CHECK(verify_nonstrict_witness(z4, third, w->embedding, w->coaction).holds());

  // sign perturbation breaks coassociativity
  StructureTensor perturbed = w->coaction;
  perturbed.set(1, 1, 1, -perturbed.get(1, 1, 1));
  perturbed.set(1, 2, 1, -perturbed.get(1, 2, 1));
  perturbed.set(1, 3, 1, -perturbed.get(1, 3, 1));
  Verdict v = verify_nonstrict_witness(z4, third, w->embedding, perturbed);
  REQUIRE(v.fails());
  CHECK((v.witnesses.front().identity == "coaction-coassociativity" ||
         v.witnesses.front().identity == "coaction-extension"));

  // a genuinely non-multiplicative T is rejected outright
  RatMat bad_t(4, RatVec(2, Rational(0)));
  bad_t[0][0] = 1;
  bad_t[1][1] = 1;  // u -> x1 does not satisfy the quadratic relation
  CHECK_THROWS_AS(verify_nonstrict_witness(z4, third, bad_t, w->coaction),
                  Error);
}

TEST_CASE("A_lambda constructions") {
  CHECK(equal_up_to_labels(a_lambda(Rational(1)), cyclic_bialgebra(2)));

  // lambda = 0: the semigroup {1, p | p^2 = p}
  FiniteMonoid idem = FiniteMonoid::from_table({{0, 1}, {1, 1}}, {"1", "p"});
  TwoAlgebra a0 = semigroup_bialgebra(group_as_inverse(idem)).algebra;
  CHECK(equal_up_to_labels(a_lambda(Rational(0)), a0));

  CHECK_THROWS_AS(a_lambda(Rational(2)), Error);
  CHECK_THROWS_AS(a_lambda(Rational(-1)), Error);
}

TEST_CASE("classify_2dim") {
  for (long n = 2; n <= 7; ++n) {
    auto z = shared(cyclic_bialgebra(n + 1));
    std::vector<long> rest;
    for (long i = 1; i <= n; ++i) rest.push_back(i);
    StabilityResult r =
        is_stable_partition(z, parts(n + 1, {{0}, rest}));
    REQUIRE(r.verdict.holds());
    TwoDimClass cls = classify_2dim(induced_two_algebra(r.cert));
    REQUIRE(cls.kind == TwoDimClass::Kind::Lambda);
    CHECK(cls.lambda == make_rational(1, n));
  }
  CHECK(classify_2dim(truncated_polynomials()).kind ==
        TwoDimClass::Kind::NotSemisimple);
}

TEST_CASE("strict dilation predicate") {
  StrictDilationPrediction p = strict_dilation_predicate(make_rational(1, 2));
  CHECK(p.strict_predicted);
  CHECK(p.k == 1);
  CHECK(p.s == 2);

  p = strict_dilation_predicate(make_rational(1, 3));
  CHECK(p.strict_predicted);
  CHECK(p.k == 1);
  CHECK(p.s == 3);

  CHECK(!strict_dilation_predicate(make_rational(2, 5)).strict_predicted);
  CHECK(strict_dilation_predicate(Rational(1)).strict_predicted);
  CHECK_THROWS_AS(strict_dilation_predicate(Rational(0)), Error);
}

TEST_CASE("quasi-character matrices") {
  auto rat = [](const char* s) { return Cyclotomic(parse_rational(s)); };

  QuasiCharacterMatrix qa = quasicharacter_matrix(a_lambda(make_rational(1, 4)));
  CHECK(qa.entries[0][0] == rat("1"));
  CHECK(qa.entries[0][1] == rat("1"));
  CHECK(qa.entries[1][0] == rat("1"));
  CHECK(qa.entries[1][1] == rat("-1/4"));

  QuasiCharacterMatrix qz2 = quasicharacter_matrix(cyclic_bialgebra(2));
  CHECK(qz2.entries[1][1] == rat("-1"));

  auto z4 = shared(cyclic_bialgebra(4));
  StabilityResult r = is_stable_partition(z4, parts(4, {{0}, {1, 2, 3}}));
  REQUIRE(r.verdict.holds());
  QuasiCharacterMatrix qi = quasicharacter_matrix(induced_two_algebra(r.cert));
  CHECK(qi.entries[1][1] == rat("-1/3"));

  CHECK_THROWS_AS(quasicharacter_matrix(s3_bialgebra()), Error);
}

TEST_CASE("stable partition enumeration") {
  auto member = [](const char* name, long n) {
    for (auto& m : full_catalog(n))
      if (m.name == name) return m;
    throw Error("missing member");
  };

  AmbientContext z3 = make_ambient(member("Z3", 3));
  auto certs = enumerate_stable_partitions(z3, 2);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].partition == parts(3, {{0}, {1, 2}}));
  CHECK(certs[1].partition == Partition::singletons(3));

  AmbientContext z4 = make_ambient(member("Z4", 4));
  auto certs4 = enumerate_stable_partitions(z4, 2);
  bool has_big = false;
  for (const auto& c : certs4) {
    CHECK(c.partition != parts(4, {{0, 1}, {2, 3}}));
    if (c.partition == parts(4, {{0}, {1, 2, 3}})) has_big = true;
  }
  CHECK(has_big);
  // singleton partition always produced
  bool has_singletons = false;
  for (const auto& c : certs4)
    if (c.partition == Partition::singletons(4)) has_singletons = true;
  CHECK(has_singletons);
}

TEST_CASE("enumerator equals brute force on small groups") {
  for (const char* name : {"Z4", "Z5", "Z6", "S3", "Z2xZ2"}) {
    CatalogMember member = [&] {
      for (auto& m : full_catalog(6))
        if (m.name == name) return m;
      throw Error("missing member");
    }();
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

    CHECK(brute == enumerated);
  }
}

TEST_CASE("double-coset and orbit partitions are always stable") {
  for (const auto& member : group_catalog(8)) {
    FiniteMonoid g = member.semigroup.base;
    auto ambient = std::make_shared<const TwoAlgebra>(group_bialgebra(g));
    for (const auto& h : subgroups(g))
      CHECK(is_stable_partition(ambient, double_coset_partition(g, h))
                .verdict.holds());
    auto gens = automorphism_generators(g);
    CHECK(is_stable_partition(ambient, automorphism_orbit_partition(g, gens))
              .verdict.holds());
    if (!gens.empty())
      CHECK(is_stable_partition(
                ambient, automorphism_orbit_partition(g, {gens.front()}))
                .verdict.holds());
  }
}

TEST_CASE("every induced algebra over the catalog is a homogeneous positive "
          "2-algebra") {
  for (const auto& member : full_catalog(8)) {
    if (member.semigroup.size() > 8) continue;
    AmbientContext ambient = make_ambient(member);
    long n = member.semigroup.size();
    for (long k : {2L, 3L}) {
      if (k > n) continue;
      for (const auto& cert : enumerate_stable_partitions(ambient, k)) {
        TwoAlgebra induced = induced_two_algebra(cert);
        PositivityVerdict p = check_positivity(induced);
        CHECK(!p.mult.fails());
        CHECK(!p.comult.fails());
        if (!ambient.weakened) {
          CHECK(check_positive_2_algebra(induced).holds());
          CHECK(check_homogeneity(induced).holds());
        }
      }
    }
  }
}

TEST_CASE("strict dilation search") {
  auto half = strict_dilation_search(a_lambda(make_rational(1, 2)), 8);
  CHECK(half.structured_only.empty());
  bool z3_witness = false, s3_witness = false;
  for (const auto& w : half.witnesses) {
    if (w.ambient_name == "Z3" &&
        w.partition == parts(3, {{0}, {1, 2}}))
      z3_witness = true;
    if (w.ambient_name == "S3" && w.partition.block_count() == 2) {
      std::multiset<size_t> sz{w.partition.blocks[0].size(),
                               w.partition.blocks[1].size()};
      if (sz == std::multiset<size_t>{2, 4}) s3_witness = true;
    }
  }
  CHECK(z3_witness);
  CHECK(s3_witness);

  auto third = strict_dilation_search(a_lambda(make_rational(1, 3)), 8);
  bool z4_witness = false;
  for (const auto& w : third.witnesses)
    if (w.ambient_name == "Z4" && w.partition == parts(4, {{0}, {1, 2, 3}}))
      z4_witness = true;
  CHECK(z4_witness);
}

TEST_CASE("structured mode finds the class partition of S4") {
  CatalogMember s4;
  for (auto& m : full_catalog(24))
    if (m.name == "S4") s4 = m;
  REQUIRE(s4.semigroup.size() == 24);
  AmbientContext ambient = make_ambient(s4);
  auto certs = enumerate_stable_partitions(ambient, 5);
  bool classes = false;
  for (const auto& c : certs) {
    if (c.partition.block_count() != 5) continue;
    std::multiset<size_t> sizes;
    for (const auto& b : c.partition.blocks) sizes.insert(b.size());
    if (sizes == std::multiset<size_t>{1, 3, 6, 6, 8}) classes = true;
  }
  CHECK(classes);
}

TEST_CASE("strict dilation search with noncommutative targets") {
  // a group bialgebra is its own witness through the singleton partition
  TwoAlgebra s3 = s3_bialgebra();
  auto hits = strict_dilation_search(s3, 6);
  CHECK(hits.structured_only.empty());
  bool self_witness = false;
  for (const auto& w : hits.witnesses)
    if (w.ambient_name == "S3" && w.partition == Partition::singletons(6))
      self_witness = true;
  CHECK(self_witness);

  // H_3(2) needs the 168-element ambient; nothing at order <= 8
  TwoAlgebra h32 = hecke_two_algebra(build_hecke(3, Rational(2)));
  StrictSearchResult h32_result = strict_dilation_search(h32, 8);
  CHECK(h32_result.witnesses.empty());
  CHECK(h32_result.structured_only.empty());  // genuinely exhaustive
}

TEST_CASE("searches are deterministic across worker counts") {
  TwoAlgebra target = a_lambda(make_rational(1, 3));
  auto serialize = [](const std::vector<DilationWitness>& ws) {
    std::string s;
    for (const auto& w : ws) {
      s += w.ambient_name + ":" + w.partition.to_string() + ":";
      for (long i : w.iso) s += std::to_string(i);
      s += ";";
    }
    return s;
  };
  std::string one = serialize(strict_dilation_search(target, 10, 1).witnesses);
  std::string four = serialize(strict_dilation_search(target, 10, 4).witnesses);
  CHECK(one == four);
  CHECK(!one.empty());

  CensusReport c1 = lambda_census(8, 1);
  CensusReport c4 = lambda_census(8, 4);
  REQUIRE(c1.rows.size() == c4.rows.size());
  for (size_t i = 0; i < c1.rows.size(); ++i) {
    CHECK(c1.rows[i].lambda == c4.rows[i].lambda);
    CHECK(serialize(c1.rows[i].strict_group) ==
          serialize(c4.rows[i].strict_group));
    CHECK(serialize(c1.rows[i].strict_semigroup) ==
          serialize(c4.rows[i].strict_semigroup));
  }
  CHECK(c1.discrepancies == c4.discrepancies);
}

TEST_CASE("coarse grain search") {
  auto one = coarse_grain_search_lambda(Rational(1), 8);
  REQUIRE(one.has_value());
  CHECK(one->group_name == "Z2");
  CHECK(one->partition == Partition::singletons(2));

  auto half = coarse_grain_search_lambda(make_rational(1, 2), 8);
  REQUIRE(half.has_value());
  CHECK(half->group_name == "Z3");
  CHECK(half->partition == parts(3, {{0}, {1, 2}}));

  auto third = coarse_grain_search_lambda(make_rational(1, 3), 8);
  REQUIRE(third.has_value());
  CHECK(third->group_name == "Z4");
}

TEST_CASE("lambda census at order 8") {
  CensusReport r = lambda_census(8);

  std::set<std::string> strict_group;
  for (const auto& row : r.rows)
    if (!row.strict_group.empty()) strict_group.insert(to_string(row.lambda));
  CHECK(strict_group ==
        std::set<std::string>{"1", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7"});

  for (const auto& row : r.rows) {
    if (row.strict_group.empty()) continue;
    CHECK(row.predicate_applicable);
    CHECK(row.prediction.strict_predicted);
    CHECK(row.nonstrict.has_value());  // nonstrict census contains strict
  }

  bool third_discrepancy = false;
  for (const auto& d : r.discrepancies)
    if (d.find("lambda = 1/3") != std::string::npos &&
        d.find("nonstrict but not a strict") != std::string::npos)
      third_discrepancy = true;
  CHECK(third_discrepancy);
}
