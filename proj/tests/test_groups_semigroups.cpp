#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "builders.hpp"
#include "posalg/checks.hpp"
#include "posalg/linalg.hpp"

using namespace posalg;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long factorial(long n) {
  long r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// full transformation monoid on two points: id, swap, const0, const1
FiniteMonoid t2_monoid() {
  auto apply = [](int f, int x) {
    switch (f) {
      case 0: return x;        // id
      case 1: return 1 - x;    // swap
      case 2: return 0;        // const0
      default: return 1;       // const1
    }
  };
  std::vector<std::vector<long>> table(4, std::vector<long>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      // left-to-right: first a, then b
      int im0 = apply(b, apply(a, 0));
      int im1 = apply(b, apply(a, 1));
      int composite = -1;
      for (int f = 0; f < 4; ++f)
        if (apply(f, 0) == im0 && apply(f, 1) == im1) composite = f;
      table[a][b] = composite;
    }
  return FiniteMonoid::from_table(table, {"id", "swap", "c0", "c1"});
}

}  // namespace

TEST_CASE("group builders") {
  FiniteMonoid z4 = build_group(cyclic_spec(4));
  CHECK(z4.size == 4);
  CHECK(z4.unit == 0);
  CHECK(z4.table[1][3] == 0);

  CHECK(build_group(symmetric_spec(3)).size == 6);
  FiniteMonoid klein = build_group(abelian_spec({2, 2}));
  CHECK(klein.size == 4);
  for (long a = 0; a < 4; ++a) CHECK(klein.table[a][a] == 0);

  CHECK(build_group(dihedral_spec(4)).size == 8);
  CHECK(build_group(quaternion_spec()).size == 8);
  CHECK(build_group(alternating4_spec()).size == 12);
  CHECK_THROWS_AS(build_group(symmetric_spec(7)), Error);

  GroupSpec product;
  product.kind = GroupSpec::Kind::DirectProduct;
  product.factors = {cyclic_spec(2), cyclic_spec(3)};
  FiniteMonoid z2xz3 = build_group(product);
  CHECK(z2xz3.size == 6);
  CHECK(z2xz3.table == build_group(abelian_spec({2, 3})).table);
}

TEST_CASE("is_inverse") {
  // any group: holds with the group inverse
  FiniteMonoid z4 = build_group(cyclic_spec(4));
  InverseCheck c = is_inverse(z4);
  REQUIRE(c.verdict.holds());
  for (long a = 0; a < 4; ++a) CHECK(z4.table[a][c.inv[a]] == 0);

  // matrix units: e_ij* = e_ji, 0* = 0
  InverseSemigroup m2 = matrix_unit_semigroup(2);
  InverseCheck cm = is_inverse(m2.base);
  REQUIRE(cm.verdict.holds());
  CHECK(cm.inv == m2.inv);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) CHECK(cm.inv[i * 2 + j] == j * 2 + i);
  CHECK(cm.inv[4] == 4);

  // T2 fails: the constants have two distinct inverses
  InverseCheck ct = is_inverse(t2_monoid());
  REQUIRE(ct.verdict.fails());

  // oracle: c0 has both c0 and c1 as generalized inverses
  FiniteMonoid t2 = t2_monoid();
  long c0 = 2, c1 = 3;
  CHECK(t2.table[t2.table[c0][c0]][c0] == c0);
  CHECK(t2.table[t2.table[c0][c1]][c0] == c0);
  CHECK(t2.table[t2.table[c1][c0]][c1] == c1);
}

TEST_CASE("symmetric inverse semigroup sizes match the enumeration oracle") {
  for (long n = 1; n <= 4; ++n) {
    long expect = 0;
    for (long k = 0; k <= n; ++k)
      expect += binomial(n, k) * binomial(n, k) * factorial(k);
    CHECK(symmetric_inverse_semigroup(n).size() == expect);
  }
  CHECK(symmetric_inverse_semigroup(1).size() == 2);
  CHECK(symmetric_inverse_semigroup(2).size() == 7);
  CHECK(symmetric_inverse_semigroup(3).size() == 34);
  CHECK_THROWS_AS(symmetric_inverse_semigroup(5), Error);
}

TEST_CASE("matrix unit semigroup") {
  CHECK(matrix_unit_semigroup(1).size() == 2);
  InverseSemigroup m2 = matrix_unit_semigroup(2);
  CHECK(m2.size() == 5);
  // e12 e21 = e11 and e12 e12 = 0, indices e_ij -> 2(i-1) + (j-1)
  long e11 = 0, e12 = 1, e21 = 2, zero = 4;
  CHECK(m2.base.table[e12][e21] == e11);
  CHECK(m2.base.table[e12][e12] == zero);
  CHECK(!m2.unital());
  CHECK(symmetric_inverse_semigroup(1).unital());
}

TEST_CASE("semigroup bialgebra constructions") {
  SemigroupBialgebra z2 = semigroup_bialgebra(
      group_as_inverse(build_group(cyclic_spec(2))));
  CHECK(!z2.weakened);
  CHECK(z2.algebra.dim == 2);
  CHECK(is_bialgebra(z2.algebra).holds());

  SemigroupBialgebra i12 = semigroup_bialgebra(matrix_unit_semigroup(2));
  CHECK(i12.weakened);
  CHECK(i12.algebra.dim == 5);
  CHECK(wedderburn_dims(i12.algebra) == std::vector<long>{4, 1});

  TwoAlgebra i2 = semigroup_bialgebra(symmetric_inverse_semigroup(2)).algebra;
  CHECK(i2.dim == 7);
  CHECK(is_semisimple(i2, Side::Algebra).holds());
  CHECK(is_semisimple(i2, Side::Coalgebra).holds());
}

TEST_CASE("dual semigroup bialgebras") {
  // functions on Z2 with (Delta f)(g, h) = f(gh)
  InverseSemigroup z2 = group_as_inverse(build_group(cyclic_spec(2)));
  TwoAlgebra d = dual_semigroup_bialgebra(z2).algebra;
  for (long j = 0; j < 2; ++j)
    for (long k = 0; k < 2; ++k) CHECK(d.comult.get((j + k) % 2, j, k) == Rational(1));
  CHECK(d.commutative());
  CHECK(is_bialgebra(d).holds());

  // dual of dual is the identity on C[I1_2]
  TwoAlgebra i12 = semigroup_bialgebra(matrix_unit_semigroup(2)).algebra;
  CHECK(dual(dual(i12)) == i12);

  // bookkeeping: the dual's comultiplication is the transposed product table
  TwoAlgebra z3 = cyclic_bialgebra(3);
  TwoAlgebra dz3 = dual(z3);
  for (const auto& [key, value] : z3.mult.entries())
    CHECK(dz3.comult.get(key[2], key[0], key[1]) == value);
}

TEST_CASE("wedderburn block dimensions") {
  CHECK(wedderburn_dims(s3_bialgebra()) == std::vector<long>{4, 1, 1});
  TwoAlgebra i13 = semigroup_bialgebra(matrix_unit_semigroup(3)).algebra;
  CHECK(wedderburn_dims(i13) == std::vector<long>{9, 1});
  CHECK(wedderburn_dims(cyclic_bialgebra(4)) == std::vector<long>{1, 1, 1, 1});
  CHECK(wedderburn_dims(group_bialgebra(build_group(quaternion_spec()))) ==
        std::vector<long>{4, 1, 1, 1, 1});
}

TEST_CASE("almost antipode") {
  // groups: both convolutions send a to the identity
  InverseSemigroup z3 = group_as_inverse(build_group(cyclic_spec(3)));
  TwoAlgebra az3 = semigroup_bialgebra(z3).algebra;
  CHECK(almost_antipode_check(az3, z3).holds());

  // I1_2: (id * S)(e12) = e12 e21 = e11
  InverseSemigroup m2 = matrix_unit_semigroup(2);
  CHECK(m2.base.table[1][m2.inv[1]] == 0);
  CHECK(almost_antipode_check(semigroup_bialgebra(m2).algebra, m2).holds());

  // I2: the image of a -> a a^{-1} spans exactly the partial identities
  InverseSemigroup i2 = symmetric_inverse_semigroup(2);
  CHECK(almost_antipode_check(semigroup_bialgebra(i2).algebra, i2).holds());
  std::set<long> images;
  for (long a = 0; a < i2.size(); ++a)
    images.insert(i2.base.table[a][i2.inv[a]]);
  CHECK(images.size() == 4);
  for (long e : images) CHECK(i2.base.table[e][e] == e);
}

TEST_CASE("recover_semigroup inverts the construction") {
  for (const auto& member : full_catalog(8)) {
    if (member.semigroup.size() > 8) continue;
    TwoAlgebra a = semigroup_bialgebra(member.semigroup).algebra;
    RecoveredSemigroup r = recover_semigroup(a);
    REQUIRE(r.verdict.holds());
    CHECK(r.monoid.table == member.semigroup.base.table);
    CHECK(r.monoid.labels == member.semigroup.base.labels);
    CHECK(r.inv == member.semigroup.inv);
  }
}

TEST_CASE("theorem-2 forward properties over the catalog") {
  for (const auto& member : full_catalog(12)) {
    if (member.semigroup.size() > 12) continue;
    SemigroupBialgebra b = semigroup_bialgebra(member.semigroup);
    CHECK(validate_2_algebra(b.algebra).holds());
    CHECK(is_bialgebra(b.algebra).holds());
    CHECK(check_involutive(b.algebra).holds());
    CHECK(is_semisimple(b.algebra, Side::Algebra).holds());
    CHECK(is_semisimple(b.algebra, Side::Coalgebra).holds());
    CHECK(b.algebra.cocommutative());
    // counit existence as a homomorphism tracks unit existence
    CHECK(b.weakened == !member.semigroup.unital());
    CHECK(check_homogeneity(b.algebra).holds() == !b.weakened);
  }
}

TEST_CASE("right translations embed small members into I_n") {
  // Wagner-Preston style: a -> (x -> xa on {x : x a a^{-1} = x})
  for (const auto& member : full_catalog(4)) {
    const InverseSemigroup& s = member.semigroup;
    long n = s.size();
    if (n > 4) continue;
    // each translation is a partial injection on {0..n-1}, i.e. an element
    // of I_n composing left to right exactly as I_n does
    std::vector<std::vector<long>> rho(n, std::vector<long>(n, -1));
    for (long a = 0; a < n; ++a) {
      long aai = s.base.table[a][s.inv[a]];
      for (long x = 0; x < n; ++x)
        if (s.base.table[x][aai] == x) rho[a][x] = s.base.table[x][a];
    }
    // injectivity of each translation and of the whole assignment
    std::set<std::vector<long>> distinct(rho.begin(), rho.end());
    CHECK(static_cast<long>(distinct.size()) == n);
    for (long a = 0; a < n; ++a) {
      std::set<long> image;
      for (long x = 0; x < n; ++x)
        if (rho[a][x] >= 0) CHECK(image.insert(rho[a][x]).second);
    }
    // homomorphism and involution compatibility
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        std::vector<long> composed(n, -1);
        for (long x = 0; x < n; ++x)
          if (rho[a][x] >= 0 && rho[b][rho[a][x]] >= 0)
            composed[x] = rho[b][rho[a][x]];
        CHECK(composed == rho[s.base.table[a][b]]);
      }
      std::vector<long> backwards(n, -1);
      for (long x = 0; x < n; ++x)
        if (rho[a][x] >= 0) backwards[rho[a][x]] = x;
      CHECK(backwards == rho[s.inv[a]]);
    }
  }
}
