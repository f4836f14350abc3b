#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posalg/cyclotomic.hpp"
#include "proptest.hpp"

using namespace posalg;

namespace {

std::vector<Integer> int_poly(std::initializer_list<long> coeffs) {
  std::vector<Integer> p;
  for (long c : coeffs) p.emplace_back(c);
  return p;
}

Cyclotomic random_cyclotomic(long order) {
  RatVec coeffs(euler_phi(order));
  for (auto& c : coeffs) c = make_rational(rand_int(-4, 4), rand_int(1, 3));
  return Cyclotomic(order, coeffs);
}

}  // namespace

TEST_CASE("rational serialization") {
  CHECK(to_string(make_rational(3, 6)) == "1/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(to_string(make_rational(5, -10)) == "-1/2");
  CHECK(parse_rational("7/21") == make_rational(1, 3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == int_poly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == int_poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == int_poly({1, -1, 1}));
}

TEST_CASE("product of Phi_d over divisors of m is x^m - 1, m <= 24") {
  for (long m = 1; m <= 24; ++m) {
    CHECK(static_cast<long>(cyclotomic_polynomial(m).size()) ==
          euler_phi(m) + 1);
    std::vector<Integer> prod{Integer(1)};
    for (long d : divisors(m)) {
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<Integer> next(prod.size() + phi.size() - 1, Integer(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    std::vector<Integer> expect(m + 1, Integer(0));
    expect[0] = -1;
    expect[m] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("root of unity arithmetic") {
  CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == cyc_rational(-1));
  CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == cyc_rational(-1));
  CHECK(root_of_unity(8, 1).inverse() == root_of_unity(8, 7));

  CHECK(root_of_unity(2, 1) == cyc_rational(-1));
  CHECK(root_of_unity(5, 0) == cyc_rational(1));
  CHECK(root_of_unity(4, 6) == cyc_rational(-1));
}

TEST_CASE("rationality testing") {
  Cyclotomic half(make_rational(1, 2));
  Cyclotomic third(make_rational(1, 3));

  Cyclotomic a = (root_of_unity(4, 1) + root_of_unity(4, 3)) * half;
  REQUIRE(a.is_rational());
  CHECK(*a.to_rational() == Rational(0));

  // i - 1 - i = -1 exactly, then divided by 3.
  Cyclotomic b =
      (root_of_unity(4, 1) + root_of_unity(4, 2) + root_of_unity(4, 3)) * third;
  REQUIRE(b.is_rational());
  CHECK(*b.to_rational() == make_rational(-1, 3));

  CHECK(!root_of_unity(3, 1).is_rational());
  CHECK(!root_of_unity(3, 1).to_rational().has_value());
}

TEST_CASE("field axioms hold exactly on random samples") {
  const long bases[] = {6, 8, 12, 16, 20, 24, 36, 40, 48, 60, 64};
  for (int trial = 0; trial < 200; ++trial) {
    auto divs = divisors(bases[rand_int(0, 10)]);
    long nd = static_cast<long>(divs.size()) - 1;
    Cyclotomic a = random_cyclotomic(divs[rand_int(0, nd)]);
    Cyclotomic b = random_cyclotomic(divs[rand_int(0, nd)]);
    Cyclotomic c = random_cyclotomic(divs[rand_int(0, nd)]);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == cyc_rational(1));
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
}

TEST_CASE("coercion round trip preserves equality") {
  for (int trial = 0; trial < 100; ++trial) {
    long m = rand_int(1, 12);
    long k = rand_int(1, 64 / m);
    Cyclotomic a = random_cyclotomic(m);
    CHECK(a.coerced(m * k) == a);
    CHECK(a.coerced(m * k).conj() == a.conj().coerced(m * k));
  }
}

TEST_CASE("conjugation inverts roots of unity") {
  for (long m = 1; m <= 16; ++m)
    for (long k = 0; k < m; ++k)
      CHECK(root_of_unity(m, k).conj() == root_of_unity(m, m - k));
}

TEST_CASE("the order cap is configurable") {
  CHECK(max_cyclotomic_order() == 64);
  CHECK_THROWS_AS(root_of_unity(65, 1), Error);
  set_max_cyclotomic_order(8);
  CHECK_THROWS_AS(root_of_unity(9, 1), Error);
  set_max_cyclotomic_order(64);
  CHECK(root_of_unity(9, 1) * root_of_unity(9, 8) == cyc_rational(1));
}
