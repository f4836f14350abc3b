#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posalg/rational.hpp"

namespace posalg {

// Supported cyclotomic orders are capped; abelian-group catalogs here never
// exceed exponent 16, so the default leaves plenty of slack.
long max_cyclotomic_order();
void set_max_cyclotomic_order(long m);

// The m-th cyclotomic polynomial as a monic integer polynomial of degree
// phi(m), coefficients in ascending degree order. Computed by recursive
// exact division of x^m - 1 by the Phi_d over proper divisors d of m.
const std::vector<Integer>& cyclotomic_polynomial(long m);

// An element of Q(zeta_m), stored reduced modulo Phi_m, so equality of
// complex values coincides with equality of representations.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
  Cyclotomic(long order, RatVec coeffs);  // coeffs must have phi(order) entries

  long order() const { return order_; }
  const RatVec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Value in the prime subfield, or nullopt when the element is irrational.
  std::optional<Rational> to_rational() const;

  // Injective arithmetic-preserving embedding into Q(zeta_new_order);
  // order() must divide new_order.
  Cyclotomic coerced(long new_order) const;

  Cyclotomic operator-() const;
  Cyclotomic conj() const;  // complex conjugation, zeta -> zeta^{-1}
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  std::string to_string() const;

 private:
  long order_;
  RatVec coeffs_;
};

// zeta_m^(k mod m) as a reduced element of Q(zeta_m).
Cyclotomic root_of_unity(long m, long k);

inline Cyclotomic cyc_rational(long num, long den = 1) {
  return Cyclotomic(make_rational(num, den));
}

// Total order on serialized form; used only for canonical sorting, it has no
// meaning as a comparison of complex values.
bool serialization_less(const Cyclotomic& a, const Cyclotomic& b);

using CycVec = std::vector<Cyclotomic>;
using CycMat = std::vector<std::vector<Cyclotomic>>;

}  // namespace posalg
