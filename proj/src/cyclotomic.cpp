#include "posalg/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace posalg {

namespace {

long g_max_order = 64;

// Dense integer polynomial division, exact; divisor must be monic.
std::vector<Integer> div_exact(std::vector<Integer> num,
                               const std::vector<Integer>& den) {
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (long k = dn - dd; k >= 0; --k) {
    Integer c = num[k + dd];
    quot[k] = c;
    if (c != 0)
      for (long j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw Error("inexact polynomial division");
  return quot;
}

std::vector<Rational> poly_mod(std::vector<Rational> p,
                               const std::vector<Integer>& mod) {
  long dd = static_cast<long>(mod.size()) - 1;
  while (static_cast<long>(p.size()) > dd) {
    Rational c = p.back();
    long k = static_cast<long>(p.size()) - 1 - dd;
    if (!is_zero(c))
      for (long j = 0; j <= dd; ++j) p[k + j] -= c * Rational(mod[j]);
    p.pop_back();
  }
  p.resize(dd, Rational(0));
  return p;
}

}  // namespace

long max_cyclotomic_order() { return g_max_order; }
void set_max_cyclotomic_order(long m) { g_max_order = m; }

const std::vector<Integer>& cyclotomic_polynomial(long m) {
  if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<Integer>&(long)> compute =
      [&](long n) -> const std::vector<Integer>& {
    auto found = cache.find(n);
    if (found != cache.end()) return found->second;
    // x^n - 1 divided by Phi_d over proper divisors d of n.
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
      if (d == n) continue;
      num = div_exact(num, compute(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
  };
  return compute(m);
}

Cyclotomic::Cyclotomic(long order, RatVec coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw Error("cyclotomic order must be positive");
  if (order > g_max_order)
    throw Error("cyclotomic order " + std::to_string(order) +
                " exceeds cap " + std::to_string(g_max_order));
  if (static_cast<long>(coeffs_.size()) != euler_phi(order))
    throw Error("cyclotomic coefficient vector has wrong length");
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!posalg::is_zero(c)) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!posalg::is_zero(coeffs_[i])) return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::coerced(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw Error("coercion target order must be a multiple of the source");
  long step = new_order / order_;
  // zeta_m = zeta_{new}^step: substitute x -> x^step, then reduce.
  std::vector<Rational> p(static_cast<size_t>((coeffs_.size() - 1) * step + 1),
                          Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Cyclotomic(new_order, poly_mod(std::move(p),
                                        cyclotomic_polynomial(new_order)));
}

Cyclotomic Cyclotomic::operator-() const {
  RatVec c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^i -> zeta^{(m-i) mod m}
  std::vector<Rational> p(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long e = (order_ - static_cast<long>(i)) % order_;
    p[e] += coeffs_[i];
  }
  return Cyclotomic(order_, poly_mod(std::move(p),
                                     cyclotomic_polynomial(order_)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(zeta)");
  // Extended Euclid in Q[x] against Phi_m: u*a + v*Phi = 1, inverse = u.
  const auto& phi = cyclotomic_polynomial(order_);
  std::vector<Rational> r0(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
  std::vector<Rational> r1 = coeffs_;
  while (!r1.empty() && posalg::is_zero(r1.back())) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};

  auto deg = [](const std::vector<Rational>& p) {
    return static_cast<long>(p.size()) - 1;
  };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rational> q(std::max<long>(deg(r0) - deg(r1) + 1, 1),
                            Rational(0));
    std::vector<Rational> rem = r0;
    for (long k = deg(r0) - deg(r1); k >= 0; --k) {
      Rational c = rem[k + deg(r1)] / r1.back();
      q[k] = c;
      if (!posalg::is_zero(c))
        for (long j = 0; j <= deg(r1); ++j) rem[k + j] -= c * r1[j];
    }
    while (rem.size() > 1 && posalg::is_zero(rem.back())) rem.pop_back();
    // s_{k+1} = s_{k-1} - q * s_k
    std::vector<Rational> s2(
        std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      if (!posalg::is_zero(q[i]))
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    while (s2.size() > 1 && posalg::is_zero(s2.back())) s2.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty() || posalg::is_zero(r1[0]))
    throw Error("element not invertible");  // cannot happen: Phi irreducible
  Rational scale = Rational(1) / r1[0];
  for (auto& c : s1) c *= scale;
  return Cyclotomic(order_, poly_mod(std::move(s1),
                                     cyclotomic_polynomial(order_)));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.order_, b.order_);
  Cyclotomic ca = a.coerced(m), cb = b.coerced(m);
  for (size_t i = 0; i < ca.coeffs_.size(); ++i)
    ca.coeffs_[i] += cb.coeffs_[i];
  return ca;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.order_, b.order_);
  Cyclotomic ca = a.coerced(m), cb = b.coerced(m);
  std::vector<Rational> prod(2 * ca.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < ca.coeffs_.size(); ++i)
    if (!is_zero(ca.coeffs_[i]))
      for (size_t j = 0; j < cb.coeffs_.size(); ++j)
        if (!is_zero(cb.coeffs_[j])) prod[i + j] += ca.coeffs_[i] * cb.coeffs_[j];
  return Cyclotomic(m, poly_mod(std::move(prod), cyclotomic_polynomial(m)));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.order_, b.order_);
  return a.coerced(m).coeffs_ == b.coerced(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return posalg::to_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (posalg::is_zero(coeffs_[i])) continue;
    if (!first) out << " + ";
    first = false;
    out << posalg::to_string(coeffs_[i]);
    if (i > 0) out << "*z" << order_ << "^" << i;
  }
  return out.str();
}

Cyclotomic root_of_unity(long m, long k) {
  if (m < 1) throw Error("root_of_unity needs m >= 1");
  long e = ((k % m) + m) % m;
  std::vector<Rational> p(e + 1, Rational(0));
  p[e] = 1;
  return Cyclotomic(m, poly_mod(std::move(p), cyclotomic_polynomial(m)));
}

bool serialization_less(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.order(), b.order());
  const RatVec ca = a.coerced(m).coeffs();
  const RatVec cb = b.coerced(m).coeffs();
  for (size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace posalg
