#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "posalg/common.hpp"

namespace posalg {

// All scalar arithmetic in the workbench is exact. Rationals are GMP
// mpq_class values, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Serialized form is "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || (c == '-' && i == 0) || c == '/';
    if (!ok) throw Error("malformed rational literal '" + text + "'");
  }
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (den.empty() || den.find('/') != std::string::npos)
      throw Error("malformed rational literal '" + text + "'");
    if (Integer(den) == 0)
      throw Error("zero denominator in rational literal '" + text + "'");
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw Error("malformed rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline RatMat identity_matrix(int n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(m[i][j]) && !is_zero(v[j])) out[i] += m[i][j] * v[j];
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat c(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (!is_zero(a[i][l]))
        for (size_t j = 0; j < m; ++j)
          if (!is_zero(b[l][j])) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace posalg
