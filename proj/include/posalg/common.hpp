#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace posalg {

// Thrown for violated preconditions, size caps and malformed input.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors(long m) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long ipow(long base, long exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace posalg
