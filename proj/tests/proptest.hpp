#pragma once

#include <cstdlib>
#include <random>

// Shared RNG for property-style tests. Deterministic by default; the
// POSALG_TEST_SEED environment variable reseeds a run.
inline std::mt19937_64& test_rng() {
  static std::mt19937_64 rng = [] {
    const char* seed = std::getenv("POSALG_TEST_SEED");
    return std::mt19937_64(seed ? std::strtoull(seed, nullptr, 10)
                                : 0xC0FFEEULL);
  }();
  return rng;
}

inline long rand_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(test_rng());
}
