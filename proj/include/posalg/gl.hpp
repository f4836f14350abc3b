#pragma once

#include "posalg/hecke.hpp"
#include "posalg/monoid.hpp"
#include "posalg/partition.hpp"

namespace posalg {

// GL_n(F_p) as an explicit element list and multiplication table; identity
// is element 0. Prime fields only: the dilation claim is witnessed at
// q = p, and the field-table hook for p^m is an extension point.
struct FiniteFieldGroup {
  long n = 0;
  long p = 0;
  std::vector<std::vector<long>> elements;  // row-major n x n entries
  FiniteMonoid monoid;
  std::vector<long> borel;  // indices of invertible upper-triangular matrices
};

inline constexpr long kGlOrderCap = 10000;

FiniteFieldGroup build_gl(long n, long p);

// Partition of G into double cosets BgB of the Borel subgroup of upper
// triangular matrices; the block count equals n! (verified, not assumed).
Partition borel_double_cosets(const FiniteFieldGroup& g);

// The permutation w with g in BwB, read from the rank pattern of lower-left
// submatrices; canonical and base-field independent.
std::vector<long> bruhat_cell(const FiniteFieldGroup& g, long element);

// Builds the induced 2-algebra of the Borel double-coset partition, matches
// blocks to permutations by Bruhat cell, and compares every structure
// constant with the Hecke algebra H_n(p) in the stochastic basis. Holds
// certifies a strict dilation of H_n(p).
struct IwahoriReport {
  Verdict verdict;
  long n = 0;
  long p = 0;
  long identities_checked = 0;            // dim^3 tensor identities per side
  std::vector<long> block_sizes;          // by Hecke basis order
  std::vector<std::string> block_labels;  // permutation words
};
IwahoriReport iwahori_check(long n, long p);

}  // namespace posalg
