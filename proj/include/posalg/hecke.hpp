#pragma once

#include <vector>

#include "posalg/two_algebra.hpp"

namespace posalg {

// One-line permutation with cached reduced length (= inversion count).
struct Permutation {
  std::vector<long> one_line;
  long length = 0;

  long n() const { return static_cast<long>(one_line.size()); }
  static Permutation from(std::vector<long> one_line);
  Permutation inverse() const;
  // left-to-right: (a then b)(i) = b(a(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& o) const { return one_line == o.one_line; }
};

long inversion_count(const std::vector<long>& one_line);

// Basis indexed by all n! permutations ordered by (length, lex one-line);
// structure constants of tau_g tau_h cached as the multiplication tensor.
// Products follow the deformation rule tau_i tau_w = tau_{s_i w} when the
// length goes up, else (q-1) tau_w + q tau_{s_i w}.
struct HeckeAlgebra {
  long n = 0;
  Rational q;
  std::vector<Permutation> basis;       // (length, lex) order, identity first
  StructureTensor mult;                 // in the tau basis
  std::vector<long> inverse_index;      // basis index of g^{-1}
  std::vector<long> length;             // cached l(g)
};

HeckeAlgebra build_hecke(long n, const Rational& q);

// The positive 2-algebra in the stochastic basis tau_bar_g = q^{-l(g)} tau_g:
// diagonal comultiplication, counit identically 1, sharp sends tau_bar_g to
// tau_bar_{g^{-1}}, flat is coefficientwise conjugation.
TwoAlgebra hecke_two_algebra(const HeckeAlgebra& h);

}  // namespace posalg
