#pragma once

#include <string>

#include "posalg/search.hpp"
#include "posalg/two_algebra.hpp"
#include "posalg/verdict.hpp"

namespace posalg {

// Canonical 2ALG text (JSON): keys in the fixed order
// dim, labels?, mult, unit, comult, counit, invol, coinvol; tensors as
// [i, j, k, "p/q"] rows in (i, j, k) order; rationals serialized in lowest
// terms. parse(emit(a)) == a entrywise; the schema is strict and unknown
// keys are rejected with the offending field named.
std::string emit_2alg(const TwoAlgebra& a);
TwoAlgebra parse_2alg(const std::string& text);

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// report fragments (JSON text) used by the CLI
std::string verdict_json(const std::string& check, const Verdict& v);
std::string witness_json(const DilationWitness& w);
std::string coarse_witness_json(const CoarseGrainWitness& w);

// Hecke structure-constant cache files
std::string emit_tensor(const StructureTensor& t);
StructureTensor parse_tensor(const std::string& text);

}  // namespace posalg
