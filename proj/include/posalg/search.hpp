#pragma once

#include <optional>

#include "posalg/induced.hpp"
#include "posalg/lambda.hpp"
#include "posalg/monoid.hpp"
#include "posalg/partition.hpp"
#include "posalg/semigroup_algebra.hpp"

namespace posalg {

struct AmbientContext {
  CatalogMember member;
  std::shared_ptr<const TwoAlgebra> bialgebra;
  bool weakened = false;
};
AmbientContext make_ambient(const CatalogMember& m);

// All set partitions of {0..n-1} with at most max_blocks blocks, in
// restricted-growth-string order. Brute-force oracle side of the
// enumerator equivalence tests.
std::vector<Partition> all_set_partitions(long n, long max_blocks);

// Stable partitions with exactly max_blocks blocks in restricted-growth
// order, plus the all-singletons partition (the bialgebra itself), which is
// always produced. Exhaustive block-by-block enumeration with pruning on
// completed blocks for |M| <= 12 (two-block targets are enumerated by
// subsets up to |M| <= 16); larger ambients fall back to the structured
// generators: subgroup double cosets and automorphism-orbit partitions.
std::vector<StablePartitionCert> enumerate_stable_partitions(
    const AmbientContext& ambient, long max_blocks);

// Basis relabeling making `from` entrywise equal to `to`, unit pinned;
// canonical quasi-character screening for bicommutative inputs, bounded
// backtracking otherwise (dim <= 6).
std::optional<std::vector<long>> find_isomorphism(const TwoAlgebra& from,
                                                  const TwoAlgebra& to);

struct DilationWitness {
  std::string ambient_name;
  std::string ambient_spec;
  bool ambient_is_group = true;
  Partition partition;
  RatVec normalization;    // per-block scalar (the block size)
  std::vector<long> iso;   // block index -> target basis index
};

struct StrictSearchResult {
  std::vector<DilationWitness> witnesses;
  // members whose partition stream came from the structured generators
  // only; an empty witness list is exhaustive-within-bounds exactly when
  // this is empty too
  std::vector<std::string> structured_only;
};

// Strict-dilation search over the catalog members of size <= max_order:
// enumerate stable partitions with block count = dim(target), build the
// induced 2-algebra, test isomorphism, and re-verify every returned witness
// from scratch (is_strict_subobject plus entrywise equality). An empty list
// means no witness within bounds, never nonexistence.
StrictSearchResult strict_dilation_search(const TwoAlgebra& target,
                                          long max_order, long jobs = 0);

struct CoarseGrainWitness {
  std::string group_name;
  std::string group_spec;
  Partition partition;                    // column partition of the group
  std::vector<std::string> characters;    // selected character labels
  QuasiCharacterMatrix matrix;            // reproduced quasi-character matrix
  RatMat embedding;                       // T: target -> C[G], block sums
  StructureTensor coaction;               // rho on C[G]
};

// Searches abelian groups of order <= max_order for a column partition and
// character selection whose block averages reproduce the target
// quasi-character matrix exactly; a found witness is converted into
// coaction data and certified by verify_nonstrict_witness before being
// returned.
std::optional<CoarseGrainWitness> coarse_grain_search(const TwoAlgebra& target,
                                                      long max_order);
std::optional<CoarseGrainWitness> coarse_grain_search_lambda(
    const Rational& lambda, long max_order);

struct CensusRow {
  Rational lambda;
  bool predicate_applicable = false;  // lambda > 0
  StrictDilationPrediction prediction;
  std::vector<DilationWitness> strict_group;
  std::vector<DilationWitness> strict_semigroup;
  std::optional<CoarseGrainWitness> nonstrict;
};

struct CensusReport {
  long max_order = 0;
  std::vector<CensusRow> rows;  // sorted by lambda
  std::vector<std::string> discrepancies;
};

// Harvests every A_lambda realizable from two-block stable partitions of
// catalog members of size <= max_order, re-verifies each strict witness,
// runs the nonstrict coarse-grain search per lambda, cross-tabulates
// against the strict-dilation predicate, and reports discrepancies instead
// of resolving them.
CensusReport lambda_census(long max_order, long jobs = 0);

}  // namespace posalg
