#pragma once

#include <memory>
#include <vector>

#include "posalg/monoid.hpp"
#include "posalg/two_algebra.hpp"
#include "posalg/verdict.hpp"

namespace posalg {

// Partition of the basis index set into nonempty disjoint covering blocks;
// blocks are sorted internally and ordered by least element.
struct Partition {
  std::vector<std::vector<long>> blocks;
  std::vector<long> block_of;

  long size() const { return static_cast<long>(block_of.size()); }
  long block_count() const { return static_cast<long>(blocks.size()); }

  static Partition from_blocks(long n, std::vector<std::vector<long>> blocks);
  static Partition from_assignment(const std::vector<long>& block_of);
  static Partition singletons(long n);

  bool operator==(const Partition&) const = default;
  std::string to_string() const;
};

// A stable partition of a (semi)group bialgebra: the span of the block sums
// is closed under multiplication, sharp and flat, and carries its own
// two-sided unit. The closure data stores, per block pair, the expansion of
// the block-sum product in block sums.
struct StablePartitionCert {
  Partition partition;
  std::shared_ptr<const TwoAlgebra> ambient;
  std::vector<std::vector<RatVec>> closure;  // closure[i][j][k]
  RatVec span_unit;          // unit of the span, in block-sum coordinates
  long unit_block = -1;      // block containing the ambient unit element,
                             // when the ambient unit is a basis vector
};

// Holds iff every product of two block sums lies in the span of block sums
// and the span is closed under sharp and flat and contains a two-sided unit
// of its own. The certificate stores the expansion coefficients.
struct StabilityResult {
  Verdict verdict;
  StablePartitionCert cert;  // valid when verdict holds
};
StabilityResult is_stable_partition(std::shared_ptr<const TwoAlgebra> ambient,
                                    const Partition& p);

// Integer fast path for linearized (semi)group tables: block-sum products
// are pair counts. Used by the searches; the generic rational path above is
// the independent re-verification route.
bool is_stable_partition_counts(const FiniteMonoid& m,
                                const std::vector<long>& inv,
                                const Partition& p);

// Blocks HgH; H must be closed under product and inverse.
Partition double_coset_partition(const FiniteMonoid& g,
                                 const std::vector<long>& subgroup);

// Orbit partition of the subgroup generated by the given automorphisms;
// each generator is verified to be an automorphism of the table.
Partition automorphism_orbit_partition(
    const FiniteMonoid& g, const std::vector<std::vector<long>>& generators);

}  // namespace posalg
