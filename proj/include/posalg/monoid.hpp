#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posalg/common.hpp"
#include "posalg/verdict.hpp"

namespace posalg {

// Finite multiplication table. Products compose left to right:
// table[a][b] is "first a, then b" wherever elements act as maps.
struct FiniteMonoid {
  long size = 0;
  std::vector<std::vector<long>> table;
  std::optional<long> unit;
  std::optional<long> zero;
  std::vector<std::string> labels;

  long mul(long a, long b) const { return table[a][b]; }

  // Associativity is checked here, O(n^3); unit/zero claims are verified.
  static FiniteMonoid from_table(std::vector<std::vector<long>> table,
                                 std::vector<std::string> labels = {});

  std::optional<long> find_unit() const;
  std::optional<long> find_zero() const;
  bool is_group() const;
};

struct InverseSemigroup {
  FiniteMonoid base;
  std::vector<long> inv;

  long size() const { return base.size; }
  bool unital() const { return base.unit.has_value(); }

  // Verifies inv(inv a) = a, (ab)* = b* a*, a inv(a) a = a and commuting
  // idempotents on construction.
  static InverseSemigroup from(FiniteMonoid base, std::vector<long> inv);
};

struct GroupSpec {
  enum class Kind { Cyclic, Abelian, Symmetric, DirectProduct, Table };
  Kind kind = Kind::Cyclic;
  std::vector<long> parameters;          // cyclic m; abelian invariant factors
  std::vector<GroupSpec> factors;        // direct products
  std::string table_name;                // named table catalog entries
  std::vector<std::vector<long>> table;  // explicit tables

  std::string to_string() const;
};

inline constexpr long kGroupSizeCap = 5040;

FiniteMonoid build_group(const GroupSpec& spec);

// Named table groups for the catalog: dihedral_group(n) has order 2n;
// quaternion_group() is Q8; alternating_group(4).
GroupSpec cyclic_spec(long m);
GroupSpec abelian_spec(std::vector<long> factors);
GroupSpec symmetric_spec(long n);
GroupSpec dihedral_spec(long n);
GroupSpec quaternion_spec();
GroupSpec alternating4_spec();

// Holds returns the inverse map in the verdict notes-free payload below;
// Fails carries an element with zero or two generalized inverses, or a pair
// of non-commuting idempotents.
struct InverseCheck {
  Verdict verdict;
  std::vector<long> inv;  // valid when verdict holds
};
InverseCheck is_inverse(const FiniteMonoid& m);

// Treats a group table as an inverse semigroup.
InverseSemigroup group_as_inverse(const FiniteMonoid& g);

// Partial bijections of an n-element set, empty map as zero, identity as
// unit; n <= 4.
InverseSemigroup symmetric_inverse_semigroup(long n);

// n^2 matrix units plus zero: e_ij e_kl = e_il when j = k, else 0.
InverseSemigroup matrix_unit_semigroup(long n);

// All subgroups of a group table, as sorted index sets, deterministic order.
std::vector<std::vector<long>> subgroups(const FiniteMonoid& g);

// A generating set for the automorphism group of the table.
std::vector<std::vector<long>> automorphism_generators(const FiniteMonoid& g);

struct CatalogMember {
  std::string name;
  bool is_group = true;
  std::optional<GroupSpec> spec;  // groups only
  InverseSemigroup semigroup;
};

// All abelian groups of order <= max_order (invariant-factor form) plus the
// stock nonabelian groups up to order 16 (S3, D4, Q8, D5, A4, D6, D7, S4,
// D8) within the bound.
std::vector<CatalogMember> group_catalog(long max_order);

// I_n and I1_n for n <= 3.
std::vector<CatalogMember> semigroup_catalog();

// group_catalog + semigroup_catalog, members sorted by (size, name).
std::vector<CatalogMember> full_catalog(long max_group_order);

}  // namespace posalg
