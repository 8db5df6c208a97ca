#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catena/elemset.hpp"
#include "catena/lattice.hpp"

namespace catena {

inline constexpr uint32_t kDefaultGroupBound = 48;

using Perm = std::vector<uint8_t>;  // images, 0-indexed

/// Finite permutation group with cached element list and Cayley products.
struct FiniteGroup {
  uint32_t points = 0;
  std::vector<Perm> elements;          // sorted, identity first
  std::vector<uint16_t> prod;          // order*order
  std::vector<uint16_t> inverse;
  std::vector<uint16_t> generator_ids;

  static FiniteGroup from_generators(uint32_t points, const std::vector<Perm>& gens,
                                     uint32_t bound = kDefaultGroupBound);

  uint32_t order() const { return static_cast<uint32_t>(elements.size()); }
  uint16_t mul(uint32_t a, uint32_t b) const { return prod[a * order() + b]; }
  uint16_t inv(uint32_t a) const { return inverse[a]; }
  uint32_t element_order(uint32_t a) const;
  bool is_abelian() const;
};

// constructive presentations
FiniteGroup cyclic_group(uint32_t n);
FiniteGroup abelian_group(const std::vector<uint32_t>& factors);
FiniteGroup dihedral_group(uint32_t n);        // order 2n, n >= 3
FiniteGroup dicyclic_group(uint32_t q);        // order 4q, q >= 2; q=2 is Q8
/// Z_m x| Z_n where the Z_n generator acts by a -> a^k (k^n = 1 mod m).
FiniteGroup semidirect_cyclic(uint32_t m, uint32_t n, uint32_t k);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup symmetric_4();
FiniteGroup alternating_4();
FiniteGroup special_linear_2_3();

/// All subgroups as element-index sets, canonically sorted.
std::vector<ElemSet> subgroups(const FiniteGroup& G);

struct SubgroupLattice {
  FiniteLattice lattice;
  std::vector<ElemSet> groups;  // aligned with lattice indices
};
SubgroupLattice subgroup_lattice(const FiniteGroup& G,
                                 uint32_t bound = kDefaultGroupBound);

bool is_normal(const FiniteGroup& G, const ElemSet& H);
bool quotient_is_cyclic(const FiniteGroup& G, const ElemSet& H, const ElemSet& K);

/// Chain of subgroups, each normal in G, descending with cyclic factors.
bool is_supersolvable_group(const FiniteGroup& G,
                            uint32_t bound = kDefaultGroupBound);

struct Prop3814Report {
  bool group_supersolvable = false;
  bool lattice_graded = false;
  bool iwasawa_ok = false;             // the two flags agree
  std::optional<bool> lattice_supersolvable;  // when within the size cap
  bool lattice_equiv_ok = true;        // group ss == lattice ss when computed
  int lattice_size = 0;
  int lattice_length = 0;
};

Prop3814Report check_prop_3814(const FiniteGroup& G,
                               uint32_t group_bound = kDefaultGroupBound,
                               int supersolvable_cap = 64);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Named permutation presentations of the groups of order <= 24 (every
/// order covered; all classes at the orders that matter for the checks).
std::vector<NamedGroup> group_catalog();

}  // namespace catena
