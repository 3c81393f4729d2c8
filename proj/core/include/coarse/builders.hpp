#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarse/coarse_structure.hpp"
#include "coarse/perm_group.hpp"
#include "coarse/rel_structure.hpp"
#include "coarse/tower.hpp"

namespace coarse {

/// Coarse structure of a finite permutation group, with the meaning of
/// every element kept alongside.
struct GroupCoarse {
  CoarseStructure structure;
  PermGroup group;
  std::vector<Subgroup> subgroups;              // all_subgroups order
  std::vector<std::vector<int>> coset_members;  // per element, sorted G-indices
  std::vector<int> coset_subgroup;              // per element, subgroup index
  std::string provenance;

  /// CosetId of the element whose member set is exactly `members`.
  int element_of(const std::vector<int>& members) const;  // -1 if absent
  /// Elements containing a given group element (the classical filter).
  std::vector<int> elements_containing(int g) const;
};

/// Domain: all distinct subsets of G that are left cosets of some
/// subgroup, sorted by (size, members). Triple (A,B,C) present iff the
/// setwise product AB is contained in C.
GroupCoarse coarse_of_group(const PermGroup& G,
                            int max_order = kDefaultSubgroupOrderBound);

struct TowerCoarse {
  GroupCoarse coarse;             // of the top level
  std::vector<int> normal_chain;  // CosetIds of ker(G_top -> G_k), k = 0..top
};

/// Coarse structure of the top level, with the kernels of the composite
/// maps marked as a descending normal chain (last entry trivial).
TowerCoarse coarse_of_tower(const ProfiniteTower& T,
                            int max_order = kDefaultSubgroupOrderBound);

/// One relation per n-orbit for each n <= max_arity; relation P_n_i holds
/// on the tuples of the i-th n-orbit.
RelationalStructure canonical_structure(const PermGroup& G, int max_arity,
                                        long long max_tuples = 1 << 20);

/// True when every generator of G maps every relation of N onto itself.
bool group_preserves_structure(const PermGroup& G, const RelationalStructure& N);

}  // namespace coarse
