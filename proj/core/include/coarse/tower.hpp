#pragma once

#include <string>
#include <vector>

#include "coarse/perm_group.hpp"

namespace coarse {

/// A finite tower G_0 <- G_1 <- ... <- G_K of surjections, each map stored
/// as a full element-index table: maps[k][i] = image in levels[k] of
/// element i of levels[k+1].
struct ProfiniteTower {
  std::vector<PermGroup> levels;
  std::vector<std::vector<int>> maps;

  int top() const { return static_cast<int>(levels.size()) - 1; }
};

struct TowerReport {
  bool valid = true;
  std::string message;        // empty when valid
  int level = -1;             // index k of the offending map, when invalid
  std::pair<int, int> witness{-1, -1};  // offending element pair, when relevant
};

/// Checks every map is a surjective homomorphism sending identity to
/// identity. Violations are reported, not thrown.
TowerReport validate_tower(const ProfiniteTower& T);

/// Composite map levels[top] -> levels[k] (identity when k == top).
std::vector<int> composite_map(const ProfiniteTower& T, int k);

}  // namespace coarse
