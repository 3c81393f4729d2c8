#pragma once

#include <string>
#include <vector>

#include "coarse/axioms.hpp"
#include "coarse/coarse_structure.hpp"
#include "coarse/perm_group.hpp"
#include "coarse/stone.hpp"
#include "coarse/tower.hpp"

namespace coarse {

// File formats (all JSON):
//   group: {"name": str, "degree": n, "generators": [[images...], ...]}
//   tower: {"levels": [group, ...], "maps": [{"from": k+1, "to": k,
//           "element_map": [indices...]}, ...]}   (last level = top)
//   coarse exchange: {"size": m, "triples": [[a,b,c], ...] sorted,
//           "labels": [str, ...] optional}
//   tree: {"nodes": ["", "0", ...], "depth_bound": d}

enum class InputKind { Group, Tower, Coarse, Tree, Unknown };
InputKind sniff_kind(const std::string& path);

PermGroup read_group_file(const std::string& path, int max_elements = kDefaultElementBound);
ProfiniteTower read_tower_file(const std::string& path, int max_elements = kDefaultElementBound);
CoarseStructure read_coarse_file(const std::string& path);
BinaryTree read_tree_file(const std::string& path);

std::string group_to_json(const PermGroup& G);
std::string coarse_to_json(const CoarseStructure& M);
std::string tree_to_json(const BinaryTree& T);

void write_text_file(const std::string& path, const std::string& content);

/// Hasse diagram of the order (covering relation only), as Graphviz DOT.
std::string coarse_to_dot(const CoarseStructure& M);

/// JSON array of axiom reports; timings are off by default so re-runs are
/// byte-identical.
std::string reports_to_json(const std::vector<AxiomReport>& reports, bool with_timings = false);

}  // namespace coarse
