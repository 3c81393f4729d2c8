#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace coarse {

/// A prefix-closed set of binary strings with no dead ends strictly above
/// the depth bound: every node shorter than depth_bound has a child.
struct BinaryTree {
  std::vector<std::string> nodes;  // sorted; contains ""
  int depth_bound = 0;

  bool has_node(const std::string& s) const;
  std::vector<std::string> nodes_at(int depth) const;  // lexicographic
};

/// Validates and canonicalizes (sorts) the node set.
BinaryTree make_tree(std::vector<std::string> nodes, int depth_bound);

/// A finite Boolean algebra presented by its atoms plus a designated
/// generator sequence, each generator a subset of the atoms (bit i of a
/// mask selects atoms[i]). Elements are all 2^n atom subsets; they are
/// evaluated through the masks rather than enumerated.
struct FiniteBA {
  std::vector<std::string> atoms;
  std::vector<uint64_t> generators;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  unsigned long long element_count() const { return 1ull << atoms.size(); }
  uint64_t full_mask() const { return atoms.empty() ? 0 : ~0ull >> (64 - atoms.size()); }

  /// The conjunction of literals selected by the bit string sigma:
  /// literal i is generators[i] when sigma(i)='1', its complement otherwise.
  uint64_t conjunction(const std::string& sigma) const;

  /// All elements as atom masks; guarded by max_atoms.
  std::vector<uint64_t> enumerate_elements(int max_atoms = 16) const;
};

/// Atoms = the depth-level nodes of T; generator i selects the atoms whose
/// i-th bit is 1 (the level convention used to regenerate trees).
FiniteBA clopen_algebra(const BinaryTree& T, int depth);

/// Nodes sigma with a nonzero conjunction of literals, up to the length of
/// the generator list. Throws StructureError on an atomless algebra.
BinaryTree ba_to_tree(const FiniteBA& B);

struct StoneReport {
  bool ok = true;
  std::string detail;  // counterexample node/element when !ok
};

/// Round trip both ways: the tree regenerated from clopen_algebra(T,depth)
/// must equal T up to that depth, and the clopen algebra of that tree must
/// be isomorphic to the original via atom matching.
StoneReport stone_roundtrip(const BinaryTree& T, int depth);

/// Uniformly pruned dead-end-free tree of the given depth. Uses the raw
/// engine (not a distribution) so output is identical across platforms.
BinaryTree random_tree(int depth, std::mt19937& rng);

}  // namespace coarse
