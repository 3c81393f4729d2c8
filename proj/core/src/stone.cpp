#include "coarse/stone.hpp"

#include <algorithm>

#include "coarse/error.hpp"

namespace coarse {

bool BinaryTree::has_node(const std::string& s) const {
  return std::binary_search(nodes.begin(), nodes.end(), s);
}

std::vector<std::string> BinaryTree::nodes_at(int depth) const {
  std::vector<std::string> out;
  for (const std::string& s : nodes)
    if (static_cast<int>(s.size()) == depth) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

BinaryTree make_tree(std::vector<std::string> nodes, int depth_bound) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  BinaryTree T{std::move(nodes), depth_bound};
  if (!T.has_node("")) throw StructureError("tree lacks the root");
  for (const std::string& s : T.nodes) {
    if (static_cast<int>(s.size()) > depth_bound)
      throw StructureError("node deeper than the depth bound");
    for (char c : s)
      if (c != '0' && c != '1') throw StructureError("node is not a binary string");
    if (!s.empty() && !T.has_node(s.substr(0, s.size() - 1)))
      throw StructureError("tree is not prefix closed");
    if (static_cast<int>(s.size()) < depth_bound && !T.has_node(s + "0") && !T.has_node(s + "1"))
      throw StructureError("dead end within the depth bound");
  }
  return T;
}

uint64_t FiniteBA::conjunction(const std::string& sigma) const {
  uint64_t mask = full_mask();
  for (size_t i = 0; i < sigma.size(); ++i) {
    const uint64_t g = generators[i];
    mask &= sigma[i] == '1' ? g : (~g & full_mask());
  }
  return mask;
}

std::vector<uint64_t> FiniteBA::enumerate_elements(int max_atoms) const {
  if (atom_count() > max_atoms) throw BoundError("too many atoms to enumerate elements");
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(element_count()));
  for (uint64_t m = 0; m <= full_mask(); ++m) out.push_back(m);
  return out;
}

FiniteBA clopen_algebra(const BinaryTree& T, int depth) {
  if (depth > T.depth_bound) throw BoundError("depth exceeds the tree's bound");
  FiniteBA B;
  B.atoms = T.nodes_at(depth);
  if (B.atoms.size() > 62) throw BoundError("too many atoms");
  B.generators.assign(static_cast<size_t>(depth), 0);
  for (size_t a = 0; a < B.atoms.size(); ++a)
    for (int i = 0; i < depth; ++i)
      if (B.atoms[a][static_cast<size_t>(i)] == '1') B.generators[static_cast<size_t>(i)] |= 1ull << a;
  return B;
}

BinaryTree ba_to_tree(const FiniteBA& B) {
  if (B.atom_count() == 0) throw StructureError("atomless algebra has no tree");
  const int d = static_cast<int>(B.generators.size());
  std::vector<std::string> nodes;
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      if (B.conjunction(s) == 0) continue;
      nodes.push_back(s);
      if (static_cast<int>(s.size()) < d) {
        next.push_back(s + "0");
        next.push_back(s + "1");
      }
    }
    frontier = std::move(next);
  }
  return make_tree(std::move(nodes), d);
}

StoneReport stone_roundtrip(const BinaryTree& T, int depth) {
  StoneReport rep;
  const FiniteBA B = clopen_algebra(T, depth);
  BinaryTree T2{{}, 0};
  try {
    T2 = ba_to_tree(B);
  } catch (const Error& e) {
    rep.ok = false;
    rep.detail = e.what();
    return rep;
  }
  // Tree side: regenerated nodes = original nodes up to the depth.
  std::vector<std::string> expected;
  for (const std::string& s : T.nodes)
    if (static_cast<int>(s.size()) <= depth) expected.push_back(s);
  std::sort(expected.begin(), expected.end());
  if (T2.nodes != expected) {
    rep.ok = false;
    for (const std::string& s : expected)
      if (!T2.has_node(s)) {
        rep.detail = "node lost: \"" + s + "\"";
        return rep;
      }
    for (const std::string& s : T2.nodes)
      if (!std::binary_search(expected.begin(), expected.end(), s)) {
        rep.detail = "node invented: \"" + s + "\"";
        return rep;
      }
  }
  // Algebra side: depth-level conjunctions match the atoms bijectively.
  const FiniteBA B2 = clopen_algebra(T2, depth);
  uint64_t seen = 0;
  for (const std::string& sigma : B2.atoms) {
    const uint64_t r = B.conjunction(sigma);
    if (__builtin_popcountll(r) != 1) {
      rep.ok = false;
      rep.detail = "conjunction of \"" + sigma + "\" is not an atom";
      return rep;
    }
    if (seen & r) {
      rep.ok = false;
      rep.detail = "atom matched twice at \"" + sigma + "\"";
      return rep;
    }
    seen |= r;
  }
  if (seen != B.full_mask()) {
    rep.ok = false;
    rep.detail = "atom matching is not onto";
  }
  return rep;
}

BinaryTree random_tree(int depth, std::mt19937& rng) {
  std::vector<std::string> nodes;
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      nodes.push_back(s);
      if (static_cast<int>(s.size()) == depth) continue;
      switch (rng() % 3) {
        case 0:
          next.push_back(s + "0");
          break;
        case 1:
          next.push_back(s + "1");
          break;
        default:
          next.push_back(s + "0");
          next.push_back(s + "1");
      }
    }
    frontier = std::move(next);
  }
  return make_tree(std::move(nodes), depth);
}

}  // namespace coarse
