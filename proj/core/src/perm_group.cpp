#include "coarse/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "coarse/error.hpp"

namespace coarse {

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::element_order(int i) const {
  int k = 1;
  int x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

void PermGroup::build_tables() {
  const int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) index_[elements_[static_cast<size_t>(i)]] = i;
  mul_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Perm p = compose(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]);
      auto it = index_.find(p);
      if (it == index_.end()) throw StructureError("element set not closed under composition");
      mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
      if (it->second == 0) inv_[static_cast<size_t>(a)] = b;
    }
  }
  for (int a = 0; a < n; ++a)
    if (inv_[static_cast<size_t>(a)] < 0) throw StructureError("element without inverse");
}

PermGroup close_generators(int degree, std::vector<Perm> gens, std::string name,
                           int max_elements) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw StructureError("generator degree mismatch");

  PermGroup G;
  G.degree_ = degree;
  G.name_ = std::move(name);
  G.generators_ = gens;

  G.elements_.push_back(Perm::identity(degree));
  G.index_[G.elements_[0]] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(G.elements_[static_cast<size_t>(i)], g);
      if (G.index_.find(next) != G.index_.end()) continue;
      if (static_cast<int>(G.elements_.size()) >= max_elements)
        throw BoundError("group too large");
      const int id = static_cast<int>(G.elements_.size());
      G.index_[next] = id;
      G.elements_.push_back(std::move(next));
      queue.push_back(id);
    }
  }
  G.build_tables();
  return G;
}

PermGroup group_from_elements(int degree, std::vector<Perm> elems, std::string name) {
  PermGroup G;
  G.degree_ = degree;
  G.name_ = std::move(name);
  auto id_it = std::find_if(elems.begin(), elems.end(),
                            [](const Perm& p) { return p.is_identity(); });
  if (id_it == elems.end()) throw StructureError("element set lacks the identity");
  std::rotate(elems.begin(), id_it, id_it + 1);
  G.elements_ = std::move(elems);
  G.generators_ = G.elements_;
  G.build_tables();
  return G;
}

bool Subgroup::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Subgroup make_subgroup(const PermGroup& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup U{std::move(members)};
  if (!U.contains(G.identity_index())) throw StructureError("subgroup lacks identity");
  for (int a : U.members) {
    if (!U.contains(G.inv(a))) throw StructureError("subgroup not closed under inverse");
    for (int b : U.members)
      if (!U.contains(G.mul(a, b))) throw StructureError("subgroup not closed under product");
  }
  return U;
}

namespace {

// Closure of a subset inside G, as a sorted index list.
std::vector<int> close_subset(const PermGroup& G, std::vector<int> seed) {
  std::vector<char> in(static_cast<size_t>(G.size()), 0);
  std::deque<int> queue;
  auto add = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  add(G.identity_index());
  for (int s : seed) add(s);
  std::vector<int> all;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    all.push_back(a);
    add(G.inv(a));
    for (size_t j = 0; j < all.size(); ++j) {
      add(G.mul(a, all[j]));
      add(G.mul(all[j], a));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const PermGroup& G, int max_order) {
  if (G.size() > max_order) throw BoundError("group order exceeds subgroup enumeration bound");

  std::vector<std::vector<int>> found;
  found.push_back({G.identity_index()});
  // Cyclic extension: grow each known subgroup by one extra generator.
  for (size_t i = 0; i < found.size(); ++i) {
    const std::vector<int> base = found[i];
    for (int g = 1; g < G.size(); ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<int> seed = base;
      seed.push_back(g);
      std::vector<int> closed = close_subset(G, std::move(seed));
      if (std::find(found.begin(), found.end(), closed) == found.end())
        found.push_back(std::move(closed));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{std::move(m)});
  return out;
}

std::vector<std::vector<int>> cosets(const PermGroup& G, const Subgroup& U, Side side) {
  std::vector<char> covered(static_cast<size_t>(G.size()), 0);
  std::vector<std::vector<int>> cells;
  for (int a = 0; a < G.size(); ++a) {
    if (covered[static_cast<size_t>(a)]) continue;
    std::vector<int> cell;
    cell.reserve(U.members.size());
    for (int u : U.members)
      cell.push_back(side == Side::Left ? G.mul(a, u) : G.mul(u, a));
    std::sort(cell.begin(), cell.end());
    for (int x : cell) covered[static_cast<size_t>(x)] = 1;
    cells.push_back(std::move(cell));
  }
  return cells;
}

Subgroup pointwise_stabilizer(const PermGroup& G, const std::vector<int>& points) {
  std::vector<int> members;
  for (int i = 0; i < G.size(); ++i) {
    const Perm& p = G.element(i);
    bool fixes = true;
    for (int x : points)
      if (p(x) != x) {
        fixes = false;
        break;
      }
    if (fixes) members.push_back(i);
  }
  return Subgroup{std::move(members)};
}

long long rank_tuple(const std::vector<int>& t, int degree) {
  long long r = 0;
  for (int x : t) r = r * degree + x;
  return r;
}

std::vector<int> unrank_tuple(long long r, int degree, int arity) {
  std::vector<int> t(static_cast<size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<size_t>(i)] = static_cast<int>(r % degree);
    r /= degree;
  }
  return t;
}

TupleOrbits orbits(const PermGroup& G, int arity, long long max_tuples) {
  if (arity < 1) throw BoundError("arity must be >= 1");
  long long total = 1;
  for (int i = 0; i < arity; ++i) {
    total *= G.degree();
    if (total > max_tuples) throw BoundError("tuple space exceeds bound");
  }
  TupleOrbits O;
  O.degree = G.degree();
  O.arity = arity;
  O.orbit_of.assign(static_cast<size_t>(total), -1);
  for (long long r = 0; r < total; ++r) {
    if (O.orbit_of[static_cast<size_t>(r)] >= 0) continue;
    const int label = O.orbit_count++;
    O.representatives.push_back(unrank_tuple(r, O.degree, arity));
    const std::vector<int> rep = O.representatives.back();
    std::vector<int> image(static_cast<size_t>(arity));
    for (const Perm& g : G.elements()) {
      for (int i = 0; i < arity; ++i) image[static_cast<size_t>(i)] = g(rep[static_cast<size_t>(i)]);
      O.orbit_of[static_cast<size_t>(rank_tuple(image, O.degree))] = label;
    }
  }
  return O;
}

}  // namespace coarse
