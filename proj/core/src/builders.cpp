#include "coarse/builders.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

int GroupCoarse::element_of(const std::vector<int>& members) const {
  for (int i = 0; i < structure.size(); ++i)
    if (coset_members[static_cast<size_t>(i)] == members) return i;
  return -1;
}

std::vector<int> GroupCoarse::elements_containing(int g) const {
  std::vector<int> out;
  for (int i = 0; i < structure.size(); ++i) {
    const auto& m = coset_members[static_cast<size_t>(i)];
    if (std::binary_search(m.begin(), m.end(), g)) out.push_back(i);
  }
  return out;
}

GroupCoarse coarse_of_group(const PermGroup& G, int max_order) {
  const std::vector<Subgroup> subs = all_subgroups(G, max_order);

  // Distinct coset sets. A set is a left coset of exactly one subgroup,
  // so the map to its subgroup is well defined; still dedupe by set.
  std::map<std::vector<int>, int> owner;
  for (size_t si = 0; si < subs.size(); ++si)
    for (auto& cell : cosets(G, subs[si], Side::Left)) {
      auto [it, inserted] = owner.emplace(std::move(cell), static_cast<int>(si));
      if (!inserted && it->second != static_cast<int>(si))
        throw StructureError("coset set owned by two subgroups");
    }

  std::vector<std::vector<int>> domain;
  domain.reserve(owner.size());
  for (auto& [cell, si] : owner) domain.push_back(cell);
  std::sort(domain.begin(), domain.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  const int n = static_cast<int>(domain.size());
  std::vector<uint64_t> mask(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int g : domain[static_cast<size_t>(i)]) mask[static_cast<size_t>(i)] |= 1ull << g;

  std::vector<Triple> triples;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      uint64_t prod = 0;
      for (int x : domain[static_cast<size_t>(a)])
        for (int y : domain[static_cast<size_t>(b)]) prod |= 1ull << G.mul(x, y);
      for (int c = 0; c < n; ++c)
        if ((prod & ~mask[static_cast<size_t>(c)]) == 0) triples.push_back({a, b, c});
    }

  std::vector<std::string> labels;
  std::vector<int> coset_subgroup(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int si = owner.at(domain[static_cast<size_t>(i)]);
    coset_subgroup[static_cast<size_t>(i)] = si;
    std::ostringstream os;
    os << "coset:subgroup=" << si << ",rep="
       << G.element(domain[static_cast<size_t>(i)].front()).cycles();
    labels.push_back(os.str());
  }

  GroupCoarse out{CoarseStructure(n, std::move(triples), std::move(labels)),
                  G,
                  subs,
                  std::move(domain),
                  std::move(coset_subgroup),
                  G.name()};
  return out;
}

TowerCoarse coarse_of_tower(const ProfiniteTower& T, int max_order) {
  const TowerReport rep = validate_tower(T);
  if (!rep.valid) throw StructureError("invalid tower: " + rep.message);
  const PermGroup& top = T.levels.back();
  TowerCoarse out{coarse_of_group(top, max_order), {}};
  for (int k = 0; k <= T.top(); ++k) {
    const std::vector<int> f = composite_map(T, k);
    std::vector<int> kernel;
    for (int i = 0; i < top.size(); ++i)
      if (f[static_cast<size_t>(i)] == T.levels[static_cast<size_t>(k)].identity_index())
        kernel.push_back(i);
    const int id = out.coarse.element_of(kernel);
    if (id < 0) throw StructureError("kernel not present in coarse domain");
    out.normal_chain.push_back(id);
  }
  return out;
}

RelationalStructure canonical_structure(const PermGroup& G, int max_arity,
                                        long long max_tuples) {
  RelationalStructure N;
  N.domain_size = G.degree();
  for (int arity = 1; arity <= max_arity; ++arity) {
    const TupleOrbits O = orbits(G, arity, max_tuples);
    std::vector<Relation> rels(static_cast<size_t>(O.orbit_count));
    for (int i = 0; i < O.orbit_count; ++i) {
      std::ostringstream os;
      os << "P_" << arity << "_" << i;
      rels[static_cast<size_t>(i)].name = os.str();
      rels[static_cast<size_t>(i)].arity = arity;
    }
    for (long long r = 0; r < O.tuple_count(); ++r)
      rels[static_cast<size_t>(O.orbit_of[static_cast<size_t>(r)])].tuples.push_back(
          unrank_tuple(r, O.degree, arity));
    for (auto& rel : rels) N.relations.push_back(std::move(rel));
  }
  return N;
}

bool group_preserves_structure(const PermGroup& G, const RelationalStructure& N) {
  for (const Perm& g : G.generators())
    for (const Relation& rel : N.relations) {
      for (const auto& t : rel.tuples) {
        std::vector<int> img(t.size());
        for (size_t i = 0; i < t.size(); ++i) img[i] = g(t[i]);
        if (!std::binary_search(rel.tuples.begin(), rel.tuples.end(), img)) return false;
      }
    }
  return true;
}

}  // namespace coarse
