#include "coarse/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "coarse/builders.hpp"
#include "coarse/error.hpp"

namespace coarse {

namespace {

// Iterated colour refinement over an arbitrary relational structure.
// Colours are canonical ranks of sorted signatures, so they are invariant
// under isomorphism.
std::vector<int> refine_colors(const RelationalStructure& S, int rounds) {
  std::vector<int> color(static_cast<size_t>(S.domain_size), 0);
  for (int r = 0; r < rounds; ++r) {
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Sig> sig(static_cast<size_t>(S.domain_size));
    for (int a = 0; a < S.domain_size; ++a) sig[static_cast<size_t>(a)].first = color[static_cast<size_t>(a)];
    for (size_t ri = 0; ri < S.relations.size(); ++ri) {
      for (const auto& t : S.relations[ri].tuples) {
        for (size_t p = 0; p < t.size(); ++p) {
          std::vector<int> entry{static_cast<int>(ri), static_cast<int>(p)};
          for (int x : t) entry.push_back(color[static_cast<size_t>(x)]);
          sig[static_cast<size_t>(t[p])].second.push_back(std::move(entry));
        }
      }
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    std::map<Sig, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : rank) v = next++;
    for (int a = 0; a < S.domain_size; ++a) color[static_cast<size_t>(a)] = rank.at(sig[static_cast<size_t>(a)]);
  }
  return color;
}

RelationalStructure coarse_to_relational(const CoarseStructure& M) {
  RelationalStructure S;
  S.domain_size = M.size();
  Relation R{"R", 3, {}};
  R.tuples.reserve(M.triples().size());
  for (const Triple& t : M.triples()) R.tuples.push_back({t[0], t[1], t[2]});
  S.relations.push_back(std::move(R));
  return S;
}

}  // namespace

std::optional<std::vector<int>> struct_iso(const CoarseStructure& M, const CoarseStructure& N) {
  const int n = M.size();
  if (n != N.size() || M.triples().size() != N.triples().size()) return std::nullopt;

  const int rounds = 3;
  const std::vector<int> cm = refine_colors(coarse_to_relational(M), rounds);
  const std::vector<int> cn = refine_colors(coarse_to_relational(N), rounds);
  {
    std::vector<int> hm = cm, hn = cn;
    std::sort(hm.begin(), hm.end());
    std::sort(hn.begin(), hn.end());
    if (hm != hn) return std::nullopt;
  }

  std::vector<int> f(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);

  // Both-direction consistency on the triples whose entries are all mapped
  // and involve the element just assigned.
  auto consistent = [&](int a) {
    for (int x = 0; x <= a; ++x)
      for (int y = 0; y <= a; ++y) {
        if (M.rel(x, y, a) != N.rel(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)], f[static_cast<size_t>(a)]))
          return false;
        if (M.rel(x, a, y) != N.rel(f[static_cast<size_t>(x)], f[static_cast<size_t>(a)], f[static_cast<size_t>(y)]))
          return false;
        if (M.rel(a, x, y) != N.rel(f[static_cast<size_t>(a)], f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
          return false;
      }
    return true;
  };

  auto backtrack = [&](auto&& self, int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<size_t>(b)] || cm[static_cast<size_t>(a)] != cn[static_cast<size_t>(b)]) continue;
      f[static_cast<size_t>(a)] = b;
      used[static_cast<size_t>(b)] = 1;
      if (consistent(a) && self(self, a + 1)) return true;
      used[static_cast<size_t>(b)] = 0;
      f[static_cast<size_t>(a)] = -1;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return f;
  return std::nullopt;
}

namespace {

std::vector<int> small_generating_set(const PermGroup& G) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<size_t>(G.size()), 0);
  auto close = [&]() {
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    std::vector<int> all{0};
    for (size_t i = 0; i < all.size(); ++i)
      for (int g : gens) {
        const int x = G.mul(all[i], g);
        if (!in[static_cast<size_t>(x)]) {
          in[static_cast<size_t>(x)] = 1;
          all.push_back(x);
        }
      }
    return static_cast<int>(all.size());
  };
  int covered = close();
  while (covered < G.size()) {
    for (int x = 1; x < G.size(); ++x)
      if (!in[static_cast<size_t>(x)]) {
        gens.push_back(x);
        break;
      }
    covered = close();
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> group_iso(const PermGroup& G, const PermGroup& H) {
  const int n = G.size();
  if (n != H.size()) return std::nullopt;
  {
    std::vector<int> og(static_cast<size_t>(n)), oh(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      og[static_cast<size_t>(i)] = G.element_order(i);
      oh[static_cast<size_t>(i)] = H.element_order(i);
    }
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return std::nullopt;
  }

  const std::vector<int> gens = small_generating_set(G);

  // Expression of every element as parent * generator, following BFS.
  std::vector<std::pair<int, int>> expr(static_cast<size_t>(n), {-1, -1});
  {
    std::vector<int> order{0};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        const int x = G.mul(order[i], gens[gi]);
        if (!seen[static_cast<size_t>(x)]) {
          seen[static_cast<size_t>(x)] = 1;
          expr[static_cast<size_t>(x)] = {order[i], static_cast<int>(gi)};
          order.push_back(x);
        }
      }
  }

  std::vector<int> image(gens.size(), -1);
  std::vector<int> f(static_cast<size_t>(n), -1);
  auto build_and_check = [&]() -> bool {
    std::fill(f.begin(), f.end(), -1);
    f[0] = 0;
    // Fill in BFS order: every element's parent precedes it.
    std::vector<int> pending{0};
    for (size_t i = 0; i < pending.size(); ++i)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        const int x = G.mul(pending[i], gens[gi]);
        if (f[static_cast<size_t>(x)] < 0) {
          f[static_cast<size_t>(x)] = H.mul(f[static_cast<size_t>(pending[i])], image[gi]);
          pending.push_back(x);
        }
      }
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int v : f) {
      if (v < 0 || used[static_cast<size_t>(v)]) return false;
      used[static_cast<size_t>(v)] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (f[static_cast<size_t>(G.mul(a, b))] !=
            H.mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
          return false;
    return true;
  };

  auto backtrack = [&](auto&& self, size_t gi) -> bool {
    if (gi == gens.size()) return build_and_check();
    const int want = G.element_order(gens[gi]);
    for (int h = 0; h < n; ++h) {
      if (H.element_order(h) != want) continue;
      image[gi] = h;
      if (self(self, gi + 1)) return true;
    }
    image[gi] = -1;
    return false;
  };
  if (backtrack(backtrack, 0)) return f;
  return std::nullopt;
}

KnsReport kns_check(const PermGroup& G, const PermGroup& H, int max_order) {
  KnsReport rep;
  rep.group_witness = group_iso(G, H);
  rep.group_isomorphic = rep.group_witness.has_value();
  const GroupCoarse mg = coarse_of_group(G, max_order);
  const GroupCoarse mh = coarse_of_group(H, max_order);
  rep.coarse_size_g = mg.structure.size();
  rep.coarse_size_h = mh.structure.size();
  rep.coarse_witness = struct_iso(mg.structure, mh.structure);
  rep.coarse_isomorphic = rep.coarse_witness.has_value();
  if (rep.group_isomorphic != rep.coarse_isomorphic) {
    std::ostringstream os;
    os << "isomorphism reduction failed: group(" << G.name() << "," << H.name()
       << ")=" << rep.group_isomorphic << " but coarse sizes " << rep.coarse_size_g << ","
       << rep.coarse_size_h << " give " << rep.coarse_isomorphic;
    throw StructureError(os.str());
  }
  return rep;
}

OrbitStructure orbit_structure(const PermGroup& G, int max_arity, long long max_tuples) {
  OrbitStructure E;
  E.degree = G.degree();
  E.max_arity = max_arity;
  for (int n = 1; n <= max_arity; ++n) E.per_arity.push_back(orbits(G, n, max_tuples));
  return E;
}

RelationalStructure to_relational(const OrbitStructure& E) {
  RelationalStructure S;
  S.domain_size = E.degree;
  for (const TupleOrbits& O : E.per_arity) {
    Relation rel;
    rel.arity = 2 * O.arity;
    {
      std::ostringstream os;
      os << "E_" << O.arity;
      rel.name = os.str();
    }
    for (long long s = 0; s < O.tuple_count(); ++s)
      for (long long t = 0; t < O.tuple_count(); ++t) {
        if (O.orbit_of[static_cast<size_t>(s)] != O.orbit_of[static_cast<size_t>(t)]) continue;
        std::vector<int> pair = unrank_tuple(s, O.degree, O.arity);
        const std::vector<int> right = unrank_tuple(t, O.degree, O.arity);
        pair.insert(pair.end(), right.begin(), right.end());
        rel.tuples.push_back(std::move(pair));
      }
    S.relations.push_back(std::move(rel));
  }
  return S;
}

namespace {

// alpha transports G-orbit labels to H-orbit labels bijectively.
bool orbit_iso_via(const Perm& alpha, const OrbitStructure& EG, const OrbitStructure& EH) {
  for (size_t k = 0; k < EG.per_arity.size(); ++k) {
    const TupleOrbits& og = EG.per_arity[k];
    const TupleOrbits& oh = EH.per_arity[k];
    if (og.orbit_count != oh.orbit_count) return false;
    std::vector<int> to_h(static_cast<size_t>(og.orbit_count), -1);
    std::vector<char> hit(static_cast<size_t>(oh.orbit_count), 0);
    std::vector<int> img(static_cast<size_t>(og.arity));
    for (long long r = 0; r < og.tuple_count(); ++r) {
      const std::vector<int> t = unrank_tuple(r, og.degree, og.arity);
      for (size_t i = 0; i < t.size(); ++i) img[i] = alpha(t[i]);
      const int lg = og.orbit_of[static_cast<size_t>(r)];
      const int lh = oh.orbit_of[static_cast<size_t>(rank_tuple(img, oh.degree))];
      if (to_h[static_cast<size_t>(lg)] < 0) {
        if (hit[static_cast<size_t>(lh)]) return false;
        to_h[static_cast<size_t>(lg)] = lh;
        hit[static_cast<size_t>(lh)] = 1;
      } else if (to_h[static_cast<size_t>(lg)] != lh) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ConjugacyReport conjugacy_check(const PermGroup& G, const PermGroup& H, int max_arity) {
  if (G.degree() != H.degree()) throw StructureError("conjugacy needs equal degrees");
  if (G.degree() > 8) throw BoundError("degree too large for conjugator search");

  const OrbitStructure EG = orbit_structure(G, max_arity);
  const OrbitStructure EH = orbit_structure(H, max_arity);

  std::vector<Perm> hs = H.elements();
  std::sort(hs.begin(), hs.end());

  ConjugacyReport rep;
  std::vector<int> im(static_cast<size_t>(G.degree()));
  std::iota(im.begin(), im.end(), 0);
  do {
    const Perm alpha((std::vector<int>(im)));
    const Perm alpha_inv = alpha.inverse();
    std::vector<Perm> conj;
    conj.reserve(static_cast<size_t>(G.size()));
    for (const Perm& g : G.elements()) conj.push_back(compose(alpha, compose(g, alpha_inv)));
    std::sort(conj.begin(), conj.end());
    const bool conjugates = conj == hs;
    const bool orbit_iso = orbit_iso_via(alpha, EG, EH);
    if (conjugates != orbit_iso) {
      std::ostringstream os;
      os << "per-conjugator verdicts disagree at alpha=" << alpha.cycles()
         << ": conjugation=" << conjugates << " orbit-structure=" << orbit_iso;
      throw StructureError(os.str());
    }
    if (conjugates) {
      rep.conjugate = true;
      rep.alpha = alpha;
      return rep;
    }
  } while (std::next_permutation(im.begin(), im.end()));
  return rep;
}

Fingerprint ef_fingerprint(const RelationalStructure& S, int depth) {
  if (depth > 3) throw BoundError("fingerprint depth is capped at 3");
  const std::vector<int> color = refine_colors(S, depth);
  std::ostringstream os;
  os << "n=" << S.domain_size << ";";
  {
    std::map<int, int> hist;
    for (int c : color) ++hist[c];
    os << "colors=[";
    bool first = true;
    for (const auto& [c, k] : hist) {
      if (!first) os << ',';
      os << c << ':' << k;
      first = false;
    }
    os << "];";
  }
  for (const Relation& rel : S.relations) {
    std::vector<std::vector<int>> types;
    types.reserve(rel.tuples.size());
    for (const auto& t : rel.tuples) {
      std::vector<int> ct;
      ct.reserve(t.size());
      for (int x : t) ct.push_back(color[static_cast<size_t>(x)]);
      types.push_back(std::move(ct));
    }
    std::sort(types.begin(), types.end());
    os << rel.name << "/" << rel.arity << "=[";
    for (size_t i = 0; i < types.size(); ++i) {
      if (i) os << ';';
      for (size_t j = 0; j < types[i].size(); ++j) {
        if (j) os << ',';
        os << types[i][j];
      }
    }
    os << "];";
  }
  return Fingerprint{depth, os.str()};
}

Fingerprint ef_fingerprint(const CoarseStructure& M, int depth) {
  return ef_fingerprint(coarse_to_relational(M), depth);
}

Fingerprint ef_fingerprint(const OrbitStructure& E, int depth) {
  return ef_fingerprint(to_relational(E), depth);
}

}  // namespace coarse
