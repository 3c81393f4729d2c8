#include "coarse/filters.hpp"

#include <algorithm>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

bool is_full_filter(const CoarseStructure& M, const Bits& members, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (members.none()) return fail("empty");
  for (size_t a = members.find_first(); a != Bits::npos; a = members.find_next(a)) {
    const Bits& up = M.up_set(static_cast<int>(a));
    if ((up & ~members).any() || !M.leq_defined(static_cast<int>(a)))
      return fail("not upward closed");
  }
  for (size_t b = members.find_first(); b != Bits::npos; b = members.find_next(b))
    for (size_t c = members.find_first(); c != Bits::npos; c = members.find_next(c)) {
      bool ok = false;
      for (size_t a = members.find_first(); a != Bits::npos; a = members.find_next(a))
        if (M.leq(static_cast<int>(a), static_cast<int>(b)) &&
            M.leq(static_cast<int>(a), static_cast<int>(c))) {
          ok = true;
          break;
        }
      if (!ok) return fail("not downward directed");
    }
  for (int U : M.star_subgroups()) {
    int nl = 0, nr = 0;
    for (int A : M.lc_list(U)) nl += members.test(static_cast<size_t>(A));
    for (int A : M.rc_list(U)) nr += members.test(static_cast<size_t>(A));
    if (nl != 1 || nr != 1)
      return fail("does not meet every coset family exactly once");
  }
  return true;
}

std::vector<FullFilter> full_filters(const CoarseStructure& M) {
  const int v0 = M.minimum_subgroup();
  if (v0 < 0) throw StructureError("no minimum subgroup");
  std::vector<FullFilter> out;
  for (int C : M.lc_list(v0)) {
    Bits cand = M.up_set(C);
    if (is_full_filter(M, cand)) {
      FullFilter x{std::move(cand)};
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
  }
  return out;
}

FullFilter filter_product(const CoarseStructure& M, const FullFilter& x, const FullFilter& y) {
  Bits prod(static_cast<size_t>(M.size()));
  for (size_t a = x.members.find_first(); a != Bits::npos; a = x.members.find_next(a))
    for (size_t b = y.members.find_first(); b != Bits::npos; b = y.members.find_next(b)) {
      auto [lo, hi] = M.targets(static_cast<int>(a), static_cast<int>(b));
      for (const Triple* p = lo; p != hi; ++p) prod.set(static_cast<size_t>((*p)[2]));
    }
  std::string why;
  if (!is_full_filter(M, prod, &why))
    throw StructureError("filter product is not a full filter: " + why);
  return FullFilter{std::move(prod)};
}

FullFilter filter_inverse(const CoarseStructure& M, const FullFilter& x) {
  Bits inv(static_cast<size_t>(M.size()));
  for (size_t a = x.members.find_first(); a != Bits::npos; a = x.members.find_next(a))
    inv.set(static_cast<size_t>(M.diamond(static_cast<int>(a))));
  std::string why;
  if (!is_full_filter(M, inv, &why))
    throw StructureError("filter inverse is not a full filter: " + why);
  return FullFilter{std::move(inv)};
}

FullFilter filter_neutral(const CoarseStructure& M) {
  Bits n(static_cast<size_t>(M.size()));
  for (int U : M.star_subgroups()) n |= M.up_set(U);
  std::string why;
  if (!is_full_filter(M, n, &why))
    throw StructureError("subgroup filter is not a full filter: " + why);
  return FullFilter{std::move(n)};
}

int FilterGroup::index_of(const FullFilter& x) const {
  for (int i = 0; i < size(); ++i)
    if (elements[static_cast<size_t>(i)] == x) return i;
  return -1;
}

FilterGroup filter_group(const CoarseStructure& M) {
  FilterGroup F;
  F.elements = full_filters(M);
  const int n = F.size();
  F.table.domain.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) F.table.domain[static_cast<size_t>(i)] = i;
  F.table.identity = F.index_of(filter_neutral(M));
  if (F.table.identity < 0) throw StructureError("neutral filter missing from enumeration");
  F.table.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  F.table.inv.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    F.table.inv[static_cast<size_t>(i)] =
        F.index_of(filter_inverse(M, F.elements[static_cast<size_t>(i)]));
    if (F.table.inv[static_cast<size_t>(i)] < 0)
      throw StructureError("filter inverse missing from enumeration");
    for (int j = 0; j < n; ++j) {
      const int k = F.index_of(
          filter_product(M, F.elements[static_cast<size_t>(i)], F.elements[static_cast<size_t>(j)]));
      if (k < 0) throw StructureError("filter product missing from enumeration");
      F.table.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
  }
  // Exhaustive check of associativity (and the other laws) on the table.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) {
          std::ostringstream os;
          os << "filter product not associative at (" << a << "," << b << "," << c << ")";
          throw StructureError(os.str());
        }
  std::string why;
  if (!F.table.is_group(&why)) throw StructureError("filter group law fails: " + why);
  return F;
}

Bits hat(const FilterGroup& F, int A) {
  Bits h(static_cast<size_t>(F.size()));
  for (int i = 0; i < F.size(); ++i)
    if (F.elements[static_cast<size_t>(i)].contains(A)) h.set(static_cast<size_t>(i));
  return h;
}

int gamma_action(const CoarseStructure& M, int V, const FullFilter& x, int A) {
  if (!M.is_star_subgroup(V)) throw StructureError("gamma base must be a *subgroup");
  if (M.lc_of(A) != V) throw StructureError("gamma argument must be a left *coset of V");
  int found = -1;
  for (int B : M.lc_list(V)) {
    bool hit = false;
    for (size_t s = x.members.find_first(); s != Bits::npos; s = x.members.find_next(s))
      if (M.rel(static_cast<int>(s), A, B)) {
        hit = true;
        break;
      }
    if (!hit) continue;
    if (found >= 0) throw StructureError("gamma action target not unique");
    found = B;
  }
  if (found < 0) throw StructureError("gamma action has no target");
  return found;
}

ThetaEmbedding theta_embedding(const CoarseStructure& M, const FilterGroup& F, int W) {
  const std::vector<int>& lcW = M.lc_list(W);
  const int d = static_cast<int>(lcW.size());
  auto pos = [&](int id) {
    return static_cast<int>(std::lower_bound(lcW.begin(), lcW.end(), id) - lcW.begin());
  };
  ThetaEmbedding out;
  std::vector<Perm> distinct;
  for (const FullFilter& x : F.elements) {
    std::vector<int> im(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) im[static_cast<size_t>(i)] = pos(gamma_action(M, W, x, lcW[static_cast<size_t>(i)]));
    Perm p(std::move(im));
    if (p.is_identity()) out.kernel.push_back(static_cast<int>(out.filter_perms.size()));
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    out.filter_perms.push_back(std::move(p));
  }
  std::sort(distinct.begin(), distinct.end());
  out.image = group_from_elements(d, std::move(distinct), "theta-image");
  return out;
}

ThetaEmbedding theta_embedding(const CoarseStructure& M, int W) {
  return theta_embedding(M, filter_group(M), W);
}

ReconstructReport reconstruct_check(const PermGroup& G, int max_order) {
  return reconstruct_check(coarse_of_group(G, max_order));
}

ReconstructReport reconstruct_check(const GroupCoarse& GC) {
  const CoarseStructure& M = GC.structure;
  const PermGroup& G = GC.group;
  ReconstructReport rep;
  rep.group_order = G.size();
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.detail = msg;
    return rep;
  };

  FilterGroup F;
  try {
    F = filter_group(M);
  } catch (const Error& e) {
    return fail(std::string("filter group: ") + e.what());
  }
  rep.filter_count = F.size();
  if (F.size() != G.size()) return fail("filter count differs from group order");

  // Phi(g) = {A : g in A}, as a filter index.
  std::vector<int> phi(static_cast<size_t>(G.size()), -1);
  for (int g = 0; g < G.size(); ++g) {
    Bits x(static_cast<size_t>(M.size()));
    for (int A : GC.elements_containing(g)) x.set(static_cast<size_t>(A));
    const int idx = F.index_of(FullFilter{std::move(x)});
    if (idx < 0) {
      std::ostringstream os;
      os << "Phi(" << G.element(g).cycles() << ") is not an enumerated full filter";
      return fail(os.str());
    }
    phi[static_cast<size_t>(g)] = idx;
  }
  // Bijectivity.
  std::vector<char> hit(static_cast<size_t>(F.size()), 0);
  for (int v : phi) {
    if (hit[static_cast<size_t>(v)]) return fail("Phi is not injective");
    hit[static_cast<size_t>(v)] = 1;
  }
  // Homomorphism.
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      if (phi[static_cast<size_t>(G.mul(g, h))] !=
          F.mul(phi[static_cast<size_t>(g)], phi[static_cast<size_t>(h)])) {
        std::ostringstream os;
        os << "Phi not multiplicative at (" << G.element(g).cycles() << ", "
           << G.element(h).cycles() << ")";
        return fail(os.str());
      }
  // Xi: intersection recovers the element.
  for (int g = 0; g < G.size(); ++g) {
    const Bits& x = F.elements[static_cast<size_t>(phi[static_cast<size_t>(g)])].members;
    std::vector<int> common = GC.coset_members[x.find_first()];
    for (size_t a = x.find_first(); a != Bits::npos; a = x.find_next(a)) {
      std::vector<int> next;
      const auto& mem = GC.coset_members[a];
      std::set_intersection(common.begin(), common.end(), mem.begin(), mem.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (common != std::vector<int>{g}) return fail("intersection does not recover the element");
  }
  return rep;
}

InverseLimitReport inverse_limit_reconstruct(const CoarseStructure& M,
                                             const std::vector<int>& chain) {
  InverseLimitReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.detail = msg;
    return rep;
  };
  if (chain.empty()) return fail("empty chain");
  for (int N : chain) {
    if (!M.is_star_subgroup(N)) return fail("chain element is not a *subgroup");
    if (!M.is_normal(N)) return fail("non-normal chain element");
  }
  for (size_t k = 0; k + 1 < chain.size(); ++k)
    if (!M.subgroup_leq(chain[k + 1], chain[k])) return fail("chain is not descending");
  if (chain.back() != M.minimum_subgroup())
    return fail("chain does not end at the minimum *subgroup");

  const int K = static_cast<int>(chain.size()) - 1;
  std::vector<GroupTable> G(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    try {
      G[static_cast<size_t>(k)] = quotient_group(M, chain[static_cast<size_t>(k)]);
    } catch (const Error& e) {
      return fail(std::string("quotient: ") + e.what());
    }
  }

  // Connecting maps: p_k sends A in LC(N_{k+1}) to the coset of N_k above it.
  auto level_pos = [&](int k, int id) {
    const auto& dom = G[static_cast<size_t>(k)].domain;
    return static_cast<int>(std::lower_bound(dom.begin(), dom.end(), id) - dom.begin());
  };
  rep.level_maps.resize(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    const auto& upper = G[static_cast<size_t>(k) + 1].domain;
    const auto& lower = G[static_cast<size_t>(k)].domain;
    std::vector<int>& p = rep.level_maps[static_cast<size_t>(k)];
    p.assign(upper.size(), -1);
    for (size_t i = 0; i < upper.size(); ++i) {
      int found = -1;
      for (int B : lower)
        if (M.leq(upper[i], B)) {
          if (found >= 0) return fail("coset above is not unique: non-coherent quotients");
          found = B;
        }
      if (found < 0) return fail("no coset above: non-coherent quotients");
      p[i] = level_pos(k, found);
    }
    // Surjective homomorphism check.
    std::vector<char> hit(lower.size(), 0);
    for (int v : p) hit[static_cast<size_t>(v)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      return fail("connecting map not surjective");
    const GroupTable& up = G[static_cast<size_t>(k) + 1];
    const GroupTable& lo = G[static_cast<size_t>(k)];
    for (size_t a = 0; a < upper.size(); ++a)
      for (size_t b = 0; b < upper.size(); ++b)
        if (p[static_cast<size_t>(up.mul[a][b])] !=
            lo.mul[static_cast<size_t>(p[a])][static_cast<size_t>(p[b])])
          return fail("connecting map is not a homomorphism");
  }

  // Coherent sequences are determined by their top-level coset.
  const auto& topdom = G[static_cast<size_t>(K)].domain;
  std::vector<std::vector<int>> seqs;  // seqs[i][k] = table index at level k
  for (size_t t = 0; t < topdom.size(); ++t) {
    std::vector<int> f(static_cast<size_t>(K) + 1);
    f[static_cast<size_t>(K)] = static_cast<int>(t);
    for (int k = K - 1; k >= 0; --k)
      f[static_cast<size_t>(k)] =
          rep.level_maps[static_cast<size_t>(k)][static_cast<size_t>(f[static_cast<size_t>(k) + 1])];
    seqs.push_back(std::move(f));
  }

  // The limit group: componentwise products of coherent sequences.
  const int n = static_cast<int>(seqs.size());
  rep.limit.domain.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    rep.limit.domain[static_cast<size_t>(i)] =
        topdom[static_cast<size_t>(seqs[static_cast<size_t>(i)][static_cast<size_t>(K)])];
  rep.limit.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  rep.limit.inv.assign(static_cast<size_t>(n), -1);
  auto seq_index_by_top = [&](int top_idx) {
    for (int i = 0; i < n; ++i)
      if (seqs[static_cast<size_t>(i)][static_cast<size_t>(K)] == top_idx) return i;
    return -1;
  };
  rep.limit.identity = seq_index_by_top(G[static_cast<size_t>(K)].identity);
  for (int i = 0; i < n; ++i) {
    rep.limit.inv[static_cast<size_t>(i)] = seq_index_by_top(
        G[static_cast<size_t>(K)].inv[static_cast<size_t>(seqs[static_cast<size_t>(i)][static_cast<size_t>(K)])]);
    for (int j = 0; j < n; ++j) {
      // Multiply componentwise and confirm the result is coherent.
      std::vector<int> prod(static_cast<size_t>(K) + 1);
      for (int k = 0; k <= K; ++k)
        prod[static_cast<size_t>(k)] =
            G[static_cast<size_t>(k)].mul[static_cast<size_t>(seqs[static_cast<size_t>(i)][static_cast<size_t>(k)])]
                                         [static_cast<size_t>(seqs[static_cast<size_t>(j)][static_cast<size_t>(k)])];
      const int t = seq_index_by_top(prod[static_cast<size_t>(K)]);
      if (t < 0 || seqs[static_cast<size_t>(t)] != prod)
        return fail("componentwise product is not coherent");
      rep.limit.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
    }
  }
  std::string why;
  if (!rep.limit.is_group(&why)) return fail("limit table is not a group: " + why);

  // Phi(f) = {C : some f(k) below C}; verify it is an isomorphism onto F(M).
  FilterGroup F;
  try {
    F = filter_group(M);
  } catch (const Error& e) {
    return fail(std::string("filter group: ") + e.what());
  }
  std::vector<int> phi(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Bits x(static_cast<size_t>(M.size()));
    for (int k = 0; k <= K; ++k) {
      const int id = G[static_cast<size_t>(k)].domain[static_cast<size_t>(seqs[static_cast<size_t>(i)][static_cast<size_t>(k)])];
      x |= M.up_set(id);
    }
    phi[static_cast<size_t>(i)] = F.index_of(FullFilter{std::move(x)});
    if (phi[static_cast<size_t>(i)] < 0) return fail("Phi image is not a full filter");
  }
  std::vector<char> hit(static_cast<size_t>(F.size()), 0);
  for (int v : phi) hit[static_cast<size_t>(v)] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end() || F.size() != n)
    return fail("Phi is not a bijection onto the filter group");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (phi[static_cast<size_t>(rep.limit.mul[static_cast<size_t>(i)][static_cast<size_t>(j)])] !=
          F.mul(phi[static_cast<size_t>(i)], phi[static_cast<size_t>(j)]))
        return fail("Phi is not multiplicative");
  rep.matches_filter_group = true;
  return rep;
}

}  // namespace coarse
