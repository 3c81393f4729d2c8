#include "coarse/axioms.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

AxiomReport finish(AxiomReport rep, const Timer& t) {
  rep.elapsed_s = t.secs();
  return rep;
}

AxiomReport violation(AxiomReport rep, const Timer& t, std::vector<int> witness,
                      std::string detail) {
  rep.holds = false;
  rep.witness = std::move(witness);
  rep.detail = std::move(detail);
  return finish(std::move(rep), t);
}

Bits targets_bits(const CoarseStructure& M, int a, int b) {
  Bits out(static_cast<size_t>(M.size()));
  auto [lo, hi] = M.targets(a, b);
  for (const Triple* p = lo; p != hi; ++p) out.set(static_cast<size_t>((*p)[2]));
  return out;
}

}  // namespace

AxiomReport check_basic(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom0_basic";
  const auto& stars = M.star_subgroups();
  // (a) partial order with meets on *subgroups.
  for (int u : stars)
    if (!M.subgroup_leq(u, u)) return violation(rep, t, {u}, "0(a): not reflexive");
  for (int u : stars)
    for (int v : stars)
      if (u != v && M.subgroup_leq(u, v) && M.subgroup_leq(v, u))
        return violation(rep, t, {u, v}, "0(a): not antisymmetric");
  for (int u : stars)
    for (int v : stars)
      for (int w : stars)
        if (M.subgroup_leq(u, v) && M.subgroup_leq(v, w) && !M.subgroup_leq(u, w))
          return violation(rep, t, {u, v, w}, "0(a): not transitive");
  for (int u : stars)
    for (int v : stars)
      if (M.meet_raw(u, v) < 0) return violation(rep, t, {u, v}, "0(a): pair without meet");
  // (b) every element is a left and a right *coset.
  for (int a = 0; a < M.size(); ++a) {
    if (M.lc_of_raw(a) < 0)
      return violation(rep, t, {a}, "0(b): no maximum stabilizing *subgroup (left)");
    if (M.rc_of_raw(a) < 0)
      return violation(rep, t, {a}, "0(b): no maximum stabilizing *subgroup (right)");
  }
  // (c) the general order is a partial order extending the subgroup order.
  for (int a = 0; a < M.size(); ++a)
    if (!M.leq(a, a)) return violation(rep, t, {a}, "0(c): not reflexive");
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b)
      if (a != b && M.leq(a, b) && M.leq(b, a))
        return violation(rep, t, {a, b}, "0(c): not antisymmetric");
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b) {
      if (!M.leq(a, b)) continue;
      const Bits& up_b = M.up_set(b);
      if ((up_b & ~M.up_set(a)).any()) {
        for (int c = 0; c < M.size(); ++c)
          if (M.leq(b, c) && !M.leq(a, c))
            return violation(rep, t, {a, b, c}, "0(c): not transitive");
      }
    }
  for (int u : stars)
    for (int v : stars)
      if (M.leq(u, v) != M.subgroup_leq(u, v))
        return violation(rep, t, {u, v}, "0(c): does not extend the subgroup order");
  return finish(rep, t);
}

AxiomReport check_coset_partition(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom1_coset_partition";
  const auto& stars = M.star_subgroups();
  for (int up : stars)
    for (int u : stars) {
      if (!M.subgroup_leq(up, u)) continue;
      // Left.
      for (int ap : M.lc_list(up)) {
        bool enclosed = false;
        for (int a : M.lc_list(u)) {
          if (M.leq(ap, a)) enclosed = true;
          if (!M.leq(ap, a) && !M.disjoint(ap, a))
            return violation(rep, t, {up, u, ap, a}, "1(b) left: neither below nor disjoint");
        }
        if (!enclosed)
          return violation(rep, t, {up, u, ap}, "1(a) left: no enclosing *coset");
      }
      // Right (mirrored order).
      for (int ap : M.rc_list(up)) {
        bool enclosed = false;
        for (int a : M.rc_list(u)) {
          if (M.leq_right(ap, a)) enclosed = true;
          if (!M.leq_right(ap, a) && !M.disjoint(ap, a))
            return violation(rep, t, {up, u, ap, a}, "1(b) right: neither below nor disjoint");
        }
        if (!enclosed)
          return violation(rep, t, {up, u, ap}, "1(a) right: no enclosing *coset");
      }
    }
  // Distinct *cosets of one *subgroup are pairwise disjoint.
  for (int u : stars) {
    const auto& lc = M.lc_list(u);
    for (int a : lc)
      for (int b : lc)
        if (a != b && !M.disjoint(a, b))
          return violation(rep, t, {u, a, b}, "1: distinct left *cosets not disjoint");
    const auto& rc = M.rc_list(u);
    for (int a : rc)
      for (int b : rc)
        if (a != b && !M.disjoint(a, b))
          return violation(rep, t, {u, a, b}, "1: distinct right *cosets not disjoint");
  }
  return finish(rep, t);
}

AxiomReport check_monotone(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom2_monotone";
  for (const Triple& tr : M.triples()) {
    const auto [b0, b1, c] = tr;
    const Bits& d0 = M.down_set(b0);
    const Bits& d1 = M.down_set(b1);
    for (size_t a0 = d0.find_first(); a0 != Bits::npos; a0 = d0.find_next(a0))
      for (size_t a1 = d1.find_first(); a1 != Bits::npos; a1 = d1.find_next(a1))
        if (!M.rel(static_cast<int>(a0), static_cast<int>(a1), c))
          return violation(rep, t,
                           {static_cast<int>(a0), static_cast<int>(a1), b0, b1, c},
                           "shrunk product lost");
  }
  return finish(rep, t);
}

AxiomReport check_coset_restriction(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom3_coset_restriction";
  const auto& stars = M.star_subgroups();
  for (int u : stars)
    for (int v : stars) {
      const bool below = M.subgroup_leq(u, v);
      for (int b : M.lc_list(v)) {
        bool exists = false;
        for (int a : M.lc_list(u))
          if (M.leq(a, b)) {
            exists = true;
            break;
          }
        if (exists != below)
          return violation(rep, t, {u, v, b},
                           below ? "left: no *coset of U below B" : "left: unexpected *coset below B");
      }
      for (int b : M.rc_list(v)) {
        bool exists = false;
        for (int a : M.rc_list(u))
          if (M.leq_right(a, b)) {
            exists = true;
            break;
          }
        if (exists != below)
          return violation(rep, t, {u, v, b},
                           below ? "right: no *coset of U below B" : "right: unexpected *coset below B");
      }
    }
  return finish(rep, t);
}

namespace {
// S(A,B): rc_of(A) = lc_of(B) = V and R(A,B,V), computed from raw caches.
bool S_rel(const CoarseStructure& M, int a, int b) {
  const int v = M.rc_of_raw(a);
  return v >= 0 && M.lc_of_raw(b) == v && M.rel(a, b, v);
}
}  // namespace

AxiomReport check_inverses(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom4_inverses";
  for (int a = 0; a < M.size(); ++a) {
    const int d = M.diamond_raw(a);
    if (d == -1) return violation(rep, t, {a}, "4(a): no inverse");
    if (d == -2) return violation(rep, t, {a}, "4(a): non-unique inverse");
  }
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b)
      if (S_rel(M, a, b) != S_rel(M, b, a))
        return violation(rep, t, {a, b}, "4(b): S not symmetric");
  for (int a = 0; a < M.size(); ++a)
    if (M.diamond_raw(M.diamond_raw(a)) != a)
      return violation(rep, t, {a}, "4: diamond not an involution");
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b)
      if (M.leq(a, b) != M.leq(M.diamond_raw(a), M.diamond_raw(b)))
        return violation(rep, t, {a, b}, "4(c): diamond not an order isomorphism");
  return finish(rep, t);
}

AxiomReport check_products(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom5_products";
  for (int a = 0; a < M.size(); ++a) {
    const int u = M.rc_of_raw(a), v = M.lc_of_raw(a);
    if (u < 0 || v < 0) continue;
    for (int b = 0; b < M.size(); ++b) {
      const int w = M.lc_of_raw(b);
      if (M.rc_of_raw(b) != v || w < 0) continue;
      auto [lo, hi] = M.targets(a, b);
      int least = -1;
      for (const Triple* p = lo; p != hi && least < 0; ++p) {
        bool below_all = true;
        for (const Triple* q = lo; q != hi; ++q)
          if (!M.leq((*p)[2], (*q)[2])) {
            below_all = false;
            break;
          }
        if (below_all) least = (*p)[2];
      }
      if (least < 0) return violation(rep, t, {a, b}, "no least product *coset");
      if (M.rc_of_raw(least) != u || M.lc_of_raw(least) != w)
        return violation(rep, t, {a, b, least}, "product has wrong coset types");
    }
  }
  return finish(rep, t);
}

AxiomReport check_negative_subset(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom7_negative_subset";
  const int n = M.size();
  for (int a = 0; a < n; ++a) {
    const Bits& da = M.down_set(a);
    for (int b = 0; b < n; ++b) {
      const Bits& db = M.down_set(b);
      Bits reachable(static_cast<size_t>(n));  // {F : some D<=A, E<=B with R(D,E,F)}
      for (size_t d = da.find_first(); d != Bits::npos; d = da.find_next(d))
        for (size_t e = db.find_first(); e != Bits::npos; e = db.find_next(e)) {
          auto [lo, hi] = M.targets(static_cast<int>(d), static_cast<int>(e));
          for (const Triple* p = lo; p != hi; ++p) reachable.set(static_cast<size_t>((*p)[2]));
        }
      for (int c = 0; c < n; ++c) {
        const bool lhs = M.rel(a, b, c);
        const bool separated = (reachable & ~M.not_disjoint_row(c)).any();
        if (lhs != !separated)
          return violation(rep, t, {a, b, c},
                           lhs ? "7(a): product triple has a separating F"
                               : "7(a): no separating F for a non-triple");
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool lhs = M.leq(a, b);
      const bool separated = (M.down_set(a) & ~M.not_disjoint_row(b)).any();
      if (lhs != !separated)
        return violation(rep, t, {a, b},
                         lhs ? "7(b): element below A disjoint from B"
                             : "7(b): nothing below A is disjoint from B");
    }
  return finish(rep, t);
}

bool phi(const CoarseStructure& M, int A, int B, int C) {
  const Bits& da = M.down_set(A);
  const Bits& db = M.down_set(B);
  for (size_t d = da.find_first(); d != Bits::npos; d = da.find_next(d))
    for (size_t e = db.find_first(); e != Bits::npos; e = db.find_next(e))
      if (M.rel(static_cast<int>(d), static_cast<int>(e), C)) return false;
  return true;
}

Bits phi_row(const CoarseStructure& M, int A, int B) {
  Bits row(static_cast<size_t>(M.size()));
  row.set();
  const Bits& da = M.down_set(A);
  const Bits& db = M.down_set(B);
  for (size_t d = da.find_first(); d != Bits::npos; d = da.find_next(d))
    for (size_t e = db.find_first(); e != Bits::npos; e = db.find_next(e))
      row &= ~targets_bits(M, static_cast<int>(d), static_cast<int>(e));
  return row;
}

bool psi(const CoarseStructure& M, const std::vector<int>& As, int B, int V) {
  if (As.empty()) throw StructureError("psi needs at least one coset");
  for (int a : As)
    if (M.lc_of_raw(a) != V) throw StructureError("psi argument not a left *coset of V");
  Bits ok(static_cast<size_t>(M.size()));
  ok.set();
  for (int a : As) ok &= phi_row(M, V, a);
  return (ok & M.down_set(B)).none();
}

namespace {

// rho for closure under products: V^ Aj^ Al^ escapes the union.
bool rho_escapes(const CoarseStructure& M, int V, int Aj, int Al, const Bits& okF) {
  const Bits& dv = M.down_set(V);
  const Bits& dj = M.down_set(Aj);
  const Bits& dl = M.down_set(Al);
  for (size_t b = dv.find_first(); b != Bits::npos; b = dv.find_next(b))
    for (size_t c = dj.find_first(); c != Bits::npos; c = dj.find_next(c)) {
      auto [lo, hi] = M.targets(static_cast<int>(b), static_cast<int>(c));
      for (const Triple* p = lo; p != hi; ++p) {
        const int e = (*p)[2];
        for (size_t d = dl.find_first(); d != Bits::npos; d = dl.find_next(d)) {
          auto [lo2, hi2] = M.targets(e, static_cast<int>(d));
          for (const Triple* q = lo2; q != hi2; ++q)
            if (okF.test(static_cast<size_t>((*q)[2]))) return true;
        }
      }
    }
  return false;
}

// Escape for closure under inverses: Aj-diamond^ V^ escapes the union.
bool inverse_escapes(const CoarseStructure& M, int V, int Aj, const Bits& okF) {
  const int ajd = M.diamond_raw(Aj);
  if (ajd < 0) return true;  // no inverse at all
  const Bits& dc = M.down_set(ajd);
  const Bits& dv = M.down_set(V);
  for (size_t c = dc.find_first(); c != Bits::npos; c = dc.find_next(c))
    for (size_t b = dv.find_first(); b != Bits::npos; b = dv.find_next(b)) {
      auto [lo, hi] = M.targets(static_cast<int>(c), static_cast<int>(b));
      for (const Triple* p = lo; p != hi; ++p)
        if (okF.test(static_cast<size_t>((*p)[2]))) return true;
    }
  return false;
}

Bits ok_outside_union(const CoarseStructure& M, const std::vector<int>& As,
                      const std::vector<Bits>& phi_rows_V,
                      const std::vector<int>& lc_index) {
  Bits ok(static_cast<size_t>(M.size()));
  ok.set();
  for (int a : As) ok &= phi_rows_V[static_cast<size_t>(lc_index[static_cast<size_t>(a)])];
  return ok;
}

}  // namespace

bool theta(const CoarseStructure& M, const std::vector<int>& As, int V) {
  if (As.empty()) throw StructureError("theta needs at least one coset");
  for (int a : As)
    if (M.lc_of_raw(a) != V) throw StructureError("theta argument not a left *coset of V");
  Bits okF(static_cast<size_t>(M.size()));
  okF.set();
  for (int a : As) okF &= phi_row(M, V, a);
  for (int aj : As)
    for (int al : As)
      if (rho_escapes(M, V, aj, al, okF)) return false;
  for (int aj : As)
    if (inverse_escapes(M, V, aj, okF)) return false;
  return true;
}

AxiomReport check_roelcke(const CoarseStructure& M, int n_max) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "axiom8_roelcke";
  const auto& stars = M.star_subgroups();
  if (stars.empty()) return violation(rep, t, {}, "no *subgroups");
  if (n_max <= 0) n_max = static_cast<int>(M.lc_list(stars.front()).size());

  for (int v : stars) {
    const std::vector<int>& lc = M.lc_list(v);
    const int m = static_cast<int>(lc.size());
    // Subset count guard: the axiom is a schema, checked per tuple family.
    long long subset_count = 0;
    {
      long long binom = 1;
      for (int sz = 1; sz <= std::min(n_max, m); ++sz) {
        binom = binom * (m - sz + 1) / sz;
        subset_count += binom;
        if (subset_count > (1 << 22))
          throw BoundError("coset subset space too large for the Roelcke schema");
      }
    }
    std::vector<Bits> rows(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) rows[static_cast<size_t>(i)] = phi_row(M, v, lc[static_cast<size_t>(i)]);
    std::vector<int> lc_index(static_cast<size_t>(M.size()), -1);
    for (int i = 0; i < m; ++i) lc_index[static_cast<size_t>(lc[static_cast<size_t>(i)])] = i;

    std::vector<uint64_t> masks;
    for (int sz = 1; sz <= std::min(n_max, m); ++sz) {
      // Gosper iteration over all size-sz subsets of the m cosets.
      uint64_t mask = (1ull << sz) - 1;
      while (mask < (1ull << m)) {
        masks.push_back(mask);
        const uint64_t c = mask & -mask;
        const uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
    for (uint64_t mask : masks) {
      std::vector<int> As;
      for (int i = 0; i < m; ++i)
        if (mask & (1ull << i)) As.push_back(lc[static_cast<size_t>(i)]);
      const Bits okF = ok_outside_union(M, As, v, rows, lc_index);
      bool closed = true;
      for (size_t j = 0; j < As.size() && closed; ++j) {
        if (inverse_escapes(M, v, As[j], okF)) closed = false;
        for (size_t l = 0; l < As.size() && closed; ++l)
          if (rho_escapes(M, v, As[j], As[l], okF)) closed = false;
      }
      if (!closed) continue;
      bool found = false;
      for (int u : stars) {
        bool contains = true;
        for (int a : As)
          if (!M.rel(v, a, u)) {
            contains = false;
            break;
          }
        if (contains && (okF & M.down_set(u)).none()) {
          found = true;
          break;
        }
      }
      if (!found) {
        std::vector<int> w{v};
        w.insert(w.end(), As.begin(), As.end());
        return violation(rep, t, std::move(w), "no *subgroup covers the double-coset union");
      }
    }
  }
  return finish(rep, t);
}

AxiomReport check_assoc_firstorder(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "assoc_firstorder";
  auto least_product = [&](int a, int b) {
    auto [lo, hi] = M.targets(a, b);
    for (const Triple* p = lo; p != hi; ++p) {
      bool below_all = true;
      for (const Triple* q = lo; q != hi; ++q)
        if (!M.leq((*p)[2], (*q)[2])) {
          below_all = false;
          break;
        }
      if (below_all) return (*p)[2];
    }
    return -1;
  };
  for (int a = 0; a < M.size(); ++a) {
    if (M.rc_of_raw(a) < 0) continue;
    const int u = M.lc_of_raw(a);
    if (u < 0) continue;
    for (int b = 0; b < M.size(); ++b) {
      if (M.rc_of_raw(b) != u) continue;
      const int v = M.lc_of_raw(b);
      if (v < 0) continue;
      const int ab = least_product(a, b);
      for (int c = 0; c < M.size(); ++c) {
        if (M.rc_of_raw(c) != v || M.lc_of_raw(c) < 0) continue;
        if (ab < 0) return violation(rep, t, {a, b}, "left product undefined");
        const int bc = least_product(b, c);
        if (bc < 0) return violation(rep, t, {b, c}, "right product undefined");
        const int left = least_product(ab, c);
        const int right = least_product(a, bc);
        if (left < 0 || right < 0 || left != right)
          return violation(rep, t, {a, b, c}, "products do not associate");
      }
    }
  }
  return finish(rep, t);
}

AxiomReport check_profinite_condition(const CoarseStructure& M) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "profinite_condition";
  for (int u : M.star_subgroups()) {
    bool found = false;
    for (int v : M.star_subgroups())
      if (M.subgroup_leq(v, u) && M.is_normal(v)) {
        found = true;
        break;
      }
    if (!found) return violation(rep, t, {u}, "no normal *subgroup below");
    if (M.lc_list(u).empty()) return violation(rep, t, {u}, "empty coset family");
  }
  rep.detail = "finiteness of every LC(U) is automatic at this scale";
  return finish(rep, t);
}

AxiomReport check_delta(const CoarseStructure& M, int W) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "delta";
  {
    std::ostringstream os;
    os << "delta[W=" << W << "]";
    rep.axiom_id = os.str();
  }
  if (!M.is_star_subgroup(W)) return violation(rep, t, {W}, "W is not a *subgroup");
  const std::vector<int>& lcW = M.lc_list(W);
  for (int u : M.star_subgroups()) {
    for (int a : M.lc_list(u)) {
      if (a == u) continue;
      bool exists_up = false;
      for (int up : M.star_subgroups()) {
        if (!M.subgroup_leq(up, u)) continue;
        bool all_moved = true;
        for (int ap : M.lc_list(up)) {
          if (!M.leq(ap, a)) continue;
          bool moved = false;
          for (int c : lcW) {
            auto [lo, hi] = M.targets(ap, c);
            for (const Triple* p = lo; p != hi && !moved; ++p) {
              const int d = (*p)[2];
              if (d != c && M.lc_of_raw(d) == W) moved = true;
            }
            if (moved) break;
          }
          if (!moved) {
            all_moved = false;
            break;
          }
        }
        if (all_moved) {
          exists_up = true;
          break;
        }
      }
      if (!exists_up) return violation(rep, t, {u, a}, "no U' works for this coset");
    }
  }
  return finish(rep, t);
}

AxiomReport check_formally_oligomorphic(const CoarseStructure& M, int V, int k_max) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "formally_oligomorphic";
  {
    std::ostringstream os;
    os << "formally_oligomorphic[V=" << V << "]";
    rep.axiom_id = os.str();
  }
  if (!M.is_star_subgroup(V)) return violation(rep, t, {V}, "V is not a *subgroup");
  const std::vector<int>& lc = M.lc_list(V);
  const int m = static_cast<int>(lc.size());
  std::ostringstream cert;
  for (int k = 1; k <= k_max; ++k) {
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= m;
    if (total > 200000) return violation(rep, t, {V, k}, "tuple space too large");

    // covers(S; B -> C) iff R(S, B_j, C_j) for all j.
    auto covered_by = [&](const std::vector<int>& B, const std::vector<int>& C) {
      for (int s = 0; s < M.size(); ++s) {
        bool all = true;
        for (int j = 0; j < k; ++j)
          if (!M.rel(s, B[static_cast<size_t>(j)], C[static_cast<size_t>(j)])) {
            all = false;
            break;
          }
        if (all) return true;
      }
      return false;
    };
    auto tuple_at = [&](long long r) {
      std::vector<int> tup(static_cast<size_t>(k));
      for (int i = k - 1; i >= 0; --i) {
        tup[static_cast<size_t>(i)] = lc[static_cast<size_t>(r % m)];
        r /= m;
      }
      return tup;
    };

    std::vector<std::vector<int>> family;
    for (long long r = 0; r < total; ++r) {
      const std::vector<int> B = tuple_at(r);
      bool done = false;
      for (const auto& C : family)
        if (covered_by(B, C)) {
          done = true;
          break;
        }
      if (done) continue;
      if (covered_by(B, B)) {
        family.push_back(B);
        continue;
      }
      bool adopted = false;
      for (long long rc = 0; rc < total && !adopted; ++rc) {
        const std::vector<int> C = tuple_at(rc);
        if (covered_by(B, C)) {
          family.push_back(C);
          adopted = true;
        }
      }
      if (!adopted) {
        std::vector<int> w{V, k};
        w.insert(w.end(), B.begin(), B.end());
        return violation(rep, t, std::move(w), "tuple covered by no family candidate");
      }
    }
    cert << (k > 1 ? " " : "") << "k=" << k << ":n=" << family.size();
  }
  rep.detail = cert.str();
  return finish(rep, t);
}

AxiomReport check_strong_continuity(const CoarseStructure& M, int V) {
  Timer t;
  AxiomReport rep;
  rep.axiom_id = "strong_continuity";
  {
    std::ostringstream os;
    os << "strong_continuity[V=" << V << "]";
    rep.axiom_id = os.str();
  }
  if (!M.is_star_subgroup(V)) return violation(rep, t, {V}, "V is not a *subgroup");
  const std::vector<int>& lc = M.lc_list(V);
  // The full coset tuple gives the weakest premise; if it fails, every
  // shorter tuple (including the empty one) fails as well.
  std::vector<int> pinned;
  for (int s = 0; s < M.size(); ++s) {
    bool fixes_all = true;
    for (int b : lc)
      if (!M.rel(s, b, b)) {
        fixes_all = false;
        break;
      }
    if (fixes_all) pinned.push_back(s);
  }
  for (int u : M.star_subgroups())
    for (int s : pinned)
      if (!M.leq(s, u))
        return violation(rep, t, {u, s}, "an element fixing all of LC(V) escapes U");
  return finish(rep, t);
}

std::vector<AxiomReport> check_all(const CoarseStructure& M, int roelcke_n_max) {
  std::vector<AxiomReport> out;
  out.push_back(check_basic(M));
  out.push_back(check_coset_partition(M));
  out.push_back(check_monotone(M));
  out.push_back(check_coset_restriction(M));
  out.push_back(check_inverses(M));
  out.push_back(check_products(M));
  out.push_back(check_negative_subset(M));
  out.push_back(check_roelcke(M, roelcke_n_max));
  out.push_back(check_assoc_firstorder(M));
  out.push_back(check_profinite_condition(M));
  return out;
}

}  // namespace coarse
