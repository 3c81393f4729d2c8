#include "coarse/coarse_structure.hpp"

#include <algorithm>
#include <sstream>

#include "coarse/error.hpp"
#include "coarse/perm_group.hpp"

namespace coarse {

namespace {
constexpr int kDenseRelLimit = 300;  // size^3 bits <= ~3.4 MB
}

CoarseStructure::CoarseStructure(int size, std::vector<Triple> triples,
                                 std::vector<std::string> labels)
    : size_(size), triples_(std::move(triples)), labels_(std::move(labels)) {
  if (size_ <= 0) throw StructureError("coarse structure needs at least one element");
  for (const Triple& t : triples_)
    for (int v : t)
      if (v < 0 || v >= size_) throw StructureError("triple index out of range");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != size_)
    throw StructureError("label count does not match size");
  if (labels_.empty()) labels_.assign(static_cast<size_t>(size_), "");
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  dense_ = size_ <= kDenseRelLimit;
  if (dense_) {
    rel_dense_.resize(static_cast<size_t>(size_) * size_ * size_);
    for (const Triple& t : triples_)
      rel_dense_.set((static_cast<size_t>(t[0]) * size_ + t[1]) * size_ + t[2]);
  }
  compute_derived();
}

bool CoarseStructure::rel(int a, int b, int c) const {
  if (dense_)
    return rel_dense_.test((static_cast<size_t>(a) * size_ + b) * size_ + c);
  return std::binary_search(triples_.begin(), triples_.end(), Triple{a, b, c});
}

std::pair<const Triple*, const Triple*> CoarseStructure::targets(int a, int b) const {
  auto lo = std::lower_bound(triples_.begin(), triples_.end(), Triple{a, b, 0});
  auto hi = std::lower_bound(triples_.begin(), triples_.end(), Triple{a, b, size_});
  return {triples_.data() + (lo - triples_.begin()), triples_.data() + (hi - triples_.begin())};
}

bool CoarseStructure::subgroup_leq(int U, int V) const {
  return star_[static_cast<size_t>(U)] && star_[static_cast<size_t>(V)] && rel(U, V, V);
}

void CoarseStructure::compute_derived() {
  const size_t n = static_cast<size_t>(size_);

  star_.assign(n, 0);
  for (int a = 0; a < size_; ++a) star_[static_cast<size_t>(a)] = rel(a, a, a);
  stars_.clear();
  star_pos_.assign(n, -1);
  for (int a = 0; a < size_; ++a)
    if (star_[static_cast<size_t>(a)]) {
      star_pos_[static_cast<size_t>(a)] = static_cast<int>(stars_.size());
      stars_.push_back(a);
    }

  // lc/rc: unique maximum stabilizing *subgroup, -1 when there is none.
  auto stabilizer_max = [&](int A, bool left) {
    std::vector<int> cand;
    for (int U : stars_)
      if (left ? rel(A, U, A) : rel(U, A, A)) cand.push_back(U);
    int best = -1;
    for (int u : cand) {
      bool top = true;
      for (int v : cand)
        if (!subgroup_leq(v, u)) {
          top = false;
          break;
        }
      if (top) {
        if (best >= 0) return -1;  // two maxima: antisymmetry broken
        best = u;
      }
    }
    return best;
  };
  lc_raw_.assign(n, -1);
  rc_raw_.assign(n, -1);
  for (int a = 0; a < size_; ++a) {
    lc_raw_[static_cast<size_t>(a)] = stabilizer_max(a, true);
    rc_raw_[static_cast<size_t>(a)] = stabilizer_max(a, false);
  }

  leq_.assign(n, Bits(n));
  leq_right_.assign(n, Bits(n));
  for (int a = 0; a < size_; ++a) {
    const int lu = lc_raw_[static_cast<size_t>(a)];
    const int ru = rc_raw_[static_cast<size_t>(a)];
    for (int b = 0; b < size_; ++b) {
      if (lu >= 0 && rel(a, lu, b)) leq_[static_cast<size_t>(a)].set(static_cast<size_t>(b));
      if (ru >= 0 && rel(ru, a, b)) leq_right_[static_cast<size_t>(a)].set(static_cast<size_t>(b));
    }
  }
  up_ = leq_;
  down_.assign(n, Bits(n));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (leq_[static_cast<size_t>(a)].test(static_cast<size_t>(b)))
        down_[static_cast<size_t>(b)].set(static_cast<size_t>(a));

  // Meets of *subgroup pairs.
  const int s = static_cast<int>(stars_.size());
  meet_.assign(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(s), -1));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      std::vector<int> lower;
      for (int w : stars_)
        if (subgroup_leq(w, stars_[static_cast<size_t>(i)]) &&
            subgroup_leq(w, stars_[static_cast<size_t>(j)]))
          lower.push_back(w);
      int best = -1;
      for (int w : lower) {
        bool top = true;
        for (int v : lower)
          if (!subgroup_leq(v, w)) {
            top = false;
            break;
          }
        if (top) {
          if (best >= 0) {
            best = -1;
            break;
          }
          best = w;
        }
      }
      meet_[static_cast<size_t>(i)][static_cast<size_t>(j)] = best;
    }

  // Minimum *subgroup, if any.
  minimum_subgroup_ = -1;
  for (int u : stars_) {
    bool least = true;
    for (int v : stars_)
      if (!subgroup_leq(u, v)) {
        least = false;
        break;
      }
    if (least) {
      minimum_subgroup_ = minimum_subgroup_ < 0 ? u : -1;
      if (minimum_subgroup_ < 0) break;
    }
  }

  diamond_raw_.assign(n, -1);
  for (int a = 0; a < size_; ++a) {
    const int v = rc_raw_[static_cast<size_t>(a)];
    if (v < 0) continue;
    int found = -1;
    for (int b = 0; b < size_; ++b) {
      if (lc_raw_[static_cast<size_t>(b)] != v || !rel(a, b, v)) continue;
      if (found >= 0) {
        found = -2;
        break;
      }
      found = b;
    }
    diamond_raw_[static_cast<size_t>(a)] = found;
  }

  lc_lists_.assign(static_cast<size_t>(s), {});
  rc_lists_.assign(static_cast<size_t>(s), {});
  for (int a = 0; a < size_; ++a) {
    if (lc_raw_[static_cast<size_t>(a)] >= 0)
      lc_lists_[static_cast<size_t>(star_pos_[static_cast<size_t>(lc_raw_[static_cast<size_t>(a)])])]
          .push_back(a);
    if (rc_raw_[static_cast<size_t>(a)] >= 0)
      rc_lists_[static_cast<size_t>(star_pos_[static_cast<size_t>(rc_raw_[static_cast<size_t>(a)])])]
          .push_back(a);
  }

  not_disjoint_.assign(n, Bits(n));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      auto [lo, hi] = targets(a, b);
      for (const Triple* p = lo; p != hi; ++p)
        for (const Triple* q = lo; q != hi; ++q)
          not_disjoint_[static_cast<size_t>((*p)[2])].set(static_cast<size_t>((*q)[2]));
    }
}

int CoarseStructure::lc_of(int A) const {
  const int u = lc_raw_[static_cast<size_t>(A)];
  if (u < 0) throw StructureError("no maximum stabilizing *subgroup (left)");
  return u;
}

int CoarseStructure::rc_of(int A) const {
  const int u = rc_raw_[static_cast<size_t>(A)];
  if (u < 0) throw StructureError("no maximum stabilizing *subgroup (right)");
  return u;
}

std::vector<std::pair<int, int>> CoarseStructure::left_right_order_mismatches() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (leq(a, b) != leq_right(a, b)) out.emplace_back(a, b);
  return out;
}

int CoarseStructure::meet_raw(int U, int V) const {
  const int i = star_pos_[static_cast<size_t>(U)];
  const int j = star_pos_[static_cast<size_t>(V)];
  if (i < 0 || j < 0) throw StructureError("meet arguments must be *subgroups");
  return meet_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int CoarseStructure::meet(int U, int V) const {
  const int w = meet_raw(U, V);
  if (w < 0) throw StructureError("no meet");
  return w;
}

int CoarseStructure::diamond(int A) const {
  const int b = diamond_raw_[static_cast<size_t>(A)];
  if (b == -1) throw StructureError("no inverse");
  if (b == -2) throw StructureError("non-unique inverse");
  return b;
}

std::optional<int> CoarseStructure::dot(int A, int B) const {
  const int v = lc_raw_[static_cast<size_t>(A)];
  if (v < 0 || rc_raw_[static_cast<size_t>(B)] != v) return std::nullopt;
  auto [lo, hi] = targets(A, B);
  int least = -1;
  for (const Triple* p = lo; p != hi; ++p) {
    const int c = (*p)[2];
    bool below_all = true;
    for (const Triple* q = lo; q != hi; ++q)
      if (!leq(c, (*q)[2])) {
        below_all = false;
        break;
      }
    if (below_all) {
      least = c;
      break;
    }
  }
  if (least < 0) throw StructureError("no least element");
  return least;
}

const std::vector<int>& CoarseStructure::lc_list(int U) const {
  const int i = star_pos_[static_cast<size_t>(U)];
  if (i < 0) throw StructureError("lc_list argument must be a *subgroup");
  return lc_lists_[static_cast<size_t>(i)];
}

const std::vector<int>& CoarseStructure::rc_list(int U) const {
  const int i = star_pos_[static_cast<size_t>(U)];
  if (i < 0) throw StructureError("rc_list argument must be a *subgroup");
  return rc_lists_[static_cast<size_t>(i)];
}

bool CoarseStructure::is_normal(int U) const { return lc_list(U) == rc_list(U); }

bool GroupTable::is_group(std::string* why) const {
  const int n = size();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (identity < 0 || identity >= n) return fail("identity out of range");
  for (int a = 0; a < n; ++a) {
    if (mul[static_cast<size_t>(identity)][static_cast<size_t>(a)] != a ||
        mul[static_cast<size_t>(a)][static_cast<size_t>(identity)] != a)
      return fail("identity law fails");
    if (mul[static_cast<size_t>(a)][static_cast<size_t>(inv[static_cast<size_t>(a)])] != identity ||
        mul[static_cast<size_t>(inv[static_cast<size_t>(a)])][static_cast<size_t>(a)] != identity)
      return fail("inverse law fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[static_cast<size_t>(mul[static_cast<size_t>(a)][static_cast<size_t>(b)])]
               [static_cast<size_t>(c)] !=
            mul[static_cast<size_t>(a)]
               [static_cast<size_t>(mul[static_cast<size_t>(b)][static_cast<size_t>(c)])])
          return fail("associativity fails");
  return true;
}

GroupTable quotient_group(const CoarseStructure& M, int U) {
  if (!M.is_star_subgroup(U)) throw StructureError("quotient base must be a *subgroup");
  if (!M.is_normal(U)) throw StructureError("quotient base is not normal");
  const std::vector<int>& dom = M.lc_list(U);
  const int n = static_cast<int>(dom.size());
  auto pos = [&](int id) {
    auto it = std::lower_bound(dom.begin(), dom.end(), id);
    if (it == dom.end() || *it != id) throw StructureError("quotient product leaves LC(U)");
    return static_cast<int>(it - dom.begin());
  };
  GroupTable T;
  T.domain = dom;
  T.identity = pos(U);
  T.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  T.inv.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    T.inv[static_cast<size_t>(i)] = pos(M.diamond(dom[static_cast<size_t>(i)]));
    for (int j = 0; j < n; ++j) {
      auto c = M.dot(dom[static_cast<size_t>(i)], dom[static_cast<size_t>(j)]);
      if (!c) throw StructureError("quotient product undefined");
      T.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos(*c);
    }
  }
  std::string why;
  if (!T.is_group(&why)) throw StructureError("quotient table is not a group: " + why);
  return T;
}

PermGroup table_to_permgroup(const GroupTable& T, std::string name) {
  const int n = T.size();
  std::vector<Perm> elems;
  elems.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) im[static_cast<size_t>(x)] = T.mul[static_cast<size_t>(a)][static_cast<size_t>(x)];
    elems.push_back(Perm(std::move(im)));
  }
  return group_from_elements(n, std::move(elems), std::move(name));
}

}  // namespace coarse
