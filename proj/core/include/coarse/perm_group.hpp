#pragma once

#include <map>
#include <string>
#include <vector>

#include "coarse/perm.hpp"

namespace coarse {

inline constexpr int kDefaultElementBound = 20000;
inline constexpr int kDefaultSubgroupOrderBound = 48;

/// A finite permutation group, fully enumerated. Element order is the
/// construction order and is stable: index 0 is always the identity.
class PermGroup {
 public:
  PermGroup() = default;

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[static_cast<size_t>(i)]; }

  int identity_index() const { return 0; }
  /// Index of a permutation, or -1 if it is not an element.
  int index_of(const Perm& p) const;

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

  /// Multiplicative order of element i.
  int element_order(int i) const;

  friend PermGroup close_generators(int degree, std::vector<Perm> gens, std::string name,
                                    int max_elements);
  friend PermGroup group_from_elements(int degree, std::vector<Perm> elems, std::string name);

 private:
  void build_tables();

  int degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

/// Closure of the generators under composition, enumerated breadth-first
/// from the identity with generators applied on the right in input order.
/// Throws BoundError("group too large") past max_elements.
PermGroup close_generators(int degree, std::vector<Perm> gens, std::string name = "",
                           int max_elements = kDefaultElementBound);

/// Wraps an already-closed element set (validated). The identity is moved
/// to index 0; the rest keep the given order.
PermGroup group_from_elements(int degree, std::vector<Perm> elems, std::string name = "");

/// A subgroup of an ambient PermGroup, as a sorted set of element indices.
struct Subgroup {
  std::vector<int> members;  // sorted ascending, contains 0 (identity)

  bool contains(int i) const;
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup&) const = default;
};

/// Validates closure under the parent's tables and returns the subgroup.
Subgroup make_subgroup(const PermGroup& G, std::vector<int> members);

/// All subgroups of G, by bottom-up closure of generated subsets.
/// Requires |G| <= max_order. Sorted by size, then member list.
std::vector<Subgroup> all_subgroups(const PermGroup& G,
                                    int max_order = kDefaultSubgroupOrderBound);

enum class Side { Left, Right };

/// Coset partition of G by U; cells sorted internally and listed in order
/// of their least element, so U itself is always the first cell.
std::vector<std::vector<int>> cosets(const PermGroup& G, const Subgroup& U, Side side);

/// {g in G : g fixes every point of `points`}.
Subgroup pointwise_stabilizer(const PermGroup& G, const std::vector<int>& points);

/// Orbit labelling of degree^arity tuples under the diagonal action.
struct TupleOrbits {
  int degree = 0;
  int arity = 0;
  std::vector<int> orbit_of;  // indexed by tuple rank (lexicographic)
  int orbit_count = 0;
  std::vector<std::vector<int>> representatives;  // lexicographically least per orbit

  long long tuple_count() const { return static_cast<long long>(orbit_of.size()); }
};

long long rank_tuple(const std::vector<int>& t, int degree);
std::vector<int> unrank_tuple(long long r, int degree, int arity);

/// Orbits of the natural action on arity-tuples. Orbit labels are assigned
/// in order of the lexicographically least tuple of each orbit.
TupleOrbits orbits(const PermGroup& G, int arity, long long max_tuples = 1 << 20);

}  // namespace coarse
