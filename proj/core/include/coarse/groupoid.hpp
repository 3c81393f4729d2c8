#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "coarse/coarse_structure.hpp"

namespace coarse {

using Rat = boost::rational<long long>;

/// Parses "p" or "p/q"; throws ParseError on junk or zero denominator.
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& q);

/// A finite order-preserving partial injection on the rationals, kept as
/// pairs (x, f(x)) sorted by x with strictly increasing values.
struct PartialOrderMap {
  std::vector<std::pair<Rat, Rat>> pairs;

  static PartialOrderMap from_pairs(std::vector<std::pair<Rat, Rat>> pairs);  // validates

  int size() const { return static_cast<int>(pairs.size()); }
  std::vector<Rat> domain() const;
  std::vector<Rat> range() const;
  std::optional<Rat> at(const Rat& x) const;

  bool extends(const PartialOrderMap& other) const;  // other's pairs all present
  PartialOrderMap inverted() const;
  bool is_identity_map() const;

  /// "map:{q↦q′,…}"
  std::string label() const;

  auto operator<=>(const PartialOrderMap&) const = default;
};

/// compose(a, b): apply b first; defined on {x in dom b : b(x) in dom a}.
PartialOrderMap compose(const PartialOrderMap& a, const PartialOrderMap& b);

/// All order-preserving partial injections within a finite support,
/// ordered by (size, pairs). Element 0 is always the empty map.
struct RationalGroupoid {
  std::vector<Rat> support;
  std::vector<PartialOrderMap> elements;

  int index_of(const PartialOrderMap& m) const;  // -1 if absent
};

inline constexpr int kDefaultSupportBound = 6;

RationalGroupoid rationals_groupoid(std::vector<Rat> support,
                                    int max_points = kDefaultSupportBound);

struct GroupoidCoarse {
  CoarseStructure structure;  // element i describes groupoid.elements[i]
  RationalGroupoid groupoid;
};

/// The truncation of the coarse group of the order-automorphisms of the
/// rationals to maps within the support: R(A,B,C) iff C is contained in
/// the composite A∘B as a set of pairs.
GroupoidCoarse groupoid_to_coarse(const RationalGroupoid& Gd);

}  // namespace coarse
