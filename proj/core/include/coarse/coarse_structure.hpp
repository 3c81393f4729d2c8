#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coarse {

/// Index of an element of a CoarseStructure.
using CosetId = int;
using Triple = std::array<int, 3>;
using Bits = boost::dynamic_bitset<>;

/// A finite structure with one ternary relation R(A,B,C), read "AB is
/// contained in C". All derived data (subgroup flags, the orders, meets,
/// the inverse map, coset lists, disjointness) is computed eagerly at
/// construction, so instances are immutable and safe to share.
class CoarseStructure {
 public:
  CoarseStructure(int size, std::vector<Triple> triples,
                  std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool rel(int a, int b, int c) const;
  const std::vector<Triple>& triples() const { return triples_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }

  /// {c : (a,b,c) in R}, as a contiguous slice of the sorted triple list.
  std::pair<const Triple*, const Triple*> targets(int a, int b) const;

  // --- *subgroups and the two orders ---------------------------------

  bool is_star_subgroup(int A) const { return star_[static_cast<size_t>(A)]; }
  const std::vector<int>& star_subgroups() const { return stars_; }

  /// U <= V among *subgroups: UV under V, i.e. R(U,V,V).
  bool subgroup_leq(int U, int V) const;

  /// Left- and right-handed stabilizing subgroups. lc_of(A) is the unique
  /// maximum *subgroup U with R(A,U,A); rc_of mirrors it with R(U,A,A).
  int lc_of(int A) const;  // throws StructureError("no maximum ...")
  int rc_of(int A) const;
  int lc_of_raw(int A) const { return lc_raw_[static_cast<size_t>(A)]; }  // -1 when absent
  int rc_of_raw(int A) const { return rc_raw_[static_cast<size_t>(A)]; }

  /// The order on all elements: A <= B iff R(A, lc_of(A), B).
  bool leq(int A, int B) const { return leq_[static_cast<size_t>(A)].test(static_cast<size_t>(B)); }
  bool leq_defined(int A) const { return lc_raw_[static_cast<size_t>(A)] >= 0; }
  /// Mirrored variant via rc_of; exposed for consistency checking only.
  bool leq_right(int A, int B) const {
    return leq_right_[static_cast<size_t>(A)].test(static_cast<size_t>(B));
  }
  /// Pairs on which the left- and right-handed orders differ.
  std::vector<std::pair<int, int>> left_right_order_mismatches() const;

  const Bits& up_set(int A) const { return up_[static_cast<size_t>(A)]; }      // {B : A <= B}
  const Bits& down_set(int A) const { return down_[static_cast<size_t>(A)]; }  // {B : B <= A}

  /// Greatest lower bound of two *subgroups. Throws when absent.
  int meet(int U, int V) const;
  int meet_raw(int U, int V) const;  // -1 when absent

  /// No C,D with R(C,D,A) and R(C,D,B).
  bool disjoint(int A, int B) const {
    return !not_disjoint_[static_cast<size_t>(A)].test(static_cast<size_t>(B));
  }
  /// {B : A and B are not disjoint}, as a row.
  const Bits& not_disjoint_row(int A) const { return not_disjoint_[static_cast<size_t>(A)]; }

  /// The abstract inverse: the unique B with rc_of(A) = lc_of(B) = V and
  /// R(A,B,V). Throws when missing or ambiguous.
  int diamond(int A) const;
  int diamond_raw(int A) const { return diamond_raw_[static_cast<size_t>(A)]; }  // -1 none, -2 ambiguous

  /// Partial product: defined when lc_of(A) = rc_of(B); the least C with
  /// R(A,B,C). nullopt when not composable; throws when composable but no
  /// least element exists.
  std::optional<int> dot(int A, int B) const;

  /// All A with lc_of(A) = U (resp. rc_of), ascending. U must be a *subgroup.
  const std::vector<int>& lc_list(int U) const;
  const std::vector<int>& rc_list(int U) const;

  bool is_normal(int U) const;  // LC(U) == RC(U) as sets

  /// The unique minimum *subgroup under subgroup_leq, or -1.
  int minimum_subgroup() const { return minimum_subgroup_; }

 private:
  void compute_derived();

  int size_ = 0;
  std::vector<Triple> triples_;  // sorted lexicographically, deduplicated
  std::vector<std::string> labels_;

  bool dense_ = false;
  Bits rel_dense_;  // size^3 bits when small enough

  std::vector<char> star_;
  std::vector<int> stars_;
  std::vector<int> lc_raw_, rc_raw_;
  std::vector<Bits> leq_, leq_right_, up_, down_;
  std::vector<Bits> not_disjoint_;
  std::vector<int> diamond_raw_;
  std::vector<std::vector<int>> meet_;          // indexed by star positions
  std::vector<int> star_pos_;                   // element -> position in stars_, or -1
  std::vector<std::vector<int>> lc_lists_, rc_lists_;  // indexed by star positions
  int minimum_subgroup_ = -1;
};

/// A finite group presented by its multiplication table over an abstract
/// domain (e.g. CosetIds). Used for quotients and inverse limits.
struct GroupTable {
  std::vector<int> domain;  // external names of the elements
  std::vector<std::vector<int>> mul;  // mul[i][j] = table index of product
  std::vector<int> inv;
  int identity = 0;

  int size() const { return static_cast<int>(domain.size()); }
  /// Table inspection: associativity, identity and inverse laws.
  bool is_group(std::string* why = nullptr) const;
};

/// The group LC(U) of Remark-style quotients: product = dot, inverse =
/// diamond, identity = U. Requires is_normal(U); validates the table.
GroupTable quotient_group(const CoarseStructure& M, int U);

class PermGroup;
/// Left-regular permutation representation of a group table.
PermGroup table_to_permgroup(const GroupTable& T, std::string name = "");

}  // namespace coarse
