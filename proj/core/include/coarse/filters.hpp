#pragma once

#include <string>
#include <vector>

#include "coarse/builders.hpp"
#include "coarse/coarse_structure.hpp"
#include "coarse/perm_group.hpp"

namespace coarse {

/// A full filter: upward closed, downward directed, one left and one
/// right *coset of every *subgroup. Stored as a bitset over the domain.
struct FullFilter {
  Bits members;

  bool contains(int A) const { return members.test(static_cast<size_t>(A)); }
  bool operator==(const FullFilter&) const = default;
};

/// Checks the three defining conditions; fills `why` on failure.
bool is_full_filter(const CoarseStructure& M, const Bits& members, std::string* why = nullptr);

/// Complete enumeration via upward closures of the left *cosets of the
/// minimum *subgroup. Throws StructureError("no minimum subgroup") when
/// the subgroup order has no minimum.
std::vector<FullFilter> full_filters(const CoarseStructure& M);

/// {C : exists A in x, B in y with R(A,B,C)}; validated as a full filter.
FullFilter filter_product(const CoarseStructure& M, const FullFilter& x, const FullFilter& y);

/// {A-diamond : A in x}.
FullFilter filter_inverse(const CoarseStructure& M, const FullFilter& x);

/// The filter generated by the *subgroups.
FullFilter filter_neutral(const CoarseStructure& M);

struct FilterGroup {
  std::vector<FullFilter> elements;
  GroupTable table;  // domain = filter indices

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const FullFilter& x) const;  // -1 if absent
  int identity() const { return table.identity; }
  int mul(int i, int j) const { return table.mul[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int inv(int i) const { return table.inv[static_cast<size_t>(i)]; }
};

/// Full multiplication/inverse tables, with the group laws (associativity
/// included) verified exhaustively; violations throw StructureError with
/// the witness in the message.
FilterGroup filter_group(const CoarseStructure& M);

/// The basic clopen set: filter indices containing A.
Bits hat(const FilterGroup& F, int A);

/// x·A for A in LC(V): the unique B in LC(V) with some S in x, R(S,A,B).
int gamma_action(const CoarseStructure& M, int V, const FullFilter& x, int A);

struct ThetaEmbedding {
  PermGroup image;               // on indices of lc_list(W)
  std::vector<Perm> filter_perms;  // per filter index
  std::vector<int> kernel;       // filter indices acting as the identity
};

/// The permutation action of the filter group on lc_list(W), with image
/// group and kernel. Non-faithful actions simply report a kernel.
ThetaEmbedding theta_embedding(const CoarseStructure& M, const FilterGroup& F, int W);
ThetaEmbedding theta_embedding(const CoarseStructure& M, int W);

struct ReconstructReport {
  bool ok = true;
  std::string detail;  // first counterexample when !ok
  int group_order = 0;
  int filter_count = 0;
};

/// Verifies g -> {A : A contains g} is a group isomorphism onto the filter
/// group of the coarse structure of G, and that intersection inverts it.
ReconstructReport reconstruct_check(const PermGroup& G,
                                    int max_order = kDefaultSubgroupOrderBound);
ReconstructReport reconstruct_check(const GroupCoarse& GC);

struct InverseLimitReport {
  bool ok = true;
  std::string detail;
  GroupTable limit;                          // the inverse-limit group
  std::vector<std::vector<int>> level_maps;  // p_k as index maps LC(N_{k+1}) -> LC(N_k)
  bool matches_filter_group = false;
};

/// Rebuilds the group from a marked descending normal chain: quotients
/// G_k on LC(N_k), connecting maps by coset inclusion, inverse limit of
/// coherent sequences, and the isomorphism f -> {C : some f(k) below C}
/// onto the filter group, verified element by element.
InverseLimitReport inverse_limit_reconstruct(const CoarseStructure& M,
                                             const std::vector<int>& chain);

}  // namespace coarse
