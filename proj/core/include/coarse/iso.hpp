#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarse/coarse_structure.hpp"
#include "coarse/perm_group.hpp"
#include "coarse/rel_structure.hpp"

namespace coarse {

/// Isomorphism search between coarse structures: colour refinement on the
/// ternary relation first, then backtracking. Returns the first (hence
/// lexicographically least) bijection found, or nullopt when none exists.
std::optional<std::vector<int>> struct_iso(const CoarseStructure& M, const CoarseStructure& N);

/// Abstract group isomorphism by generator-image backtracking.
std::optional<std::vector<int>> group_iso(const PermGroup& G, const PermGroup& H);

struct KnsReport {
  bool group_isomorphic = false;
  bool coarse_isomorphic = false;
  std::optional<std::vector<int>> group_witness;
  std::optional<std::vector<int>> coarse_witness;
  int coarse_size_g = 0, coarse_size_h = 0;
};

/// Computes both sides of "G iso H iff M(G) iso M(H)" independently and
/// throws StructureError with a transcript if the verdicts disagree.
KnsReport kns_check(const PermGroup& G, const PermGroup& H,
                    int max_order = kDefaultSubgroupOrderBound);

/// Orbit labellings for every arity up to the bound.
struct OrbitStructure {
  int degree = 0;
  int max_arity = 0;
  std::vector<TupleOrbits> per_arity;  // index n-1 holds the n-orbits
};

OrbitStructure orbit_structure(const PermGroup& G, int max_arity,
                               long long max_tuples = 1 << 20);

/// One 2n-ary relation per arity: pairs of tuples in the same orbit.
RelationalStructure to_relational(const OrbitStructure& E);

struct ConjugacyReport {
  bool conjugate = false;
  std::optional<Perm> alpha;  // first conjugator in lexicographic order
};

/// Searches all alpha in Sym(degree) for alpha G alpha^-1 = H, checking
/// independently for each candidate that alpha is an isomorphism of the
/// orbit structures; a per-alpha verdict mismatch throws StructureError.
ConjugacyReport conjugacy_check(const PermGroup& G, const PermGroup& H, int max_arity);

struct Fingerprint {
  int depth = 0;
  std::string value;

  bool operator==(const Fingerprint&) const = default;
};

/// Canonical invariant by iterated type-counting refinement. Equal on
/// isomorphic structures at every depth; inequality is only a pre-filter.
Fingerprint ef_fingerprint(const RelationalStructure& S, int depth);
Fingerprint ef_fingerprint(const CoarseStructure& M, int depth);
Fingerprint ef_fingerprint(const OrbitStructure& E, int depth);

}  // namespace coarse
