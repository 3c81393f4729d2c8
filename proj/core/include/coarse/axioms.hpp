#pragma once

#include <string>
#include <vector>

#include "coarse/coarse_structure.hpp"

namespace coarse {

struct AxiomReport {
  std::string axiom_id;
  bool holds = true;
  std::vector<int> witness;  // element indices of the first violation
  std::string detail;        // which clause, or certificate data
  double elapsed_s = 0.0;
};

// The axiom battery. Checkers never throw on malformed structures; they
// report the lexicographically least violation instead.
AxiomReport check_basic(const CoarseStructure& M);              // 0(a)-(c)
AxiomReport check_coset_partition(const CoarseStructure& M);    // 1, left and right
AxiomReport check_monotone(const CoarseStructure& M);           // 2
AxiomReport check_coset_restriction(const CoarseStructure& M);  // 3, left and right
AxiomReport check_inverses(const CoarseStructure& M);           // 4(a)-(c)
AxiomReport check_products(const CoarseStructure& M);           // 5
AxiomReport check_negative_subset(const CoarseStructure& M);    // 7(a),(b)
/// The double-coset subgroup schema; tuple length bounded by n_max
/// (0 selects the default: |LC(V)| of the smallest-index *subgroup).
AxiomReport check_roelcke(const CoarseStructure& M, int n_max = 0);
AxiomReport check_assoc_firstorder(const CoarseStructure& M);   // (A.B).C = A.(B.C)
AxiomReport check_profinite_condition(const CoarseStructure& M);

/// First-order faithfulness surrogate delta(W); W must be a *subgroup.
AxiomReport check_delta(const CoarseStructure& M, int W);
/// Covering families of k-tuples of left *cosets of V with uniform
/// one-sided witnesses, for each k <= k_max. Certificate sizes go in
/// `detail`; `witness` holds the first uncoverable tuple on failure.
AxiomReport check_formally_oligomorphic(const CoarseStructure& M, int V, int k_max);
/// For every U, the full tuple of LC(V) must pin every S with S B <= B
/// for all B below U (the empty-tuple convention is subsumed).
AxiomReport check_strong_continuity(const CoarseStructure& M, int V);

/// Runs the ten structure-level checkers above in order.
std::vector<AxiomReport> check_all(const CoarseStructure& M, int roelcke_n_max = 0);

// --- the named first-order formulas -----------------------------------

/// phi(A,B,C): no D below A and E below B with R(D,E,C).
bool phi(const CoarseStructure& M, int A, int B, int C);
/// {C : phi(A,B,C)} as a bitset row.
Bits phi_row(const CoarseStructure& M, int A, int B);

/// psi_n(A_0..A_{n-1}, B, V): no C below B with phi(V,A_i,C) for all i.
/// Requires every A_i in LC(V).
bool psi(const CoarseStructure& M, const std::vector<int>& As, int B, int V);

/// theta_n(A_0..A_{n-1}, V): the union of the double cosets V^ A_i^ is
/// closed under products and inverses. Requires every A_i in LC(V).
bool theta(const CoarseStructure& M, const std::vector<int>& As, int V);

}  // namespace coarse
