#pragma once

#include "atk/extension.hpp"

namespace atk {

/// Two Lie algebras with mutual flat actions. Flatness of each action is
/// enforced on construction; the mixed compatibility conditions are the
/// subject of check_matched and may fail for hand-built data.
struct MatchedPair {
  LieAlgebra a;
  LieAlgebra b;
  Representation a_on_b;  // algebra a acting on the space of b
  Representation b_on_a;

  MatchedPair(LieAlgebra a_alg, LieAlgebra b_alg, Representation ab, Representation ba);
};

/// The two mixed derivation-style conditions, checked on all basis triples.
/// The anchor condition is vacuous over the point base and recorded as such.
struct MatchedCheckReport {
  std::vector<std::array<std::size_t, 3>> condition_i_violations;   // (a, b, b')
  std::vector<std::array<std::size_t, 3>> condition_ii_violations;  // (b, a, a')
  bool anchor_condition_vacuous = true;
  bool ok() const { return condition_i_violations.empty() && condition_ii_violations.empty(); }
};
MatchedCheckReport check_matched(const MatchedPair& mp);

/// The Lie algebra on A⊕B with [a,b] = D_a b - D_b a, in the basis
/// (A basis, then B basis). Throws when check_matched fails; the result
/// passes the Jacobi identity (verified).
LieAlgebra build_matched_sum(const MatchedPair& mp);

/// Splits an algebra along two complementary subalgebras and extracts the
/// mutual actions. Throws when the images are not complementary subalgebras
/// (witness in the message).
MatchedPair recognize_matched(const LieAlgebra& l, const Matrix& incl_a, const Matrix& incl_b);

/// Structure constants of l in the basis (columns of incl_a, then incl_b).
LieAlgebra adapted_structure(const LieAlgebra& l, const Matrix& incl_a, const Matrix& incl_b);

/// For a triad whose splitting image is a subalgebra (so L = A ⋈ B along
/// the chart), verifies End(E)⊕∇L ≅ A ⋈ (End(E)⊕∇B): the mutual actions
/// pass check_matched, the identity-shaped basis permutation is a Lie
/// algebra isomorphism, and End(E)⊕∇B -> End(E)⊕∇L commutes with the
/// inclusions and projections.
struct MatchedDecompositionReport {
  bool actions_matched = false;
  bool sum_isomorphic = false;
  bool square_commutes = false;
  bool ok() const { return actions_matched && sum_isomorphic && square_commutes; }
};
MatchedDecompositionReport matched_atiyah_decomposition(const Triad& triad,
                                                        const Connection& conn);

/// Three-block decomposition of the curvature of an extending connection on
/// a matched triad, plus the flatness biconditional.
struct CurvatureSplitReport {
  bool aa_zero = false;
  bool ab_matches_cocycle = false;
  bool bb_matches_b_curvature = false;
  bool flat = false;
  bool cocycle_zero = false;
  bool b_curvature_zero = false;
  bool biconditional_ok = false;
  bool ok() const {
    return aa_zero && ab_matches_cocycle && bb_matches_b_curvature && biconditional_ok;
  }
};
CurvatureSplitReport matched_curvature_split(const Triad& triad, const Connection& conn);

/// All solutions of δ[x,y] = [δx, y] + [x, δy] inside End(L), with the
/// commutator closure of the carrier verified.
struct DerivationAlgebra {
  std::size_t algebra_dim = 0;
  Subspace carrier;  // inside Q^{dim²}, row-major matrix coordinates
  bool closed = false;

  std::size_t dim() const { return carrier.dim(); }
  Matrix basis_matrix(std::size_t i) const;
};
DerivationAlgebra derivation_algebra(const LieAlgebra& l);

/// A Lie algebra g acting on L by derivations through a morphism
/// g -> Der(L) yields the semidirect matched pair (action on one side, zero
/// action back). Throws when some action matrix is not a derivation or the
/// map is not a morphism (witness in the message).
MatchedPair equivariant_structure(const LieAlgebra& g, const LieAlgebra& l,
                                  const std::vector<Matrix>& action);

/// g-invariance of an L-connection under compatible g-actions on L and E:
/// X^E_v ∇_l - ∇_l X^E_v - ∇_{X^L_v l} = 0 for all basis pairs.
struct GInvarianceReport {
  bool invariant = false;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (g index, L index)
};
GInvarianceReport is_g_invariant(const Representation& g_on_l, const Representation& g_on_e,
                                 const Connection& conn);

}  // namespace atk
