#pragma once

#include "atk/lie_pair.hpp"

#include <optional>

namespace atk {

/// Data for the invariant-connection correspondence on a homogeneous
/// principal bundle: g with an isotropy subalgebra h, a structure algebra k,
/// and the differentiated isotropy morphism dphi: h -> k.
///
/// Equivariance is imposed at the Lie algebra level (the infinitesimal form
/// of the group condition); results therefore assume a connected isotropy
/// group, and reports carry that flag.
class WangProblem {
public:
  WangProblem(LieAlgebra g, Matrix inclusion_h, LieAlgebra k, Matrix dphi);

  const LieAlgebra& g() const { return g_; }
  const LieAlgebra& k() const { return k_; }
  const Matrix& inclusion_h() const { return inclusion_h_; }
  const Matrix& dphi() const { return dphi_; }
  /// Induced structure on h.
  const LieAlgebra& h() const { return pair_.sub(); }
  std::size_t h_dim() const { return inclusion_h_.cols(); }

private:
  LieAlgebra g_;
  Matrix inclusion_h_;
  LieAlgebra k_;
  Matrix dphi_;
  LiePair pair_;  // validates the subalgebra and induces the h structure
};

/// Solutions phi: g -> k of  phi∘inclusion_h = dphi  and
/// phi([Y, X]) = [dphi(Y), phi(X)]_k  for all h-basis Y and g-basis X.
/// Unknown coordinates are the entries of phi, row-major. Empty iff the
/// bundle admits no invariant connection.
AffineSolutionSet wang_solve(const WangProblem& p);

Matrix map_from_vector(const WangProblem& p, const Matrix& x);
Matrix vector_from_map(const Matrix& phi);

/// The reductivity test: the Wang problem with k = h and dphi = id. On a
/// non-empty solution set, also returns the complement m = ker(particular)
/// with its ad(h)-invariance verified.
struct ReductiveResult {
  AffineSolutionSet solutions;
  std::optional<Subspace> complement;
  bool complement_invariant = false;
  bool reductive() const { return !solutions.empty; }
};
ReductiveResult reductive_test(const LieAlgebra& g, const Matrix& inclusion_h);

/// dphi ∘ phi0 for a reductive solution phi0; verified to solve the Wang
/// problem and to vanish on the complement ker(phi0).
Matrix canonical_connection(const WangProblem& p, const Matrix& phi0);

/// Compares the Wang solution dimension with the dimension of the space of
/// h-equivariant linear maps m -> k, computed as an independent linear
/// system over a reductive complement.
struct WangDimensionReport {
  bool base_reductive = false;
  std::size_t wang_dim = 0;
  std::size_t equivariant_hom_dim = 0;
  bool connected_isotropy_assumption = true;
  bool ok() const { return base_reductive && wang_dim == equivariant_hom_dim; }
};
WangDimensionReport wang_dimension_check(const WangProblem& p);

}  // namespace atk
