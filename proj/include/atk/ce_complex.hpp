#pragma once

#include "atk/connection.hpp"
#include "atk/linalg.hpp"

#include <array>

namespace atk {

/// The Chevalley–Eilenberg complex of a flat representation, in degrees 0..3:
/// C^k = Λ^k A* ⊗ V with the multi-index basis i1<...<ik ordered
/// lexicographically, tensored with the module basis.
///
/// The differential follows the alternating-sum formula
///   (dω)(a_0..a_k) = Σ (-1)^i ∇_{a_i} ω(..â_i..)
///                  + Σ_{i<j} (-1)^{i+j} ω([a_i,a_j], ..â_i..â_j..),
/// and d∘d = 0 is verified on construction.
class CEComplex {
public:
  explicit CEComplex(Representation rep);

  const Representation& rep() const { return rep_; }
  std::size_t cochain_dim(std::size_t k) const { return dims_.at(k); }
  /// d_k : C^k -> C^{k+1}, for k = 0, 1, 2.
  const Matrix& differential(std::size_t k) const { return d_.at(k); }

  /// dim H^k = dim ker d_k - rank d_{k-1}, k = 0..2.
  std::size_t cohomology_dim(std::size_t k) const;
  bool is_cocycle(std::size_t k, const Matrix& omega) const;
  /// Solves d_{k-1} s = omega for a k-cocycle omega (k = 1 or 2); the
  /// solution set is empty iff omega is not a coboundary.
  AffineSolutionSet coboundary_witness(std::size_t k, const Matrix& omega) const;

private:
  Representation rep_;
  std::array<std::size_t, 4> dims_;
  std::array<Matrix, 3> d_;
};

/// The coefficient module of the cocycle theory: B* ⊗ End(E) with the
/// A-action (D_a w)(b) = [∇̄_a, w(b)] - w(D_a b), assembled from the dual
/// Bott action and the commutator action. Flatness is verified.
Representation coefficient_module(const Triad& triad);

/// A⊗B table as a 1-cochain of the coefficient module, with the convention
/// ω(a)(b) = R(a⊗b). Coordinates: a-index ⊗ (b-index ⊗ unit index).
Matrix cocycle_cochain(const CurvatureForm& ab_table);

/// A map B -> End(E) (e.g. a connection difference) as a 0-cochain of the
/// coefficient module.
Matrix zero_cochain(const std::vector<Matrix>& per_b_basis);

}  // namespace atk
