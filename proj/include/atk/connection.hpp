#pragma once

#include "atk/lie_pair.hpp"

#include <optional>

namespace atk {

/// A connection of a Lie algebra L on a module E: a linear map L -> End(E)
/// given per basis vector. No flatness is required; over the point base the
/// Leibniz condition is vacuous.
struct Connection {
  LieAlgebra algebra;
  std::size_t module_dim = 0;
  std::vector<Matrix> assignment;

  Connection(LieAlgebra alg, std::size_t mod_dim, std::vector<Matrix> assign);

  /// Value on an arbitrary element given by coordinates.
  Matrix operator()(const Matrix& x) const;
  bool flat() const;
};

/// A Lie triad: a Lie pair (L, A) together with a module E carrying a flat
/// A-connection.
struct Triad {
  LiePair pair;
  Representation e_rep;  // flat A-action on E

  Triad(LiePair p, Representation rep);
  std::size_t module_dim() const { return e_rep.module_dim(); }
};

/// An End(E)-valued two-argument table: the curvature on Λ²L, or its
/// restriction to A⊗B or A⊗L.
struct CurvatureForm {
  enum class Domain { WedgeLL, AtimesB, AtimesL };
  Domain domain;
  std::size_t first_dim = 0, second_dim = 0;
  std::vector<Matrix> table;  // row-major [i * second_dim + j]

  const Matrix& at(std::size_t i, std::size_t j) const { return table[i * second_dim + j]; }
  Matrix& at(std::size_t i, std::size_t j) { return table[i * second_dim + j]; }
  bool is_zero() const;
  /// Linear extension in both slots.
  Matrix eval(const Matrix& x, const Matrix& y) const;
};

/// R(l1,l2) = [nabla_l1, nabla_l2] - nabla_[l1,l2] on Λ²L.
CurvatureForm curvature(const Connection& conn);

/// The L-connection with values nabla_bar on i_A(A) and the given
/// assignment on i_B(B).
Connection extend_connection(const Triad& triad, const std::vector<Matrix>& b_assignment);

/// First basis vector of A where conn ∘ i_A differs from the triad's flat
/// A-connection, if any.
std::optional<std::size_t> extending_violation(const Triad& triad, const Connection& conn);

/// The A⊗B restriction of the curvature of an extending connection,
/// R(a⊗b) = [nabla_a, nabla_{i_B(b)}] - nabla_[i_A(a), i_B(b)].
/// Refuses a non-extending connection (the formula presumes one).
CurvatureForm atiyah_cocycle(const Triad& triad, const Connection& conn);

/// The A⊗L restriction of the curvature.
CurvatureForm curvature_a_l(const Triad& triad, const Connection& conn);

/// True iff the A⊗B cocycle table vanishes identically.
bool is_a_compatible(const Triad& triad, const Connection& conn);

}  // namespace atk
