#pragma once

#include "atk/matrix.hpp"

namespace atk {

/// A linear subspace of Q^n, carried by a basis matrix whose columns are
/// linearly independent (checked on construction).
class Subspace {
public:
  Subspace(std::size_t ambient_dim, Matrix basis);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& vec) const;
  bool contains(const Subspace& other) const;

private:
  std::size_t ambient_dim_;
  Matrix basis_;
};

/// A chart for the quotient Q^n / S: a projection p (n -> q) and a section
/// s (q -> n) with p∘s = id, p∘(basis of S) = 0 and q = n - dim S.
struct QuotientChart {
  std::size_t ambient_dim = 0;
  Subspace subspace;
  Matrix projection;  // q×n
  Matrix section;     // n×q

  std::size_t quotient_dim() const { return projection.rows(); }
  /// Same chart with the section replaced (the alternative must also be a
  /// right inverse of the projection; checked).
  QuotientChart with_section(const Matrix& alt_section) const;
};

/// The full solution set of a linear system A x = b: a particular solution
/// plus a basis of the homogeneous solutions, or empty.
struct AffineSolutionSet {
  bool empty = true;
  Matrix particular;     // n×1, meaningful iff !empty
  Subspace homogeneous;  // kernel of A

  std::size_t dim() const { return homogeneous.dim(); }
  bool contains(const Matrix& vec) const;
};

/// Solves A x = b exactly; empty iff b is not in the image of A.
AffineSolutionSet solve_affine(const Matrix& a, const Matrix& b);

/// { x : Ax = 0 } as a subspace of the domain.
Subspace kernel(const Matrix& a);
/// The column space as a subspace of the codomain.
Subspace image(const Matrix& a);

/// Deterministic chart for Q^n / sub: the section is spanned by the standard
/// basis vectors at the non-pivot columns of the rref of the subspace basis.
QuotientChart quotient_chart(std::size_t ambient_dim, const Subspace& sub);

}  // namespace atk
