#include "atk/linalg.hpp"

#include <stdexcept>

namespace atk {

Subspace::Subspace(std::size_t ambient_dim, Matrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_dim_)
    throw std::invalid_argument("subspace basis does not fit the ambient space");
  if (rank(basis_) != basis_.cols())
    throw std::invalid_argument("subspace basis columns are not independent");
}

bool Subspace::contains(const Matrix& vec) const {
  if (vec.rows() != ambient_dim_ || vec.cols() != 1)
    throw std::invalid_argument("vector shape mismatch in membership test");
  return !solve_affine(basis_, vec).empty;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis().col(j))) return false;
  return true;
}

QuotientChart QuotientChart::with_section(const Matrix& alt_section) const {
  if (!(projection * alt_section == Matrix::identity(quotient_dim())))
    throw std::invalid_argument("alternative section is not a right splitting");
  QuotientChart c{ambient_dim, subspace, projection, alt_section};
  return c;
}

bool AffineSolutionSet::contains(const Matrix& vec) const {
  if (empty) return false;
  return homogeneous.contains(vec - particular);
}

AffineSolutionSet solve_affine(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows() || b.cols() != 1)
    throw std::invalid_argument("right-hand side shape mismatch");
  const Rref r = reduced_row_echelon(hstack(a, b));
  AffineSolutionSet out{true, Matrix(a.cols(), 1), Subspace(a.cols(), kernel_basis(a))};
  // A pivot in the appended column means b is outside the image of A.
  for (std::size_t c : r.pivot_cols)
    if (c == a.cols()) return out;
  out.empty = false;
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
    out.particular.at(r.pivot_cols[p], 0) = r.mat.at(p, a.cols());
  return out;
}

Subspace kernel(const Matrix& a) { return Subspace(a.cols(), kernel_basis(a)); }

Subspace image(const Matrix& a) { return Subspace(a.rows(), image_basis(a)); }

QuotientChart quotient_chart(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim)
    throw std::invalid_argument("subspace does not fit the ambient space");
  const std::size_t n = ambient_dim;
  const std::size_t q = n - sub.dim();

  // Complement coordinates: the non-pivot columns of rref(basis^T).
  const Rref r = reduced_row_echelon(sub.basis().transpose());
  Matrix section(n, q);
  {
    std::size_t p = 0, k = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
        ++p;
        continue;
      }
      section.at(c, k++) = Rational(1);
    }
  }

  // Coordinates with respect to basis ⊕ section; the projection reads off
  // the section component.
  const Matrix change = inverse(hstack(sub.basis(), section));
  Matrix projection(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) projection.at(i, j) = change.at(sub.dim() + i, j);

  return QuotientChart{ambient_dim, sub, projection, section};
}

}  // namespace atk
