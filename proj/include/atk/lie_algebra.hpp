#pragma once

#include "atk/matrix.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace atk {

/// Report of a structure-constant validation run. Empty lists mean the table
/// defines a Lie algebra. Indices are 0-based.
struct LieValidationReport {
  std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations;
  std::vector<std::array<std::size_t, 3>> jacobi_violations;
  bool ok() const { return antisymmetry_violations.empty() && jacobi_violations.empty(); }
  std::string summary() const;
};

/// A finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
///
/// This is the base-point model of a Lie algebroid: the anchor is the zero
/// map into the (trivial) tangent space of the point, so the Leibniz rule
/// holds vacuously and sections are plain vectors. The anchor is kept as an
/// explicit (0×dim) zero matrix so the data model matches the definition.
class LieAlgebra {
public:
  explicit LieAlgebra(std::size_t dim);
  static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

  /// Builds from sparse entries (i, j, k, value), 0-based, meaning
  /// [e_i, e_j] has coefficient value on e_k. When antisymmetric_completion
  /// is set, each entry also contributes -value to c(j,i,k).
  static LieAlgebra from_entries(
      std::size_t dim,
      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries,
      bool antisymmetric_completion = true);

  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// [x, y] for coordinate columns; bilinear extension of the table.
  Matrix bracket(const Matrix& x, const Matrix& y) const;
  /// ad(x): y -> [x, y] as a dim×dim matrix.
  Matrix ad(const Matrix& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// The anchor of the point model: the zero map into a 0-dimensional space.
  const Matrix& anchor() const { return anchor_; }

  /// Checks antisymmetry for all pairs and the Jacobi identity for all
  /// basis triples i<j<k, exactly.
  LieValidationReport validate() const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
  std::size_t dim_;
  std::vector<Rational> c_;
  Matrix anchor_;
};

}  // namespace atk
