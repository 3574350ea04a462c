#include "atk/lie_algebra.hpp"

#include <stdexcept>

namespace atk {

std::string LieValidationReport::summary() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& [i, j] : antisymmetry_violations)
    s += "antisymmetry(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") ";
  for (const auto& t : jacobi_violations)
    s += "jacobi(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
         std::to_string(t[2] + 1) + ") ";
  if (!s.empty()) s.pop_back();
  return s;
}

LieAlgebra::LieAlgebra(std::size_t dim)
    : dim_(dim), c_(dim * dim * dim), anchor_(0, dim) {}

LieAlgebra LieAlgebra::from_entries(
    std::size_t dim,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries,
    bool antisymmetric_completion) {
  LieAlgebra g(dim);
  for (const auto& [i, j, k, v] : entries) {
    if (i >= dim || j >= dim || k >= dim)
      throw std::invalid_argument("structure constant index out of range");
    g.c(i, j, k) += v;
    if (antisymmetric_completion && i != j) g.c(j, i, k) -= v;
  }
  return g;
}

Matrix LieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim_ || y.rows() != dim_ || x.cols() != 1 || y.cols() != 1)
    throw std::invalid_argument("bracket argument shape mismatch");
  Matrix out(dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.at(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y.at(j, 0).is_zero()) continue;
      const Rational f = x.at(i, 0) * y.at(j, 0);
      for (std::size_t k = 0; k < dim_; ++k) out.at(k, 0) += f * c(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Matrix& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Matrix ej(dim_, 1);
    ej.at(j, 0) = Rational(1);
    m.set_col(j, bracket(x, ej));
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix ei(dim_, 1);
  ei.at(i, 0) = Rational(1);
  return ad(ei);
}

LieValidationReport LieAlgebra::validate() const {
  LieValidationReport report;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      bool bad = false;
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) bad = true;
      if (bad) report.antisymmetry_violations.push_back({i, j});
    }
  // With antisymmetry in place the Jacobiator is alternating, so triples
  // i<j<k cover everything.
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Matrix ei(dim_, 1), ej(dim_, 1), ek(dim_, 1);
        ei.at(i, 0) = Rational(1);
        ej.at(j, 0) = Rational(1);
        ek.at(k, 0) = Rational(1);
        const Matrix jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                           bracket(bracket(ek, ei), ej);
        if (!jac.is_zero()) report.jacobi_violations.push_back({i, j, k});
      }
  return report;
}

}  // namespace atk
