#include "atk/lie_pair.hpp"

#include <stdexcept>

namespace atk {

namespace {

Matrix basis_vector(std::size_t dim, std::size_t i) {
  Matrix e(dim, 1);
  e.at(i, 0) = Rational(1);
  return e;
}

}  // namespace

LiePair::LiePair(LieAlgebra ambient, Matrix inclusion_a)
    : LiePair(std::move(ambient), inclusion_a,
              quotient_chart(inclusion_a.rows(),
                             Subspace(inclusion_a.rows(), inclusion_a))) {}

LiePair::LiePair(LieAlgebra ambient, Matrix inclusion_a, QuotientChart chart)
    : ambient_(std::move(ambient)),
      inclusion_a_(std::move(inclusion_a)),
      chart_(std::move(chart)),
      pr_a_(0, 0),
      sub_(inclusion_a_.cols()) {
  if (inclusion_a_.rows() != ambient_.dim())
    throw std::invalid_argument("inclusion does not land in the ambient algebra");
  if (rank(inclusion_a_) != inclusion_a_.cols())
    throw std::invalid_argument("inclusion is not injective");

  const Subspace image(ambient_.dim(), inclusion_a_);
  const std::size_t k = sub_dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Matrix br =
          ambient_.bracket(inclusion_a_.col(i), inclusion_a_.col(j));
      if (!image.contains(br))
        throw std::invalid_argument(
            "image is not closed under the bracket: witness basis pair (" +
            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }

  derive_pr_a();

  // Induced structure constants on A.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix br = pr_a_ * ambient_.bracket(inclusion_a_.col(i), inclusion_a_.col(j));
      for (std::size_t t = 0; t < k; ++t) sub_.c(i, j, t) = br.at(t, 0);
    }
}

void LiePair::derive_pr_a() {
  const std::size_t n = ambient_.dim();
  const std::size_t k = sub_dim();
  const Matrix change = inverse(hstack(inclusion_a_, chart_.section));
  pr_a_ = Matrix(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) pr_a_.at(i, j) = change.at(i, j);
}

Representation LiePair::bott() const {
  std::vector<Matrix> action;
  action.reserve(sub_dim());
  for (std::size_t i = 0; i < sub_dim(); ++i)
    action.push_back(pr_b() * ambient_.ad(inclusion_a_.col(i)) * i_b());
  return Representation(sub_, quotient_dim(), std::move(action));
}

Matrix LiePair::eth(const Matrix& b, const Matrix& a) const {
  return pr_a_ * ambient_.bracket(i_b() * b, inclusion_a_ * a);
}

Matrix LiePair::eth_matrix(std::size_t j) const {
  const std::size_t k = sub_dim();
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    m.set_col(i, eth(basis_vector(quotient_dim(), j), basis_vector(k, i)));
  return m;
}

BracketDecompositionReport LiePair::bracket_decomposition_check() const {
  BracketDecompositionReport report;
  const Representation d = bott();
  for (std::size_t i = 0; i < sub_dim(); ++i)
    for (std::size_t j = 0; j < quotient_dim(); ++j) {
      const Matrix a = basis_vector(sub_dim(), i);
      const Matrix b = basis_vector(quotient_dim(), j);
      const Matrix lhs = ambient_.bracket(inclusion_a_ * a, i_b() * b);
      const Matrix rhs = i_b() * (d.action()[i] * b) - inclusion_a_ * eth(b, a);
      if (!(lhs == rhs)) report.violations.push_back({i, j});
    }
  return report;
}

Matrix LiePair::splitting_difference(const Matrix& alt_i_b) const {
  if (alt_i_b.rows() != ambient_.dim() || alt_i_b.cols() != quotient_dim())
    throw std::invalid_argument("alternative splitting shape mismatch");
  if (!(pr_b() * alt_i_b == Matrix::identity(quotient_dim())))
    throw std::invalid_argument("alternative is not a right splitting");
  const Matrix diff = alt_i_b - i_b();
  const Matrix i = pr_a_ * diff;
  if (!(inclusion_a_ * i == diff))
    throw std::logic_error("splitting difference does not factor through A");
  return i;
}

LiePair LiePair::with_splitting(const Matrix& alt_i_b) const {
  splitting_difference(alt_i_b);  // validates
  return LiePair(ambient_, inclusion_a_, chart_.with_section(alt_i_b));
}

}  // namespace atk
