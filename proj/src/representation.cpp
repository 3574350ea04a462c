#include "atk/representation.hpp"

#include <stdexcept>

namespace atk {

Representation::Representation(LieAlgebra algebra, std::size_t module_dim,
                               std::vector<Matrix> action)
    : algebra_(std::move(algebra)), module_dim_(module_dim), action_(std::move(action)) {
  if (action_.size() != algebra_.dim())
    throw std::invalid_argument("representation needs one action matrix per basis vector");
  for (const Matrix& m : action_)
    if (m.rows() != module_dim_ || m.cols() != module_dim_)
      throw std::invalid_argument("action matrix shape mismatch");
  if (auto bad = flatness_violation())
    throw std::invalid_argument("action is not flat at basis pair (" +
                                std::to_string(bad->first + 1) + "," +
                                std::to_string(bad->second + 1) + ")");
}

Representation Representation::trivial(LieAlgebra algebra, std::size_t module_dim) {
  std::vector<Matrix> action(algebra.dim(), Matrix::zero(module_dim, module_dim));
  return Representation(std::move(algebra), module_dim, std::move(action));
}

Matrix Representation::act(const Matrix& x) const {
  if (x.rows() != algebra_.dim() || x.cols() != 1)
    throw std::invalid_argument("representation argument shape mismatch");
  Matrix out(module_dim_, module_dim_);
  for (std::size_t i = 0; i < algebra_.dim(); ++i)
    if (!x.at(i, 0).is_zero()) out = out + action_[i] * x.at(i, 0);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Representation::flatness_violation() const {
  const std::size_t n = algebra_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix ei(n, 1), ej(n, 1);
      ei.at(i, 0) = Rational(1);
      ej.at(j, 0) = Rational(1);
      if (!(act(algebra_.bracket(ei, ej)) == commutator(action_[i], action_[j])))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace atk
