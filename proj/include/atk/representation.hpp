#pragma once

#include "atk/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace atk {

/// A flat connection of a Lie algebra on a module: one action matrix per
/// basis vector, with action([x,y]) = [action(x), action(y)] holding exactly
/// for all basis pairs. Construction verifies flatness and throws on failure
/// unless `unchecked` is used (for internal call sites that verify later).
class Representation {
public:
  Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> action);

  static Representation trivial(LieAlgebra algebra, std::size_t module_dim);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& action() const { return action_; }

  /// Action of an arbitrary algebra element given by coordinates.
  Matrix act(const Matrix& x) const;
  Matrix act_on(const Matrix& x, const Matrix& v) const { return act(x) * v; }

  /// First basis pair violating flatness, if any.
  std::optional<std::pair<std::size_t, std::size_t>> flatness_violation() const;

private:
  LieAlgebra algebra_;
  std::size_t module_dim_;
  std::vector<Matrix> action_;
};

}  // namespace atk
