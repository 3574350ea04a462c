#pragma once

#include "atk/linalg.hpp"
#include "atk/representation.hpp"

#include <string>

namespace atk {

struct BracketDecompositionReport {
  // Basis pairs (a_i, b_j) where i_B(D_a b) - i_A(eth_b a) != [i_A(a), i_B(b)].
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};

/// A Lie pair: an ambient Lie algebra L with a subalgebra A (given by an
/// injective inclusion matrix whose image is closed under the bracket) and a
/// chart for the quotient B = L/A. The chart's section realizes the
/// non-canonical right splitting i_B; pr_A is derived from
/// i_A∘pr_A + i_B∘pr_B = id.
class LiePair {
public:
  /// Throws on a non-injective inclusion; a closure failure names a witness
  /// basis pair in the exception message.
  LiePair(LieAlgebra ambient, Matrix inclusion_a);

  const LieAlgebra& ambient() const { return ambient_; }
  /// Induced structure constants on A.
  const LieAlgebra& sub() const { return sub_; }

  std::size_t sub_dim() const { return inclusion_a_.cols(); }
  std::size_t quotient_dim() const { return chart_.quotient_dim(); }

  const Matrix& inclusion_a() const { return inclusion_a_; }
  const Matrix& pr_a() const { return pr_a_; }
  const Matrix& i_b() const { return chart_.section; }
  const Matrix& pr_b() const { return chart_.projection; }
  const QuotientChart& chart() const { return chart_; }

  /// The flat Bott action of A on B: D_a b = pr_B([i_A(a), i_B(b)]).
  /// Flatness is verified by the Representation constructor.
  Representation bott() const;

  /// eth_b a = pr_A([i_B(b), i_A(a)]), bilinear; arguments in B- and
  /// A-coordinates, result in A-coordinates.
  Matrix eth(const Matrix& b, const Matrix& a) const;
  /// eth with the B-argument fixed to basis vector j, as a map A -> A.
  Matrix eth_matrix(std::size_t j) const;

  /// Verifies i_B(D_a b) - i_A(eth_b a) = [i_A(a), i_B(b)] for all basis
  /// pairs, exactly.
  BracketDecompositionReport bracket_decomposition_check() const;

  /// The map I: B -> A with i'_B = i_B + i_A ∘ I, for any other right
  /// splitting of the quotient sequence. Throws if alt_i_b is not a
  /// splitting.
  Matrix splitting_difference(const Matrix& alt_i_b) const;

  /// The same pair with the splitting replaced by alt_i_b.
  LiePair with_splitting(const Matrix& alt_i_b) const;

private:
  LiePair(LieAlgebra ambient, Matrix inclusion_a, QuotientChart chart);
  void derive_pr_a();

  LieAlgebra ambient_;
  Matrix inclusion_a_;
  QuotientChart chart_;
  Matrix pr_a_;
  LieAlgebra sub_;
};

}  // namespace atk
