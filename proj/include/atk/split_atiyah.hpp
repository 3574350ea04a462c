#pragma once

#include "atk/connection.hpp"

namespace atk {

/// The direct product Lie algebra gl(module_dim) × L in the basis
/// (elementary units row-major, then the basis of L).
LieAlgebra gl_product(std::size_t module_dim, const LieAlgebra& l);

/// The operator δ -> [x, δ] on End(E) in unit coordinates:
/// vec([x, δ]) = commutator_operator(x) · vec(δ).
Matrix commutator_operator(const Matrix& x);

/// End(E) ⊕ L with the bracket twisted by a connection:
///   [φ1⊕l1, φ2⊕l2] = ([φ1,φ2] + [∇_{l1},φ2] - [∇_{l2},φ1] + R(l1,l2)) ⊕ [l1,l2].
/// Passes the Jacobi identity exactly for every connection (verified on
/// construction).
struct SplitAtiyahAlgebra {
  LieAlgebra algebra;  // dim = module_dim² + dim L
  Connection source;
  std::size_t module_dim;
};

SplitAtiyahAlgebra build_split_atiyah(const Connection& conn);

/// Checks that φ⊕l -> (φ + ∇_l, l) is a Lie algebra isomorphism onto
/// gl(E) × L; lists violating basis pairs (none expected).
struct IsoCheckReport {
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};
IsoCheckReport split_iso_check(const Connection& conn);

/// An End(E)-valued alternating 3-form on L, stored on triples i<j<k.
struct ThreeForm {
  std::size_t l_dim = 0, module_dim = 0;
  std::vector<Matrix> table;  // lex order over i<j<k

  static std::size_t count(std::size_t n) { return n * (n - 1) * (n - 2) / 6; }
  const Matrix& at(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;
};

/// d^∇ R^∇, assembled from the degree-2 case of the Chevalley–Eilenberg
/// formula with End(E) carrying the commutator action of ∇. Identically
/// zero for every connection; computed, not assumed.
ThreeForm bianchi(const Connection& conn);

/// End(E)-component of [[x,y],z] + cyclic in End(E)⊕∇L for the pure-L basis
/// triples x=0⊕l_i, etc., expanded through the twisted bracket. Equals the
/// negative of bianchi(conn) term by term.
ThreeForm split_jacobiator(const Connection& conn);

/// The split algebroid together with its canonical flat connection
/// φ⊕l -> φ + ∇_l on E (a representation of the twisted bracket), and the
/// naturality fact ∇_l = canonical(0⊕l).
struct UniversalConstruction {
  SplitAtiyahAlgebra algebroid;
  Representation canonical;
  bool natural;
};
UniversalConstruction universal_construction(const Connection& conn);

}  // namespace atk
