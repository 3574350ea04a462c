#pragma once

#include "atk/split_atiyah.hpp"

namespace atk {

/// Quotient realization of the extension of B by End(E): the product
/// algebra gl(E)×L modulo the image of a -> (∇̄_a, i_A(a)), with the induced
/// flat A-action D_a((δ,l)) = (([∇̄_a,δ], [i_A(a),l])) computed through an
/// explicit chart. Well-definedness on cosets and flatness are verified.
struct QuotientExtension {
  QuotientChart chart;  // ambient dim = module² + dim L
  Representation bott;  // A on the quotient, dim = module² + dim B
};
QuotientExtension build_quotient_extension(const Triad& triad);

/// Embedded realization on the carrier gl(E)⊕B with the flat action
/// ∇_a(δ,b) = ([∇̄_a,δ] + ∇̄_{eth_b a}, D_a b).
struct EmbeddedExtension {
  Representation bott;
};
EmbeddedExtension build_embedded_extension(const Triad& triad);
/// Same, with an alternative right splitting in place of the pair's i_B.
EmbeddedExtension build_embedded_extension(const Triad& triad, const Matrix& alt_i_b);

/// Split realization on End(E)⊕B, twisted by the cocycle of an extending
/// connection: D_a(φ⊕b) = ([∇̄_a,φ] + R(a⊗b)) ⊕ D_a b. Flatness here is a
/// consequence of ∇̄ being flat, so a failure is an internal error.
struct SplitExtension {
  Representation bott;
  CurvatureForm cocycle;
};
SplitExtension build_split_extension(const Triad& triad, const Connection& conn);

/// A complementary B-connection: a right splitting i_B together with an
/// assignment B -> End(E). No flatness is implied.
struct BConnection {
  Matrix i_b;
  std::vector<Matrix> assignment;
};

/// ∇° with ∇°_b = ∇_{i_B(b)}, the complementary side of an extending
/// connection.
BConnection restrict_connection(const Triad& triad, const Connection& conn);
/// ∇ with ∇_l = ∇̄_{pr_A(l)} + ∇°_{pr_B(l)}; the splitting of the
/// B-connection must be the triad's.
Connection extend_b_connection(const Triad& triad, const BConnection& bconn);

/// An invertible intertwiner between two flat actions, with both directions
/// stored and verified (mutual inverse, A-equivariance) by the iso_* makers.
struct Intertwiner {
  Matrix forward;
  Matrix backward;
};

Intertwiner iso_quotient_embedded(const Triad& triad);
Intertwiner iso_embedded_split(const Triad& triad, const Connection& conn);
/// Between the embedded models of two right splittings:
/// (δ,b) -> (δ + ∇̄_{I(b)}, b) with i'_B = i_B + i_A∘I.
Intertwiner iso_change_splitting(const Triad& triad, const Matrix& alt_i_b);
/// Between the split models of two extending connections:
/// φ⊕b -> (φ + ∇_{i_B(b)} - ∇'_{i_B(b)}) ⊕ b.
Intertwiner iso_change_connection(const Triad& triad, const Connection& a,
                                  const Connection& b);

/// B-connections versus extending L-connections: the two constructions
/// ∇°_b = ∇_{i_B(b)} and ∇_l = ∇̄_{pr_A(l)} + ∇°_{pr_B(l)} are mutually
/// inverse; checked on a family of assignments (the unit assignments plus
/// any supplied extras), along with the dimension bookkeeping
/// dim gl(E)×L = dim End(E) + dim A + dim B.
struct RoundtripReport {
  bool ok = false;
  std::size_t instances_checked = 0;
  bool dimension_split_ok = false;
};
RoundtripReport b_connection_roundtrip(const Triad& triad,
                                       const std::vector<std::vector<Matrix>>& extras = {});

/// The compatibility predicate computed four independent ways (full A⊗L
/// restriction; A⊗B cocycle; equivariance of the canonical splitting of the
/// split model; equivariance of the splitting of the embedded model). The
/// flags must agree; disagreement throws.
struct CompatibilityCheck {
  bool compatible = false;
  bool via_a_l = false;
  bool via_a_b = false;
  bool via_split_section = false;
  bool via_embedded_section = false;
};
CompatibilityCheck a_compatibility_flags(const Triad& triad, const Connection& conn);

/// Exactness and commutativity diagnostics for the web of short exact
/// sequences relating A, L, B, gl(E)×A, gl(E)×L, the quotient extension and
/// End(E). Each named check is a rank identity or an exact matrix identity.
struct HexagonReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }
};
HexagonReport hexagon_diagnostics(const Triad& triad, const Connection& conn);

}  // namespace atk
