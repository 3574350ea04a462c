#pragma once

#include "atk/ce_complex.hpp"

namespace atk {

/// Outcome of the obstruction computation for a Lie triad. When the class
/// vanishes, `witness` holds a 0-cochain s with d s = cocycle; otherwise the
/// rank pair certifies non-membership: appending the cocycle to the
/// coboundary map strictly increases the rank.
struct AtiyahClassResult {
  CurvatureForm cocycle;        // A⊗B table of the canonical extending connection
  bool vanishes = false;        // true iff the cocycle is a coboundary
  std::optional<Matrix> witness;
  std::size_t coboundary_rank = 0;  // rank of d_0
  std::size_t augmented_rank = 0;   // rank of [d_0 | cocycle]
  std::size_t h0_dim = 0;       // dim H^0(A, B*⊗End(E))
  std::size_t h1_dim = 0;       // dim H^1(A, B*⊗End(E))
};

/// Computes the cocycle of the extending connection with zero assignment on
/// i_B(B), asserts closedness, and decides coboundary membership.
AtiyahClassResult atiyah_class(const Triad& triad);

/// A witness s (from a vanishing class) turned into a compatible extending
/// connection: the assignment b -> -s(b).
Connection compatible_from_witness(const Triad& triad, const Matrix& witness);

struct ShiftCheckReport {
  bool ok = false;
  Matrix lhs;  // cochain of R' - R
  Matrix rhs;  // d of the 0-cochain (nabla' - nabla) ∘ i_B
};

/// Verifies R^{∇'} - R^{∇} = d((∇'-∇)∘i_B) exactly, for two extending
/// connections.
ShiftCheckReport connection_shift_check(const Triad& triad, const Connection& a,
                                        const Connection& b);

/// Solves R_{A⊗B} = 0 over the unknown assignment on i_B(B). The system is
/// assembled entrywise from the cocycle formula (independently of the
/// Chevalley–Eilenberg machinery); unknowns are ordered like the 0-cochains
/// of the coefficient module, so solutions convert directly.
AffineSolutionSet compatible_connection_solve(const Triad& triad);

/// Reads a solution vector back as a per-B-basis assignment.
std::vector<Matrix> assignment_from_vector(const Triad& triad, const Matrix& x);

}  // namespace atk
