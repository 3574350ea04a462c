#pragma once

#include "atk/connection.hpp"

namespace atk {
namespace fixtures {

/// sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h, basis order (h, e, f).
LieAlgebra sl2();
/// Standard 2-dimensional representation matrices, indexed like the basis.
Matrix sl2_standard(std::size_t i);
/// Adjoint representation matrices.
Matrix sl2_adjoint(std::size_t i);

/// The 2-dimensional algebra [x,y] = y.
LieAlgebra solvable2();
/// Heisenberg algebra [x,y] = z.
LieAlgebra heisenberg();
/// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
LieAlgebra rotation3();

/// (sl2, Borel span(h,e)) pair.
LiePair sl2_borel_pair();
/// Borel acting on Q² by the standard matrices.
Triad sl2_borel_standard();
/// Borel acting on Q³ by the adjoint matrices.
Triad sl2_borel_adjoint();
/// L = solvable2, A = span(y), E = Q¹ with action (lambda).
Triad scalar_triad(const Rational& lambda);
/// Heisenberg, A = center, E = Q² with a given action of the center.
Triad heisenberg_center(const Matrix& z_action);

}  // namespace fixtures
}  // namespace atk
