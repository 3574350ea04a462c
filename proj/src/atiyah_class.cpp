#include "atk/atiyah_class.hpp"

#include <stdexcept>

namespace atk {

AtiyahClassResult atiyah_class(const Triad& triad) {
  const LiePair& pair = triad.pair;
  const std::size_t n = triad.module_dim();
  const Connection canonical =
      extend_connection(triad, std::vector<Matrix>(pair.quotient_dim(), Matrix::zero(n, n)));

  AtiyahClassResult out{atiyah_cocycle(triad, canonical), false, std::nullopt, 0, 0, 0, 0};

  const CEComplex complex(coefficient_module(triad));
  const Matrix omega = cocycle_cochain(out.cocycle);
  if (!complex.is_cocycle(1, omega))
    throw std::logic_error("Atiyah cocycle is not closed");  // contradicts the theory
  out.h0_dim = complex.cohomology_dim(0);
  out.h1_dim = complex.cohomology_dim(1);
  out.coboundary_rank = rank(complex.differential(0));
  out.augmented_rank = rank(hstack(complex.differential(0), omega));

  const AffineSolutionSet witness = complex.coboundary_witness(1, omega);
  if (!witness.empty) {
    out.vanishes = true;
    out.witness = witness.particular;
    if (!(complex.differential(0) * witness.particular == omega))
      throw std::logic_error("coboundary witness fails to reproduce the cocycle");
  }
  if (out.vanishes != (out.augmented_rank == out.coboundary_rank))
    throw std::logic_error("membership certificate disagrees with the witness search");
  return out;
}

Connection compatible_from_witness(const Triad& triad, const Matrix& witness) {
  const std::size_t n = triad.module_dim();
  const std::size_t m = triad.pair.quotient_dim();
  if (witness.rows() != m * n * n || witness.cols() != 1)
    throw std::invalid_argument("witness shape mismatch");
  std::vector<Matrix> assignment;
  assignment.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Matrix block(n * n, 1);
    for (std::size_t u = 0; u < n * n; ++u) block.at(u, 0) = -witness.at(j * n * n + u, 0);
    assignment.push_back(unvec(block, n, n));
  }
  return extend_connection(triad, assignment);
}

ShiftCheckReport connection_shift_check(const Triad& triad, const Connection& a,
                                        const Connection& b) {
  const CEComplex complex(coefficient_module(triad));
  const Matrix ra = cocycle_cochain(atiyah_cocycle(triad, a));
  const Matrix rb = cocycle_cochain(atiyah_cocycle(triad, b));

  std::vector<Matrix> diff;
  for (std::size_t j = 0; j < triad.pair.quotient_dim(); ++j) {
    const Matrix lb = triad.pair.i_b().col(j);
    diff.push_back(b(lb) - a(lb));
  }
  ShiftCheckReport report;
  report.lhs = rb - ra;
  report.rhs = complex.differential(0) * zero_cochain(diff);
  report.ok = report.lhs == report.rhs;
  return report;
}

AffineSolutionSet compatible_connection_solve(const Triad& triad) {
  const LiePair& pair = triad.pair;
  const std::size_t n = triad.module_dim();
  const std::size_t n2 = n * n;
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();
  const Representation bott = pair.bott();

  // Unknowns X_j = assignment on i_B(b_j), coordinates (j, p, q) row-major.
  // For each (a_i, b_j):  [∇̄_{a_i}, X_j] - Σ_t Bott_i[t][j] X_t + ∇̄_{eth_{b_j} a_i} = 0.
  Matrix sys(k * m * n2, m * n2);
  Matrix rhs(k * m * n2, 1);
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix& nb = triad.e_rep.action()[i];
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row0 = (i * m + j) * n2;
      // commutator term: entry (p,q) of [nb, X_j]
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const std::size_t row = row0 + p * n + q;
          for (std::size_t r = 0; r < n; ++r) {
            sys.at(row, j * n2 + r * n + q) += nb.at(p, r);   // nb * X
            sys.at(row, j * n2 + p * n + r) -= nb.at(r, q);   // X * nb
          }
        }
      // transported unknown: -X_{D_{a_i} b_j}
      for (std::size_t t = 0; t < m; ++t) {
        const Rational& w = bott.action()[i].at(t, j);
        if (w.is_zero()) continue;
        for (std::size_t u = 0; u < n2; ++u) sys.at(row0 + u, t * n2 + u) -= w;
      }
      // inhomogeneity: -∇̄_{eth_{b_j} a_i}
      Matrix bj(m, 1), ai(k, 1);
      bj.at(j, 0) = Rational(1);
      ai.at(i, 0) = Rational(1);
      const Matrix inhom = vec(triad.e_rep.act(pair.eth(bj, ai)));
      for (std::size_t u = 0; u < n2; ++u) rhs.at(row0 + u, 0) = -inhom.at(u, 0);
    }
  }
  return solve_affine(sys, rhs);
}

std::vector<Matrix> assignment_from_vector(const Triad& triad, const Matrix& x) {
  const std::size_t n = triad.module_dim();
  const std::size_t m = triad.pair.quotient_dim();
  if (x.rows() != m * n * n || x.cols() != 1)
    throw std::invalid_argument("solution vector shape mismatch");
  std::vector<Matrix> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Matrix block(n * n, 1);
    for (std::size_t u = 0; u < n * n; ++u) block.at(u, 0) = x.at(j * n * n + u, 0);
    out.push_back(unvec(block, n, n));
  }
  return out;
}

}  // namespace atk
