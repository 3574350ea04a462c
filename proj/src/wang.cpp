#include "atk/wang.hpp"

#include <stdexcept>

namespace atk {

WangProblem::WangProblem(LieAlgebra g, Matrix inclusion_h, LieAlgebra k, Matrix dphi)
    : g_(std::move(g)),
      inclusion_h_(std::move(inclusion_h)),
      k_(std::move(k)),
      dphi_(std::move(dphi)),
      pair_(g_, inclusion_h_) {
  if (dphi_.rows() != k_.dim() || dphi_.cols() != inclusion_h_.cols())
    throw std::invalid_argument("dphi shape mismatch");
  // dphi must be a morphism for the induced structure on h.
  const std::size_t kh = h_dim();
  for (std::size_t i = 0; i < kh; ++i)
    for (std::size_t j = i + 1; j < kh; ++j) {
      Matrix ei(kh, 1), ej(kh, 1);
      ei.at(i, 0) = Rational(1);
      ej.at(j, 0) = Rational(1);
      const Matrix lhs = dphi_ * pair_.sub().bracket(ei, ej);
      const Matrix rhs = k_.bracket(dphi_.col(i), dphi_.col(j));
      if (!(lhs == rhs))
        throw std::invalid_argument("dphi is not a Lie algebra morphism: witness basis pair (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

AffineSolutionSet wang_solve(const WangProblem& p) {
  const std::size_t ng = p.g().dim();
  const std::size_t nk = p.k().dim();
  const std::size_t nh = p.h_dim();
  const std::size_t unknowns = nk * ng;  // phi entries, row-major

  // constraint rows: phi ∘ inclusion_h = dphi, then equivariance
  Matrix sys(nk * nh + nk * nh * ng, unknowns);
  Matrix rhs(sys.rows(), 1);

  for (std::size_t j = 0; j < nh; ++j)
    for (std::size_t r = 0; r < nk; ++r) {
      const std::size_t row = j * nk + r;
      for (std::size_t c = 0; c < ng; ++c)
        sys.at(row, r * ng + c) = p.inclusion_h().at(c, j);
      rhs.at(row, 0) = p.dphi().at(r, j);
    }

  std::size_t row0 = nk * nh;
  for (std::size_t j = 0; j < nh; ++j) {
    const Matrix ad_y = p.g().ad(p.inclusion_h().col(j));       // ng×ng
    const Matrix ad_k = p.k().ad(p.dphi().col(j));              // nk×nk
    for (std::size_t i = 0; i < ng; ++i) {
      // phi(ad_Y e_i) - ad_{dphi(Y)} phi(e_i) = 0
      for (std::size_t r = 0; r < nk; ++r) {
        const std::size_t row = row0 + (j * ng + i) * nk + r;
        for (std::size_t c = 0; c < ng; ++c)
          if (!ad_y.at(c, i).is_zero()) sys.at(row, r * ng + c) += ad_y.at(c, i);
        for (std::size_t s = 0; s < nk; ++s)
          if (!ad_k.at(r, s).is_zero()) sys.at(row, s * ng + i) -= ad_k.at(r, s);
      }
    }
  }

  AffineSolutionSet sol = solve_affine(sys, rhs);
  if (!sol.empty) {
    // membership is re-verified post-solve
    if (!(sys * sol.particular == rhs))
      throw std::logic_error("solver returned a non-solution");
  }
  return sol;
}

Matrix map_from_vector(const WangProblem& p, const Matrix& x) {
  return unvec(x, p.k().dim(), p.g().dim());
}

Matrix vector_from_map(const Matrix& phi) { return vec(phi); }

ReductiveResult reductive_test(const LieAlgebra& g, const Matrix& inclusion_h) {
  const LiePair pair(g, inclusion_h);
  const WangProblem p(g, inclusion_h, pair.sub(), Matrix::identity(inclusion_h.cols()));
  ReductiveResult out{wang_solve(p), std::nullopt, false};
  if (out.solutions.empty) return out;

  const Matrix phi0 = map_from_vector(p, out.solutions.particular);
  Subspace complement = kernel(phi0);
  out.complement_invariant = true;
  for (std::size_t j = 0; j < inclusion_h.cols(); ++j)
    for (std::size_t t = 0; t < complement.dim(); ++t) {
      const Matrix moved = g.bracket(inclusion_h.col(j), complement.basis().col(t));
      if (!complement.contains(moved)) out.complement_invariant = false;
    }
  out.complement = std::move(complement);
  return out;
}

Matrix canonical_connection(const WangProblem& p, const Matrix& phi0) {
  if (phi0.rows() != p.h_dim() || phi0.cols() != p.g().dim())
    throw std::invalid_argument("phi0 shape mismatch");
  // phi0 must solve the reductive problem for (g, h)
  const WangProblem base(p.g(), p.inclusion_h(), p.h(), Matrix::identity(p.h_dim()));
  const AffineSolutionSet base_solutions = wang_solve(base);
  if (!base_solutions.contains(vector_from_map(phi0)))
    throw std::invalid_argument("phi0 does not solve the reductive problem");

  const Matrix canonical = p.dphi() * phi0;
  const AffineSolutionSet solutions = wang_solve(p);
  if (!solutions.contains(vector_from_map(canonical)))
    throw std::logic_error("canonical connection is not a Wang solution");
  if (!(canonical * kernel_basis(phi0)).is_zero())
    throw std::logic_error("canonical connection does not vanish on the complement");
  return canonical;
}

WangDimensionReport wang_dimension_check(const WangProblem& p) {
  WangDimensionReport report;
  const ReductiveResult base = reductive_test(p.g(), p.inclusion_h());
  report.base_reductive = base.reductive();
  if (!report.base_reductive) return report;

  report.wang_dim = wang_solve(p).dim();

  // h-equivariant maps m -> k: phi~([Y, m]) = [dphi(Y), phi~(m)]_k, with the
  // bracket [Y, m] written in the m-basis.
  const Subspace& m = *base.complement;
  const std::size_t dm = m.dim();
  const std::size_t nk = p.k().dim();
  const std::size_t nh = p.h_dim();
  Matrix sys(nh * dm * nk, nk * dm);
  for (std::size_t j = 0; j < nh; ++j) {
    const Matrix ad_k = p.k().ad(p.dphi().col(j));
    for (std::size_t t = 0; t < dm; ++t) {
      const Matrix moved = p.g().bracket(p.inclusion_h().col(j), m.basis().col(t));
      const AffineSolutionSet coords = solve_affine(m.basis(), moved);
      if (coords.empty) throw std::logic_error("complement is not ad(h)-invariant");
      for (std::size_t r = 0; r < nk; ++r) {
        const std::size_t row = (j * dm + t) * nk + r;
        for (std::size_t c = 0; c < dm; ++c)
          if (!coords.particular.at(c, 0).is_zero())
            sys.at(row, r * dm + c) += coords.particular.at(c, 0);
        for (std::size_t s = 0; s < nk; ++s)
          if (!ad_k.at(r, s).is_zero()) sys.at(row, s * dm + t) -= ad_k.at(r, s);
      }
    }
  }
  report.equivariant_hom_dim = p.k().dim() * dm - rank(sys);
  return report;
}

}  // namespace atk
