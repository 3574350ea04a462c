#include "atk/connection.hpp"

#include <stdexcept>

namespace atk {

Connection::Connection(LieAlgebra alg, std::size_t mod_dim, std::vector<Matrix> assign)
    : algebra(std::move(alg)), module_dim(mod_dim), assignment(std::move(assign)) {
  if (assignment.size() != algebra.dim())
    throw std::invalid_argument("connection needs one matrix per basis vector");
  for (const Matrix& m : assignment)
    if (m.rows() != module_dim || m.cols() != module_dim)
      throw std::invalid_argument("connection matrix shape mismatch");
}

Matrix Connection::operator()(const Matrix& x) const {
  if (x.rows() != algebra.dim() || x.cols() != 1)
    throw std::invalid_argument("connection argument shape mismatch");
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!x.at(i, 0).is_zero()) out = out + assignment[i] * x.at(i, 0);
  return out;
}

bool Connection::flat() const { return curvature(*this).is_zero(); }

Triad::Triad(LiePair p, Representation rep) : pair(std::move(p)), e_rep(std::move(rep)) {
  if (!(e_rep.algebra() == pair.sub()))
    throw std::invalid_argument("triad module must carry an action of the subalgebra");
}

bool CurvatureForm::is_zero() const {
  for (const Matrix& m : table)
    if (!m.is_zero()) return false;
  return true;
}

Matrix CurvatureForm::eval(const Matrix& x, const Matrix& y) const {
  if (x.rows() != first_dim || y.rows() != second_dim || x.cols() != 1 || y.cols() != 1)
    throw std::invalid_argument("curvature argument shape mismatch");
  const std::size_t n = table.empty() ? 0 : table.front().rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < first_dim; ++i) {
    if (x.at(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < second_dim; ++j) {
      if (y.at(j, 0).is_zero()) continue;
      out = out + at(i, j) * (x.at(i, 0) * y.at(j, 0));
    }
  }
  return out;
}

CurvatureForm curvature(const Connection& conn) {
  const std::size_t n = conn.algebra.dim();
  CurvatureForm r{CurvatureForm::Domain::WedgeLL, n, n,
                  std::vector<Matrix>(n * n, Matrix::zero(conn.module_dim, conn.module_dim))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix ei(n, 1), ej(n, 1);
      ei.at(i, 0) = Rational(1);
      ej.at(j, 0) = Rational(1);
      const Matrix rij = commutator(conn.assignment[i], conn.assignment[j]) -
                         conn(conn.algebra.bracket(ei, ej));
      r.at(i, j) = rij;
      r.at(j, i) = -rij;
    }
  return r;
}

Connection extend_connection(const Triad& triad, const std::vector<Matrix>& b_assignment) {
  const LiePair& pair = triad.pair;
  if (b_assignment.size() != pair.quotient_dim())
    throw std::invalid_argument("need one assignment matrix per quotient basis vector");
  const std::size_t n = triad.module_dim();
  for (const Matrix& m : b_assignment)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("assignment matrix shape mismatch");

  // nabla_l = nabla_bar_{pr_A(l)} + assignment(pr_B(l))
  std::vector<Matrix> assign;
  assign.reserve(pair.ambient().dim());
  for (std::size_t t = 0; t < pair.ambient().dim(); ++t) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < pair.sub_dim(); ++i)
      if (!pair.pr_a().at(i, t).is_zero())
        m = m + triad.e_rep.action()[i] * pair.pr_a().at(i, t);
    for (std::size_t j = 0; j < pair.quotient_dim(); ++j)
      if (!pair.pr_b().at(j, t).is_zero()) m = m + b_assignment[j] * pair.pr_b().at(j, t);
    assign.push_back(std::move(m));
  }
  return Connection(pair.ambient(), n, std::move(assign));
}

std::optional<std::size_t> extending_violation(const Triad& triad, const Connection& conn) {
  if (!(conn.algebra == triad.pair.ambient()) || conn.module_dim != triad.module_dim())
    throw std::invalid_argument("connection does not live on the triad");
  for (std::size_t i = 0; i < triad.pair.sub_dim(); ++i)
    if (!(conn(triad.pair.inclusion_a().col(i)) == triad.e_rep.action()[i])) return i;
  return std::nullopt;
}

CurvatureForm atiyah_cocycle(const Triad& triad, const Connection& conn) {
  if (auto bad = extending_violation(triad, conn))
    throw std::invalid_argument("connection does not extend the flat A-action: witness basis vector " +
                                std::to_string(*bad + 1));
  const LiePair& pair = triad.pair;
  const std::size_t k = pair.sub_dim(), m = pair.quotient_dim();
  CurvatureForm r{CurvatureForm::Domain::AtimesB, k, m,
                  std::vector<Matrix>(k * m, Matrix::zero(conn.module_dim, conn.module_dim))};
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix a = pair.inclusion_a().col(i);
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix lb = pair.i_b().col(j);
      r.at(i, j) = commutator(conn(a), conn(lb)) - conn(pair.ambient().bracket(a, lb));
    }
  }
  return r;
}

CurvatureForm curvature_a_l(const Triad& triad, const Connection& conn) {
  if (auto bad = extending_violation(triad, conn))
    throw std::invalid_argument("connection does not extend the flat A-action: witness basis vector " +
                                std::to_string(*bad + 1));
  const LiePair& pair = triad.pair;
  const std::size_t k = pair.sub_dim(), nl = pair.ambient().dim();
  CurvatureForm r{CurvatureForm::Domain::AtimesL, k, nl,
                  std::vector<Matrix>(k * nl, Matrix::zero(conn.module_dim, conn.module_dim))};
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix a = pair.inclusion_a().col(i);
    for (std::size_t t = 0; t < nl; ++t) {
      Matrix el(nl, 1);
      el.at(t, 0) = Rational(1);
      r.at(i, t) = commutator(conn(a), conn.assignment[t]) - conn(pair.ambient().bracket(a, el));
    }
  }
  return r;
}

bool is_a_compatible(const Triad& triad, const Connection& conn) {
  return atiyah_cocycle(triad, conn).is_zero();
}

}  // namespace atk
