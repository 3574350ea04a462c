#include "atk/split_atiyah.hpp"

#include <stdexcept>

namespace atk {

namespace {

Matrix basis_vector(std::size_t dim, std::size_t i) {
  Matrix e(dim, 1);
  e.at(i, 0) = Rational(1);
  return e;
}

Matrix unit_matrix(std::size_t n, std::size_t p, std::size_t q) {
  Matrix m(n, n);
  m.at(p, q) = Rational(1);
  return m;
}

// Twisted bracket on pairs (φ, l) with φ in End(E) and l in L-coordinates.
std::pair<Matrix, Matrix> twisted_bracket(const Connection& conn, const CurvatureForm& r,
                                          const Matrix& phi1, const Matrix& l1,
                                          const Matrix& phi2, const Matrix& l2) {
  const Matrix phi = commutator(phi1, phi2) + commutator(conn(l1), phi2) -
                     commutator(conn(l2), phi1) + r.eval(l1, l2);
  return {phi, conn.algebra.bracket(l1, l2)};
}

}  // namespace

Matrix commutator_operator(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("commutator operator of non-square matrix");
  const std::size_t n = x.rows();
  Matrix op(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t row = p * n + q;
      for (std::size_t r = 0; r < n; ++r) {
        op.at(row, r * n + q) += x.at(p, r);  // x·δ
        op.at(row, p * n + r) -= x.at(r, q);  // δ·x
      }
    }
  return op;
}

LieAlgebra gl_product(std::size_t module_dim, const LieAlgebra& l) {
  const std::size_t n2 = module_dim * module_dim;
  const std::size_t d = n2 + l.dim();
  LieAlgebra g(d);
  for (std::size_t u = 0; u < n2; ++u)
    for (std::size_t v = 0; v < n2; ++v) {
      const Matrix comm = commutator(unit_matrix(module_dim, u / module_dim, u % module_dim),
                                     unit_matrix(module_dim, v / module_dim, v % module_dim));
      const Matrix cv = vec(comm);
      for (std::size_t k = 0; k < n2; ++k) g.c(u, v, k) = cv.at(k, 0);
    }
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (std::size_t k = 0; k < l.dim(); ++k) g.c(n2 + i, n2 + j, n2 + k) = l.c(i, j, k);
  return g;
}

SplitAtiyahAlgebra build_split_atiyah(const Connection& conn) {
  const std::size_t n = conn.module_dim;
  const std::size_t n2 = n * n;
  const std::size_t nl = conn.algebra.dim();
  const std::size_t d = n2 + nl;
  LieAlgebra g(d);

  auto component = [&](std::size_t p) -> std::pair<Matrix, Matrix> {
    if (p < n2) return {unit_matrix(n, p / n, p % n), Matrix(nl, 1)};
    return {Matrix(n, n), basis_vector(nl, p - n2)};
  };

  const CurvatureForm r = curvature(conn);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      const auto [phi1, l1] = component(p);
      const auto [phi2, l2] = component(q);
      const auto [phi, l] = twisted_bracket(conn, r, phi1, l1, phi2, l2);
      const Matrix pv = vec(phi);
      for (std::size_t k = 0; k < n2; ++k) {
        g.c(p, q, k) = pv.at(k, 0);
        g.c(q, p, k) = -pv.at(k, 0);
      }
      for (std::size_t k = 0; k < nl; ++k) {
        g.c(p, q, n2 + k) = l.at(k, 0);
        g.c(q, p, n2 + k) = -l.at(k, 0);
      }
    }

  const LieValidationReport report = g.validate();
  if (!report.ok())
    throw std::logic_error("twisted bracket failed the Jacobi identity: " + report.summary());
  return SplitAtiyahAlgebra{std::move(g), conn, n};
}

IsoCheckReport split_iso_check(const Connection& conn) {
  const std::size_t n = conn.module_dim;
  const std::size_t n2 = n * n;
  const std::size_t nl = conn.algebra.dim();
  const std::size_t d = n2 + nl;

  const SplitAtiyahAlgebra split = build_split_atiyah(conn);
  const LieAlgebra product = gl_product(n, conn.algebra);

  // φ⊕l -> (φ + ∇_l, l) as a d×d matrix.
  Matrix phi_map = Matrix::identity(d);
  for (std::size_t i = 0; i < nl; ++i) {
    const Matrix nv = vec(conn.assignment[i]);
    for (std::size_t k = 0; k < n2; ++k) phi_map.at(k, n2 + i) = nv.at(k, 0);
  }

  IsoCheckReport report;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      const Matrix lhs = phi_map * split.algebra.bracket(basis_vector(d, p), basis_vector(d, q));
      const Matrix rhs = product.bracket(phi_map.col(p), phi_map.col(q));
      if (!(lhs == rhs)) report.violations.push_back({p, q});
    }
  return report;
}

const Matrix& ThreeForm::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (!(i < j && j < k && k < l_dim)) throw std::invalid_argument("three-form index misuse");
  // Lexicographic position of (i,j,k) among sorted triples.
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += (l_dim - 1 - a) * (l_dim - 2 - a) / 2;
  for (std::size_t b = i + 1; b < j; ++b) idx += l_dim - 1 - b;
  idx += k - j - 1;
  return table[idx];
}

bool ThreeForm::is_zero() const {
  for (const Matrix& m : table)
    if (!m.is_zero()) return false;
  return true;
}

ThreeForm bianchi(const Connection& conn) {
  const std::size_t nl = conn.algebra.dim();
  const std::size_t n = conn.module_dim;
  ThreeForm out{nl, n, {}};
  out.table.reserve(ThreeForm::count(nl));
  const CurvatureForm r = curvature(conn);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = i + 1; j < nl; ++j)
      for (std::size_t k = j + 1; k < nl; ++k) {
        const Matrix ei = basis_vector(nl, i), ej = basis_vector(nl, j), ek = basis_vector(nl, k);
        Matrix val = commutator(conn.assignment[i], r.at(j, k)) -
                     commutator(conn.assignment[j], r.at(i, k)) +
                     commutator(conn.assignment[k], r.at(i, j));
        val = val - r.eval(conn.algebra.bracket(ei, ej), ek) +
              r.eval(conn.algebra.bracket(ei, ek), ej) -
              r.eval(conn.algebra.bracket(ej, ek), ei);
        out.table.push_back(val);
      }
  return out;
}

ThreeForm split_jacobiator(const Connection& conn) {
  const std::size_t nl = conn.algebra.dim();
  const std::size_t n = conn.module_dim;
  const std::size_t n2 = n * n;
  const SplitAtiyahAlgebra split = build_split_atiyah(conn);
  const std::size_t d = split.algebra.dim();

  auto lift = [&](std::size_t i) { return basis_vector(d, n2 + i); };

  ThreeForm out{nl, n, {}};
  out.table.reserve(ThreeForm::count(nl));
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = i + 1; j < nl; ++j)
      for (std::size_t k = j + 1; k < nl; ++k) {
        const Matrix jac =
            split.algebra.bracket(split.algebra.bracket(lift(i), lift(j)), lift(k)) +
            split.algebra.bracket(split.algebra.bracket(lift(j), lift(k)), lift(i)) +
            split.algebra.bracket(split.algebra.bracket(lift(k), lift(i)), lift(j));
        Matrix phi(n2, 1);
        for (std::size_t t = 0; t < n2; ++t) phi.at(t, 0) = jac.at(t, 0);
        out.table.push_back(unvec(phi, n, n));
      }
  return out;
}

UniversalConstruction universal_construction(const Connection& conn) {
  const std::size_t n = conn.module_dim;
  const std::size_t n2 = n * n;
  SplitAtiyahAlgebra split = build_split_atiyah(conn);

  std::vector<Matrix> action;
  action.reserve(split.algebra.dim());
  for (std::size_t u = 0; u < n2; ++u) action.push_back(unit_matrix(n, u / n, u % n));
  for (std::size_t i = 0; i < conn.algebra.dim(); ++i) action.push_back(conn.assignment[i]);

  // Flatness with respect to the twisted bracket is checked here.
  Representation canonical(split.algebra, n, std::move(action));

  bool natural = true;
  for (std::size_t i = 0; i < conn.algebra.dim(); ++i)
    if (!(canonical.action()[n2 + i] == conn.assignment[i])) natural = false;

  return UniversalConstruction{std::move(split), std::move(canonical), natural};
}

}  // namespace atk
