#include "atk/matched.hpp"

#include <stdexcept>

namespace atk {

namespace {

Matrix basis_vector(std::size_t dim, std::size_t i) {
  Matrix e(dim, 1);
  e.at(i, 0) = Rational(1);
  return e;
}

}  // namespace

MatchedPair::MatchedPair(LieAlgebra a_alg, LieAlgebra b_alg, Representation ab,
                         Representation ba)
    : a(std::move(a_alg)), b(std::move(b_alg)), a_on_b(std::move(ab)), b_on_a(std::move(ba)) {
  if (!(a_on_b.algebra() == a) || a_on_b.module_dim() != b.dim())
    throw std::invalid_argument("matched pair: A-action shape mismatch");
  if (!(b_on_a.algebra() == b) || b_on_a.module_dim() != a.dim())
    throw std::invalid_argument("matched pair: B-action shape mismatch");
}

MatchedCheckReport check_matched(const MatchedPair& mp) {
  MatchedCheckReport report;
  const std::size_t ka = mp.a.dim(), kb = mp.b.dim();

  // (i) D_a[b,b'] = [D_a b, b'] + [b, D_a b'] - D_{D_b a} b' + D_{D_{b'} a} b
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t k = j + 1; k < kb; ++k) {
        const Matrix ai = basis_vector(ka, i), bj = basis_vector(kb, j),
                     bk = basis_vector(kb, k);
        const Matrix lhs = mp.a_on_b.action()[i] * mp.b.bracket(bj, bk);
        const Matrix rhs = mp.b.bracket(mp.a_on_b.action()[i] * bj, bk) +
                           mp.b.bracket(bj, mp.a_on_b.action()[i] * bk) -
                           mp.a_on_b.act(mp.b_on_a.action()[j] * ai) * bk +
                           mp.a_on_b.act(mp.b_on_a.action()[k] * ai) * bj;
        if (!(lhs == rhs)) report.condition_i_violations.push_back({i, j, k});
      }

  // (ii) the symmetric condition with the roles of A and B exchanged
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t k = j + 1; k < ka; ++k) {
        const Matrix bi = basis_vector(kb, i), aj = basis_vector(ka, j),
                     ak = basis_vector(ka, k);
        const Matrix lhs = mp.b_on_a.action()[i] * mp.a.bracket(aj, ak);
        const Matrix rhs = mp.a.bracket(mp.b_on_a.action()[i] * aj, ak) +
                           mp.a.bracket(aj, mp.b_on_a.action()[i] * ak) -
                           mp.b_on_a.act(mp.a_on_b.action()[j] * bi) * ak +
                           mp.b_on_a.act(mp.a_on_b.action()[k] * bi) * aj;
        if (!(lhs == rhs)) report.condition_ii_violations.push_back({i, j, k});
      }

  return report;
}

LieAlgebra build_matched_sum(const MatchedPair& mp) {
  const MatchedCheckReport report = check_matched(mp);
  if (!report.ok()) throw std::invalid_argument("matched compatibility conditions fail");

  const std::size_t ka = mp.a.dim(), kb = mp.b.dim();
  LieAlgebra sum(ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t k = 0; k < ka; ++k) sum.c(i, j, k) = mp.a.c(i, j, k);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t k = 0; k < kb; ++k) sum.c(ka + i, ka + j, ka + k) = mp.b.c(i, j, k);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < kb; ++j) {
      // [a_i, b_j] = D_{a_i} b_j - D_{b_j} a_i
      const Matrix db = mp.a_on_b.action()[i].col(j);
      const Matrix da = mp.b_on_a.action()[j].col(i);
      for (std::size_t k = 0; k < ka; ++k) {
        sum.c(i, ka + j, k) = -da.at(k, 0);
        sum.c(ka + j, i, k) = da.at(k, 0);
      }
      for (std::size_t k = 0; k < kb; ++k) {
        sum.c(i, ka + j, ka + k) = db.at(k, 0);
        sum.c(ka + j, i, ka + k) = -db.at(k, 0);
      }
    }

  const LieValidationReport validation = sum.validate();
  if (!validation.ok())
    throw std::logic_error("matched sum failed validation: " + validation.summary());
  return sum;
}

LieAlgebra adapted_structure(const LieAlgebra& l, const Matrix& incl_a, const Matrix& incl_b) {
  const std::size_t n = l.dim();
  const Matrix t = hstack(incl_a, incl_b);
  if (t.rows() != n || t.cols() != n)
    throw std::invalid_argument("inclusions do not span a complement pair");
  const Matrix tinv = inverse(t);
  LieAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix v = tinv * l.bracket(t.col(i), t.col(j));
      for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = v.at(k, 0);
    }
  return out;
}

MatchedPair recognize_matched(const LieAlgebra& l, const Matrix& incl_a, const Matrix& incl_b) {
  const std::size_t n = l.dim();
  const std::size_t ka = incl_a.cols(), kb = incl_b.cols();
  if (ka + kb != n || rank(hstack(incl_a, incl_b)) != n)
    throw std::invalid_argument("images are not complementary");

  auto require_subalgebra = [&](const Matrix& incl, const char* name) {
    const Subspace image(n, incl);
    for (std::size_t i = 0; i < incl.cols(); ++i)
      for (std::size_t j = i + 1; j < incl.cols(); ++j)
        if (!image.contains(l.bracket(incl.col(i), incl.col(j))))
          throw std::invalid_argument(std::string(name) +
                                      " is not a subalgebra: witness basis pair (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  };
  require_subalgebra(incl_a, "first factor");
  require_subalgebra(incl_b, "second factor");

  const LieAlgebra adapted = adapted_structure(l, incl_a, incl_b);
  LieAlgebra a_alg(ka), b_alg(kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t k = 0; k < ka; ++k) a_alg.c(i, j, k) = adapted.c(i, j, k);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t k = 0; k < kb; ++k) b_alg.c(i, j, k) = adapted.c(ka + i, ka + j, ka + k);

  // [a_i, b_j] = D_{a_i} b_j - D_{b_j} a_i with the two summands in the two factors
  std::vector<Matrix> a_action(ka, Matrix::zero(kb, kb));
  std::vector<Matrix> b_action(kb, Matrix::zero(ka, ka));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t k = 0; k < kb; ++k) a_action[i].at(k, j) = adapted.c(i, ka + j, ka + k);
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t i = 0; i < ka; ++i)
      for (std::size_t k = 0; k < ka; ++k) b_action[j].at(k, i) = -adapted.c(i, ka + j, k);

  return MatchedPair(a_alg, b_alg, Representation(a_alg, kb, std::move(a_action)),
                     Representation(b_alg, ka, std::move(b_action)));
}

MatchedDecompositionReport matched_atiyah_decomposition(const Triad& triad,
                                                        const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t n = triad.module_dim();
  const std::size_t n2 = n * n;
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();
  const std::size_t nl = pair.ambient().dim();

  const MatchedPair mp = recognize_matched(pair.ambient(), pair.inclusion_a(), pair.i_b());

  // End(E)⊕∇B with the bracket twisted by the complementary connection.
  const SplitAtiyahAlgebra split_b =
      build_split_atiyah(Connection(mp.b, n, restrict_connection(triad, conn).assignment));

  // Mutual actions: A on End(E)⊕∇B is the split-extension action; the
  // action back on A only sees the B-component.
  const SplitExtension ext = build_split_extension(triad, conn);
  std::vector<Matrix> back(n2 + m, Matrix::zero(k, k));
  for (std::size_t j = 0; j < m; ++j) back[n2 + j] = mp.b_on_a.action()[j];

  MatchedDecompositionReport report;
  const MatchedPair big(pair.sub(), split_b.algebra,
                        Representation(pair.sub(), n2 + m, ext.bott.action()),
                        Representation(split_b.algebra, k, std::move(back)));
  report.actions_matched = check_matched(big).ok();
  if (!report.actions_matched) return report;

  const LieAlgebra sum = build_matched_sum(big);  // basis (A, units, B)
  const SplitAtiyahAlgebra split_l = build_split_atiyah(conn);  // basis (units, L)

  // a ⊕ (φ⊕b) -> φ ⊕ (i_A(a) + i_B(b))
  const std::size_t d = k + n2 + m;
  Matrix phi_map(n2 + nl, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < nl; ++r) phi_map.at(n2 + r, i) = pair.inclusion_a().at(r, i);
  for (std::size_t u = 0; u < n2; ++u) phi_map.at(u, k + u) = Rational(1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < nl; ++r) phi_map.at(n2 + r, k + n2 + j) = pair.i_b().at(r, j);

  report.sum_isomorphic = rank(phi_map) == d;
  for (std::size_t p = 0; p < d && report.sum_isomorphic; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      const Matrix lhs = phi_map * sum.bracket(basis_vector(d, p), basis_vector(d, q));
      const Matrix rhs = split_l.algebra.bracket(phi_map.col(p), phi_map.col(q));
      if (!(lhs == rhs)) {
        report.sum_isomorphic = false;
        break;
      }
    }

  // End(E)⊕∇B -> End(E)⊕∇L, φ⊕b -> φ ⊕ i_B(b), against inclusions and
  // projections on both rows.
  Matrix f(n2 + nl, n2 + m);
  for (std::size_t u = 0; u < n2; ++u) f.at(u, u) = Rational(1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < nl; ++r) f.at(n2 + r, n2 + j) = pair.i_b().at(r, j);
  bool morphism = true;
  for (std::size_t p = 0; p < n2 + m; ++p)
    for (std::size_t q = p + 1; q < n2 + m; ++q) {
      const Matrix lhs = f * split_b.algebra.bracket(basis_vector(n2 + m, p),
                                                     basis_vector(n2 + m, q));
      const Matrix rhs = split_l.algebra.bracket(f.col(p), f.col(q));
      if (!(lhs == rhs)) morphism = false;
    }
  Matrix iota_b(n2 + m, n2), iota_l(n2 + nl, n2);
  for (std::size_t u = 0; u < n2; ++u) {
    iota_b.at(u, u) = Rational(1);
    iota_l.at(u, u) = Rational(1);
  }
  Matrix sigma_b(m, n2 + m), sigma_l(nl, n2 + nl);
  for (std::size_t j = 0; j < m; ++j) sigma_b.at(j, n2 + j) = Rational(1);
  for (std::size_t t = 0; t < nl; ++t) sigma_l.at(t, n2 + t) = Rational(1);
  report.square_commutes =
      morphism && f * iota_b == iota_l && sigma_l * f == pair.i_b() * sigma_b;

  return report;
}

CurvatureSplitReport matched_curvature_split(const Triad& triad, const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();

  const MatchedPair mp = recognize_matched(pair.ambient(), pair.inclusion_a(), pair.i_b());

  const CurvatureForm full = curvature(conn);
  const CurvatureForm cocycle = atiyah_cocycle(triad, conn);
  const CurvatureForm b_curv = curvature(
      Connection(mp.b, conn.module_dim, restrict_connection(triad, conn).assignment));

  CurvatureSplitReport report;
  report.aa_zero = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!full.eval(pair.inclusion_a().col(i), pair.inclusion_a().col(j)).is_zero())
        report.aa_zero = false;
  report.ab_matches_cocycle = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(full.eval(pair.inclusion_a().col(i), pair.i_b().col(j)) == cocycle.at(i, j)))
        report.ab_matches_cocycle = false;
  report.bb_matches_b_curvature = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(full.eval(pair.i_b().col(i), pair.i_b().col(j)) == b_curv.at(i, j)))
        report.bb_matches_b_curvature = false;

  report.flat = full.is_zero();
  report.cocycle_zero = cocycle.is_zero();
  report.b_curvature_zero = b_curv.is_zero();
  report.biconditional_ok = report.flat == (report.cocycle_zero && report.b_curvature_zero);
  return report;
}

Matrix DerivationAlgebra::basis_matrix(std::size_t i) const {
  return unvec(carrier.basis().col(i), algebra_dim, algebra_dim);
}

DerivationAlgebra derivation_algebra(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const std::size_t n2 = n * n;

  // one block of n equations per basis pair i<j; unknown δ row-major
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix sys(pairs * n, n2);
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++block) {
      const Matrix br = l.bracket(basis_vector(n, i), basis_vector(n, j));
      for (std::size_t kk = 0; kk < n; ++kk) {
        const std::size_t row = block * n + kk;
        // δ([e_i,e_j]) term
        for (std::size_t c = 0; c < n; ++c)
          if (!br.at(c, 0).is_zero()) sys.at(row, kk * n + c) += br.at(c, 0);
        // -[δ e_i, e_j] and -[e_i, δ e_j]
        for (std::size_t r = 0; r < n; ++r) {
          sys.at(row, r * n + i) -= l.c(r, j, kk);
          sys.at(row, r * n + j) -= l.c(i, r, kk);
        }
      }
    }

  Subspace carrier = kernel(sys);
  DerivationAlgebra out{n, carrier, true};
  for (std::size_t u = 0; u < carrier.dim(); ++u)
    for (std::size_t v = u + 1; v < carrier.dim(); ++v) {
      const Matrix comm =
          commutator(out.basis_matrix(u), out.basis_matrix(v));
      if (!carrier.contains(vec(comm))) out.closed = false;
    }
  return out;
}

MatchedPair equivariant_structure(const LieAlgebra& g, const LieAlgebra& l,
                                  const std::vector<Matrix>& action) {
  if (action.size() != g.dim())
    throw std::invalid_argument("need one action matrix per basis vector of the acting algebra");
  const std::size_t n = l.dim();
  for (std::size_t v = 0; v < action.size(); ++v) {
    if (action[v].rows() != n || action[v].cols() != n)
      throw std::invalid_argument("action matrix shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Matrix ei = basis_vector(n, i), ej = basis_vector(n, j);
        const Matrix lhs = action[v] * l.bracket(ei, ej);
        const Matrix rhs = l.bracket(action[v] * ei, ej) + l.bracket(ei, action[v] * ej);
        if (!(lhs == rhs))
          throw std::invalid_argument("action is not by derivations: witness (" +
                                      std::to_string(v + 1) + "," + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
      }
  }

  Representation g_on_l = [&]() -> Representation {
    try {
      return Representation(g, n, action);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("action is not a Lie algebra morphism: ") +
                                  e.what());
    }
  }();

  // The action back is the Lie derivative, identically zero on the point
  // base; the semidirect case of the matched conditions.
  MatchedPair mp(g, l, std::move(g_on_l), Representation::trivial(l, g.dim()));
  if (!check_matched(mp).ok())
    throw std::logic_error("semidirect matched conditions fail unexpectedly");
  return mp;
}

GInvarianceReport is_g_invariant(const Representation& g_on_l, const Representation& g_on_e,
                                 const Connection& conn) {
  if (!(g_on_l.algebra() == g_on_e.algebra()))
    throw std::invalid_argument("the two actions must share the acting algebra");
  if (g_on_l.module_dim() != conn.algebra.dim() || g_on_e.module_dim() != conn.module_dim)
    throw std::invalid_argument("shape mismatch between actions and connection");

  GInvarianceReport report;
  const std::size_t nl = conn.algebra.dim();
  for (std::size_t v = 0; v < g_on_l.algebra().dim(); ++v)
    for (std::size_t t = 0; t < nl; ++t) {
      const Matrix lhs = commutator(g_on_e.action()[v], conn.assignment[t]) -
                         conn(g_on_l.action()[v].col(t));
      if (!lhs.is_zero()) report.violations.push_back({v, t});
    }
  report.invariant = report.violations.empty();
  return report;
}

}  // namespace atk
