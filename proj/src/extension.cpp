#include "atk/extension.hpp"

#include <stdexcept>

namespace atk {

namespace {

Matrix basis_vector(std::size_t dim, std::size_t i) {
  Matrix e(dim, 1);
  e.at(i, 0) = Rational(1);
  return e;
}

// Columns a_j -> (vec ∇̄_{a_j}; i_A(a_j)), the subalgebra being quotiented out.
Matrix flat_graph_columns(const Triad& triad) {
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t k = triad.pair.sub_dim();
  Matrix s(n2 + triad.pair.ambient().dim(), k);
  for (std::size_t j = 0; j < k; ++j)
    s.set_col(j, vstack(vec(triad.e_rep.action()[j]), triad.pair.inclusion_a().col(j)));
  return s;
}

Representation embedded_bott(const LiePair& pair, const Representation& e_rep) {
  const std::size_t n = e_rep.module_dim();
  const std::size_t n2 = n * n;
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();
  const Representation bott = pair.bott();

  std::vector<Matrix> action;
  action.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix act(n2 + m, n2 + m);
    const Matrix comm = commutator_operator(e_rep.action()[i]);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n2; ++c) act.at(r, c) = comm.at(r, c);
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix corr =
          vec(e_rep.act(pair.eth(basis_vector(m, j), basis_vector(k, i))));
      for (std::size_t r = 0; r < n2; ++r) act.at(r, n2 + j) = corr.at(r, 0);
      for (std::size_t t = 0; t < m; ++t) act.at(n2 + t, n2 + j) = bott.action()[i].at(t, j);
    }
    action.push_back(std::move(act));
  }
  return Representation(pair.sub(), n2 + m, std::move(action));
}

void require_equivariant(const Representation& from, const Representation& to,
                         const Matrix& map, const char* what) {
  for (std::size_t i = 0; i < from.algebra().dim(); ++i)
    if (!(map * from.action()[i] == to.action()[i] * map))
      throw std::logic_error(std::string(what) + ": intertwiner is not equivariant");
}

void require_mutually_inverse(const Intertwiner& iso, const char* what) {
  if (!(iso.forward * iso.backward == Matrix::identity(iso.forward.rows())) ||
      !(iso.backward * iso.forward == Matrix::identity(iso.backward.rows())))
    throw std::logic_error(std::string(what) + ": maps are not mutually inverse");
}

}  // namespace

QuotientExtension build_quotient_extension(const Triad& triad) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t nl = pair.ambient().dim();
  const std::size_t ambient = n2 + nl;

  const Matrix graph = flat_graph_columns(triad);
  QuotientChart chart = quotient_chart(ambient, Subspace(ambient, graph));

  std::vector<Matrix> action;
  action.reserve(pair.sub_dim());
  for (std::size_t i = 0; i < pair.sub_dim(); ++i) {
    Matrix amb(ambient, ambient);
    const Matrix comm = commutator_operator(triad.e_rep.action()[i]);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n2; ++c) amb.at(r, c) = comm.at(r, c);
    const Matrix ad = pair.ambient().ad(pair.inclusion_a().col(i));
    for (std::size_t r = 0; r < nl; ++r)
      for (std::size_t c = 0; c < nl; ++c) amb.at(n2 + r, n2 + c) = ad.at(r, c);
    if (!(chart.projection * (amb * graph)).is_zero())
      throw std::logic_error("quotient action is not well defined on cosets");
    action.push_back(chart.projection * amb * chart.section);
  }
  Representation bott(pair.sub(), chart.quotient_dim(), std::move(action));
  return QuotientExtension{std::move(chart), std::move(bott)};
}

EmbeddedExtension build_embedded_extension(const Triad& triad) {
  return EmbeddedExtension{embedded_bott(triad.pair, triad.e_rep)};
}

EmbeddedExtension build_embedded_extension(const Triad& triad, const Matrix& alt_i_b) {
  return EmbeddedExtension{embedded_bott(triad.pair.with_splitting(alt_i_b), triad.e_rep)};
}

SplitExtension build_split_extension(const Triad& triad, const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t m = pair.quotient_dim();
  CurvatureForm cocycle = atiyah_cocycle(triad, conn);
  const Representation bott = pair.bott();

  std::vector<Matrix> action;
  action.reserve(pair.sub_dim());
  for (std::size_t i = 0; i < pair.sub_dim(); ++i) {
    Matrix act(n2 + m, n2 + m);
    const Matrix comm = commutator_operator(triad.e_rep.action()[i]);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n2; ++c) act.at(r, c) = comm.at(r, c);
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix twist = vec(cocycle.at(i, j));
      for (std::size_t r = 0; r < n2; ++r) act.at(r, n2 + j) = twist.at(r, 0);
      for (std::size_t t = 0; t < m; ++t) act.at(n2 + t, n2 + j) = bott.action()[i].at(t, j);
    }
    action.push_back(std::move(act));
  }
  try {
    Representation rep(pair.sub(), n2 + m, std::move(action));
    return SplitExtension{std::move(rep), std::move(cocycle)};
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("split extension action must be flat: ") + e.what());
  }
}

Intertwiner iso_quotient_embedded(const Triad& triad) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t nl = pair.ambient().dim();
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();

  const QuotientExtension quotient = build_quotient_extension(triad);
  const EmbeddedExtension embedded = build_embedded_extension(triad);

  // (δ, b) -> class of (δ, i_B(b))
  Matrix inc(n2 + nl, n2 + m);
  for (std::size_t r = 0; r < n2; ++r) inc.at(r, r) = Rational(1);
  for (std::size_t r = 0; r < nl; ++r)
    for (std::size_t j = 0; j < m; ++j) inc.at(n2 + r, n2 + j) = pair.i_b().at(r, j);

  // class of (δ, l) -> (δ - ∇̄_{pr_A(l)}, pr_B(l))
  Matrix red(n2 + m, n2 + nl);
  for (std::size_t r = 0; r < n2; ++r) red.at(r, r) = Rational(1);
  for (std::size_t t = 0; t < nl; ++t) {
    Matrix pa(k, 1);
    for (std::size_t i = 0; i < k; ++i) pa.at(i, 0) = pair.pr_a().at(i, t);
    const Matrix w = vec(triad.e_rep.act(pa));
    for (std::size_t r = 0; r < n2; ++r) red.at(r, n2 + t) = -w.at(r, 0);
    for (std::size_t j = 0; j < m; ++j) red.at(n2 + j, n2 + t) = pair.pr_b().at(j, t);
  }

  Intertwiner iso{quotient.chart.projection * inc, red * quotient.chart.section};
  require_mutually_inverse(iso, "quotient/embedded");
  require_equivariant(embedded.bott, quotient.bott, iso.forward, "quotient/embedded");
  require_equivariant(quotient.bott, embedded.bott, iso.backward, "quotient/embedded");
  return iso;
}

Intertwiner iso_embedded_split(const Triad& triad, const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t m = pair.quotient_dim();

  const EmbeddedExtension embedded = build_embedded_extension(triad);
  const SplitExtension split = build_split_extension(triad, conn);

  // (δ, b) -> (δ - ∇_{i_B(b)}) ⊕ b  and back
  Matrix fwd = Matrix::identity(n2 + m);
  Matrix bwd = Matrix::identity(n2 + m);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix w = vec(conn(pair.i_b().col(j)));
    for (std::size_t r = 0; r < n2; ++r) {
      fwd.at(r, n2 + j) = -w.at(r, 0);
      bwd.at(r, n2 + j) = w.at(r, 0);
    }
  }

  Intertwiner iso{std::move(fwd), std::move(bwd)};
  require_mutually_inverse(iso, "embedded/split");
  require_equivariant(embedded.bott, split.bott, iso.forward, "embedded/split");
  require_equivariant(split.bott, embedded.bott, iso.backward, "embedded/split");
  return iso;
}

Intertwiner iso_change_splitting(const Triad& triad, const Matrix& alt_i_b) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t m = pair.quotient_dim();

  const Matrix diff = pair.splitting_difference(alt_i_b);  // I with i'_B = i_B + i_A∘I
  const EmbeddedExtension from = build_embedded_extension(triad);
  const EmbeddedExtension to = build_embedded_extension(triad, alt_i_b);

  // (δ, b) -> (δ + ∇̄_{I(b)}, b)
  Matrix fwd = Matrix::identity(n2 + m);
  Matrix bwd = Matrix::identity(n2 + m);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix w = vec(triad.e_rep.act(diff.col(j)));
    for (std::size_t r = 0; r < n2; ++r) {
      fwd.at(r, n2 + j) = w.at(r, 0);
      bwd.at(r, n2 + j) = -w.at(r, 0);
    }
  }

  Intertwiner iso{std::move(fwd), std::move(bwd)};
  require_mutually_inverse(iso, "change of splitting");
  require_equivariant(from.bott, to.bott, iso.forward, "change of splitting");
  require_equivariant(to.bott, from.bott, iso.backward, "change of splitting");
  return iso;
}

Intertwiner iso_change_connection(const Triad& triad, const Connection& a,
                                  const Connection& b) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t m = pair.quotient_dim();

  const SplitExtension from = build_split_extension(triad, a);
  const SplitExtension to = build_split_extension(triad, b);

  // φ⊕b -> (φ + ∇_{i_B(b)} - ∇'_{i_B(b)}) ⊕ b
  Matrix fwd = Matrix::identity(n2 + m);
  Matrix bwd = Matrix::identity(n2 + m);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix lb = pair.i_b().col(j);
    const Matrix w = vec(a(lb) - b(lb));
    for (std::size_t r = 0; r < n2; ++r) {
      fwd.at(r, n2 + j) = w.at(r, 0);
      bwd.at(r, n2 + j) = -w.at(r, 0);
    }
  }

  Intertwiner iso{std::move(fwd), std::move(bwd)};
  require_mutually_inverse(iso, "change of connection");
  require_equivariant(from.bott, to.bott, iso.forward, "change of connection");
  require_equivariant(to.bott, from.bott, iso.backward, "change of connection");
  return iso;
}

BConnection restrict_connection(const Triad& triad, const Connection& conn) {
  if (auto bad = extending_violation(triad, conn))
    throw std::invalid_argument("connection does not extend the flat A-action: witness basis vector " +
                                std::to_string(*bad + 1));
  BConnection out{triad.pair.i_b(), {}};
  for (std::size_t j = 0; j < triad.pair.quotient_dim(); ++j)
    out.assignment.push_back(conn(triad.pair.i_b().col(j)));
  return out;
}

Connection extend_b_connection(const Triad& triad, const BConnection& bconn) {
  if (!(bconn.i_b == triad.pair.i_b()))
    throw std::invalid_argument("B-connection uses a different splitting than the triad");
  return extend_connection(triad, bconn.assignment);
}

RoundtripReport b_connection_roundtrip(const Triad& triad,
                                       const std::vector<std::vector<Matrix>>& extras) {
  const LiePair& pair = triad.pair;
  const std::size_t n = triad.module_dim();
  const std::size_t n2 = n * n;
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();
  const std::size_t nl = pair.ambient().dim();

  std::vector<std::vector<Matrix>> family;
  family.push_back(std::vector<Matrix>(m, Matrix::zero(n, n)));
  for (std::size_t j0 = 0; j0 < m; ++j0)
    for (std::size_t u = 0; u < n2; ++u) {
      std::vector<Matrix> assign(m, Matrix::zero(n, n));
      assign[j0].at(u / n, u % n) = Rational(1);
      family.push_back(std::move(assign));
    }
  family.insert(family.end(), extras.begin(), extras.end());

  RoundtripReport report;
  report.dimension_split_ok =
      (n2 + nl == n2 + k + m) && rank(hstack(pair.inclusion_a(), pair.i_b())) == nl;
  report.ok = report.dimension_split_ok;
  for (const auto& assign : family) {
    // B-connection -> extending connection -> B-connection
    const BConnection bconn{pair.i_b(), assign};
    const Connection full = extend_b_connection(triad, bconn);
    const BConnection restricted = restrict_connection(triad, full);
    bool restricts = true;
    for (std::size_t j = 0; j < m; ++j)
      if (!(restricted.assignment[j] == assign[j])) restricts = false;
    // extending connection -> B-connection -> extending connection
    const Connection rebuilt = extend_b_connection(triad, restricted);
    bool same = true;
    for (std::size_t t = 0; t < nl; ++t)
      if (!(rebuilt.assignment[t] == full.assignment[t])) same = false;
    if (!(restricts && same)) report.ok = false;
    ++report.instances_checked;
  }
  return report;
}

CompatibilityCheck a_compatibility_flags(const Triad& triad, const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t m = pair.quotient_dim();
  const Representation bott = pair.bott();

  CompatibilityCheck check;
  check.via_a_l = curvature_a_l(triad, conn).is_zero();
  check.via_a_b = atiyah_cocycle(triad, conn).is_zero();

  const SplitExtension split = build_split_extension(triad, conn);
  Matrix hat_s(n2 + m, m);
  for (std::size_t j = 0; j < m; ++j) hat_s.at(n2 + j, j) = Rational(1);
  check.via_split_section = true;
  for (std::size_t i = 0; i < pair.sub_dim(); ++i)
    if (!(split.bott.action()[i] * hat_s == hat_s * bott.action()[i]))
      check.via_split_section = false;

  const EmbeddedExtension embedded = build_embedded_extension(triad);
  Matrix tilde_s(n2 + m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix w = vec(conn(pair.i_b().col(j)));
    for (std::size_t r = 0; r < n2; ++r) tilde_s.at(r, j) = w.at(r, 0);
    tilde_s.at(n2 + j, j) = Rational(1);
  }
  check.via_embedded_section = true;
  for (std::size_t i = 0; i < pair.sub_dim(); ++i)
    if (!(embedded.bott.action()[i] * tilde_s == tilde_s * bott.action()[i]))
      check.via_embedded_section = false;

  if (check.via_a_l != check.via_a_b || check.via_a_b != check.via_split_section ||
      check.via_split_section != check.via_embedded_section)
    throw std::logic_error("compatibility flags disagree");
  check.compatible = check.via_a_b;
  return check;
}

namespace {

void check_sequence(HexagonReport& report, const std::string& name, const Matrix& in,
                    const Matrix& out) {
  const bool composite_zero = (out * in).is_zero();
  const bool left = rank(in) == in.cols();
  const bool right = rank(out) == out.rows();
  const bool middle = rank(in) == in.rows() - rank(out);
  report.checks.push_back({name, composite_zero && left && right && middle});
}

}  // namespace

HexagonReport hexagon_diagnostics(const Triad& triad, const Connection& conn) {
  const LiePair& pair = triad.pair;
  const std::size_t n2 = triad.module_dim() * triad.module_dim();
  const std::size_t nl = pair.ambient().dim();
  const std::size_t k = pair.sub_dim();
  const std::size_t m = pair.quotient_dim();

  const QuotientExtension quotient = build_quotient_extension(triad);
  const std::size_t q = quotient.chart.quotient_dim();

  // building blocks
  Matrix s_a(n2 + k, k);
  Matrix theta_a(n2, n2 + k);
  for (std::size_t r = 0; r < n2; ++r) theta_a.at(r, r) = Rational(1);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix w = vec(triad.e_rep.action()[j]);
    for (std::size_t r = 0; r < n2; ++r) {
      s_a.at(r, j) = w.at(r, 0);
      theta_a.at(r, n2 + j) = -w.at(r, 0);
    }
    s_a.at(n2 + j, j) = Rational(1);
  }
  Matrix sigma_a(k, n2 + k);
  for (std::size_t j = 0; j < k; ++j) sigma_a.at(j, n2 + j) = Rational(1);
  Matrix sigma_l(nl, n2 + nl);
  for (std::size_t j = 0; j < nl; ++j) sigma_l.at(j, n2 + j) = Rational(1);
  Matrix f_al(n2 + nl, n2 + k);
  for (std::size_t r = 0; r < n2; ++r) f_al.at(r, r) = Rational(1);
  for (std::size_t r = 0; r < nl; ++r)
    for (std::size_t j = 0; j < k; ++j) f_al.at(n2 + r, n2 + j) = pair.inclusion_a().at(r, j);
  const Matrix s_al = f_al * s_a;
  Matrix iota_da(n2 + k, n2);
  Matrix iota_dl(n2 + nl, n2);
  for (std::size_t r = 0; r < n2; ++r) {
    iota_da.at(r, r) = Rational(1);
    iota_dl.at(r, r) = Rational(1);
  }
  const Matrix& p_b = quotient.chart.projection;
  const Matrix iota_b = p_b * iota_dl;
  const Matrix sigma_b = pair.pr_b() * sigma_l * quotient.chart.section;

  HexagonReport report;
  check_sequence(report, "0->A->gl(E)xA->End(E)->0", s_a, theta_a);
  check_sequence(report, "0->A->gl(E)xL->D_B(E)->0", s_al, p_b);
  check_sequence(report, "0->A->L->B->0", pair.inclusion_a(), pair.pr_b());
  check_sequence(report, "0->End(E)->gl(E)xA->A->0", iota_da, sigma_a);
  check_sequence(report, "0->End(E)->gl(E)xL->L->0", iota_dl, sigma_l);
  check_sequence(report, "0->End(E)->D_B(E)->B->0", iota_b, sigma_b);
  check_sequence(report, "0->gl(E)xA->gl(E)xL->B->0", f_al, pair.pr_b() * sigma_l);

  // σ_B must not depend on coset representatives.
  report.checks.push_back(
      {"sigma_B well-defined", (pair.pr_b() * sigma_l * flat_graph_columns(triad)).is_zero()});

  report.checks.push_back({"f∘s_A = s_AL", f_al * s_a == s_al});
  report.checks.push_back({"P_B∘f = iota_B∘theta_A", p_b * f_al == iota_b * theta_a});
  report.checks.push_back(
      {"sigma_L∘f = i_A∘sigma_A", sigma_l * f_al == pair.inclusion_a() * sigma_a});
  report.checks.push_back({"sigma_L∘s_AL = i_A", sigma_l * s_al == pair.inclusion_a()});
  report.checks.push_back(
      {"sigma_B∘P_B = pr_B∘sigma_L", sigma_b * p_b == pair.pr_b() * sigma_l});
  report.checks.push_back({"f∘iota = iota", f_al * iota_da == iota_dl});
  report.checks.push_back({"P_B∘iota = iota_B", p_b * iota_dl == iota_b});

  // The split model of the same extension, transported into the quotient
  // model, must match the inclusion and projection on the nose.
  {
    const Intertwiner qe = iso_quotient_embedded(triad);
    const Intertwiner es = iso_embedded_split(triad, conn);
    const Matrix split_to_quotient = qe.forward * es.backward;
    Matrix hat_iota(n2 + m, n2);
    for (std::size_t r = 0; r < n2; ++r) hat_iota.at(r, r) = Rational(1);
    Matrix hat_sigma(m, n2 + m);
    for (std::size_t j = 0; j < m; ++j) hat_sigma.at(j, n2 + j) = Rational(1);
    check_sequence(report, "0->End(E)->End(E)+B->B->0", hat_iota, hat_sigma);
    report.checks.push_back(
        {"iso∘hat_iota = iota_B", split_to_quotient * hat_iota == iota_b});
    report.checks.push_back(
        {"sigma_B∘iso = hat_sigma", sigma_b * split_to_quotient == hat_sigma});
    (void)q;
  }

  return report;
}

}  // namespace atk
