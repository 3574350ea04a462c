#include "atk/ce_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace atk {

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> sorted_subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // next combination in lexicographic order
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

Subset erase_at(const Subset& s, std::size_t pos) {
  Subset t = s;
  t.erase(t.begin() + pos);
  return t;
}

}  // namespace

CEComplex::CEComplex(Representation rep) : rep_(std::move(rep)) {
  const std::size_t n = rep_.algebra().dim();
  const std::size_t v = rep_.module_dim();

  std::array<std::vector<Subset>, 4> subsets;
  std::array<std::map<Subset, std::size_t>, 4> index;
  for (std::size_t k = 0; k <= 3; ++k) {
    subsets[k] = sorted_subsets(n, k);
    for (std::size_t s = 0; s < subsets[k].size(); ++s) index[k][subsets[k][s]] = s;
    dims_[k] = subsets[k].size() * v;
  }

  for (std::size_t k = 0; k <= 2; ++k) {
    Matrix d(dims_[k + 1], dims_[k]);
    for (std::size_t ti = 0; ti < subsets[k + 1].size(); ++ti) {
      const Subset& t = subsets[k + 1][ti];
      // first sum: (-1)^i ∇_{t_i} applied to the value on t minus t_i
      for (std::size_t i = 0; i <= k; ++i) {
        const Subset s = erase_at(t, i);
        const std::size_t si = index[k].at(s);
        const Matrix& op = rep_.action()[t[i]];
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t r = 0; r < v; ++r)
          for (std::size_t c = 0; c < v; ++c)
            d.at(ti * v + r, si * v + c) += op.at(r, c) * Rational(sign);
      }
      // second sum: (-1)^{i+j} value on ([t_i,t_j], rest), expanded linearly
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) {
          Matrix ei(n, 1), ej(n, 1);
          ei.at(t[i], 0) = Rational(1);
          ej.at(t[j], 0) = Rational(1);
          const Matrix br = rep_.algebra().bracket(ei, ej);
          Subset rest = erase_at(erase_at(t, j), i);
          for (std::size_t m = 0; m < n; ++m) {
            if (br.at(m, 0).is_zero()) continue;
            if (std::find(rest.begin(), rest.end(), m) != rest.end()) continue;
            Subset s = rest;
            const std::size_t pos = std::lower_bound(s.begin(), s.end(), m) - s.begin();
            s.insert(s.begin() + pos, m);
            const std::size_t si = index[k].at(s);
            int sign = ((i + j) % 2 == 0) ? 1 : -1;
            if (pos % 2 == 1) sign = -sign;  // move m past pos smaller entries
            const Rational coeff = br.at(m, 0) * Rational(sign);
            for (std::size_t r = 0; r < v; ++r) d.at(ti * v + r, si * v + r) += coeff;
          }
        }
    }
    d_[k] = std::move(d);
  }

  for (std::size_t k = 0; k + 1 <= 2; ++k)
    if (!(d_[k + 1] * d_[k]).is_zero())
      throw std::logic_error("d∘d != 0 in the Chevalley-Eilenberg complex");
}

std::size_t CEComplex::cohomology_dim(std::size_t k) const {
  if (k > 2) throw std::invalid_argument("cohomology degree out of range");
  const std::size_t kernel = dims_[k] - rank(d_[k]);
  const std::size_t boundaries = (k == 0) ? 0 : rank(d_[k - 1]);
  return kernel - boundaries;
}

bool CEComplex::is_cocycle(std::size_t k, const Matrix& omega) const {
  if (k > 2) throw std::invalid_argument("cocycle degree out of range");
  if (omega.rows() != dims_[k] || omega.cols() != 1)
    throw std::invalid_argument("cochain shape mismatch");
  return (d_[k] * omega).is_zero();
}

AffineSolutionSet CEComplex::coboundary_witness(std::size_t k, const Matrix& omega) const {
  if (k == 0 || k > 3) throw std::invalid_argument("coboundary degree out of range");
  if (k <= 2 && !is_cocycle(k, omega))
    throw std::invalid_argument("witness requested for a non-cocycle");
  return solve_affine(d_[k - 1], omega);
}

Representation coefficient_module(const Triad& triad) {
  const LiePair& pair = triad.pair;
  const std::size_t n = triad.module_dim();
  const std::size_t n2 = n * n;
  const std::size_t m = pair.quotient_dim();
  const Representation bott = pair.bott();

  std::vector<Matrix> action;
  action.reserve(pair.sub_dim());
  for (std::size_t i = 0; i < pair.sub_dim(); ++i) {
    const Matrix& nb = triad.e_rep.action()[i];
    Matrix act(m * n2, m * n2);
    for (std::size_t jp = 0; jp < m; ++jp)
      for (std::size_t u = 0; u < n2; ++u) {
        // basis cochain w = b_{jp}* ⊗ E_u; image block rows at each j
        Matrix eu(n, n);
        eu.at(u / n, u % n) = Rational(1);
        const Matrix comm = vec(commutator(nb, eu));
        const std::size_t col = jp * n2 + u;
        for (std::size_t t = 0; t < n2; ++t) act.at(jp * n2 + t, col) += comm.at(t, 0);
        for (std::size_t j = 0; j < m; ++j) {
          const Rational& w = bott.action()[i].at(jp, j);
          if (!w.is_zero()) act.at(j * n2 + u, col) -= w;
        }
      }
    action.push_back(std::move(act));
  }
  return Representation(pair.sub(), m * n2, std::move(action));
}

Matrix cocycle_cochain(const CurvatureForm& ab_table) {
  if (ab_table.domain != CurvatureForm::Domain::AtimesB)
    throw std::invalid_argument("expected an A⊗B table");
  const std::size_t k = ab_table.first_dim, m = ab_table.second_dim;
  const std::size_t n2 = ab_table.table.empty()
                             ? 0
                             : ab_table.table.front().rows() * ab_table.table.front().cols();
  Matrix omega(k * m * n2, 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix v = vec(ab_table.at(i, j));
      for (std::size_t u = 0; u < n2; ++u) omega.at((i * m + j) * n2 + u, 0) = v.at(u, 0);
    }
  return omega;
}

Matrix zero_cochain(const std::vector<Matrix>& per_b_basis) {
  const std::size_t m = per_b_basis.size();
  const std::size_t n2 =
      per_b_basis.empty() ? 0 : per_b_basis.front().rows() * per_b_basis.front().cols();
  Matrix s(m * n2, 1);
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix v = vec(per_b_basis[j]);
    for (std::size_t u = 0; u < n2; ++u) s.at(j * n2 + u, 0) = v.at(u, 0);
  }
  return s;
}

}  // namespace atk
