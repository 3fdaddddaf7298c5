#include "eef/border.hpp"

#include <algorithm>
#include <cmath>

#include "eef/linalg.hpp"

namespace eef {

namespace {

std::vector<Int> cleared_certificate(const RatVector& c) {
  Int lcm(1);
  for (const Rational& v : c)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(c.size());
  Int g(0);
  for (const Rational& v : c) {
    Rational scaled = v * Rational(lcm);
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (Int& v : out) v /= g;
  return out;
}

std::vector<bool> to_mask(const std::vector<std::size_t>& states, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (std::size_t x : states) {
    if (x >= n) throw math_error("state index out of range");
    mask[x] = true;
  }
  return mask;
}

// Least-squares fit of y by the affine span of the model rows. Coefficients
// come back per user row (the constant absorbed separately); residual is the
// largest absolute misfit.
struct LogFit {
  std::vector<double> theta;
  double residual = 0.0;
};

LogFit fit_log_affine(const ModelMatrix& m, const std::vector<double>& y,
                      const std::vector<std::size_t>& states) {
  const std::size_t r = m.rows() + 1;
  const std::size_t n = states.size();
  std::vector<std::vector<double>> g(r, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) g[0][i] = 1.0;
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t i = 0; i < n; ++i) g[j + 1][i] = m.a.at(j, states[i]).get_d();

  // Normal equations with column skipping on rank deficiency.
  std::vector<std::vector<double>> nm(r, std::vector<double>(r + 1, 0.0));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t i = 0; i < n; ++i) nm[a][b] += g[a][i] * g[b][i];
    for (std::size_t i = 0; i < n; ++i) nm[a][r] += g[a][i] * y[i];
  }
  double scale = 1.0;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) scale = std::max(scale, std::abs(nm[a][b]));
  const double thr = 1e-12 * scale;

  std::vector<double> coef(r, 0.0);
  std::vector<std::size_t> pivot_row(r, r);
  std::size_t pr = 0;
  for (std::size_t col = 0; col < r && pr < r; ++col) {
    std::size_t best = pr;
    for (std::size_t i = pr + 1; i < r; ++i)
      if (std::abs(nm[i][col]) > std::abs(nm[best][col])) best = i;
    if (std::abs(nm[best][col]) <= thr) continue;
    std::swap(nm[pr], nm[best]);
    for (std::size_t i = pr + 1; i < r; ++i) {
      double f = nm[i][col] / nm[pr][col];
      if (f == 0) continue;
      for (std::size_t b = col; b <= r; ++b) nm[i][b] -= f * nm[pr][b];
    }
    pivot_row[pr] = col;
    ++pr;
  }
  for (std::size_t i = pr; i-- > 0;) {
    std::size_t col = pivot_row[i];
    double v = nm[i][r];
    for (std::size_t b = col + 1; b < r; ++b) v -= nm[i][b] * coef[b];
    coef[col] = v / nm[i][col];
  }

  LogFit fit;
  fit.theta.assign(coef.begin() + 1, coef.end());
  for (std::size_t i = 0; i < n; ++i) {
    double fitted = coef[0];
    for (std::size_t j = 0; j < m.rows(); ++j) fitted += coef[j + 1] * g[j + 1][i];
    fit.residual = std::max(fit.residual, std::abs(fitted - y[i]));
  }
  return fit;
}

std::vector<double> log_values(const Density& q, const std::vector<std::size_t>& states) {
  std::vector<double> y;
  y.reserve(states.size());
  for (std::size_t x : states) y.push_back(std::log(q.value(x)));
  return y;
}

std::vector<std::size_t> all_states(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

std::vector<ExposedSet> exposed_sets_from_basis(const HilbertBasisSet& basis,
                                                const ModelMatrix& m) {
  const ModelMatrix ma = ensure_constant_row(m);
  const IntMatrix w = weighted_rows(ma);
  if (basis.n_states() != m.cols())
    throw math_error("basis does not match the model's state space");
  std::vector<ExposedSet> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& b = basis.vectors[j];
    ExposedSet s;
    for (std::size_t x = 0; x < b.size(); ++x)
      if (b[x] == 0) s.states.push_back(x);
    if (s.states.empty()) continue;
    auto c = solve_in_rowspan(b, w);
    if (!c)
      throw math_error("basis element " + std::to_string(j + 1) +
                       " is not in the model's row span");
    s.certificate = cleared_certificate(*c);
    s.generators = {j};
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<ExposedSet> is_exposed(const std::vector<std::size_t>& states,
                                     const std::vector<ExposedSet>& basis_sets,
                                     std::size_t n_states) {
  if (states.empty()) throw math_error("is_exposed: empty state set");
  const std::vector<bool> target = to_mask(states, n_states);

  std::vector<bool> meet(n_states, true);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < basis_sets.size(); ++i) {
    const std::vector<bool> zs = to_mask(basis_sets[i].states, n_states);
    bool contains = true;
    for (std::size_t x = 0; x < n_states; ++x)
      if (target[x] && !zs[x]) {
        contains = false;
        break;
      }
    if (!contains) continue;
    members.push_back(i);
    for (std::size_t x = 0; x < n_states; ++x) meet[x] = meet[x] && zs[x];
  }
  if (meet != target) return std::nullopt;

  ExposedSet s;
  for (std::size_t x = 0; x < n_states; ++x)
    if (target[x]) s.states.push_back(x);
  const std::size_t clen =
      basis_sets.empty() ? 0 : basis_sets.front().certificate.size();
  s.certificate.assign(clen, Int(0));
  for (std::size_t i : members) {
    for (std::size_t k = 0; k < clen; ++k)
      s.certificate[k] += basis_sets[i].certificate[k];
    for (std::size_t gj : basis_sets[i].generators) s.generators.push_back(gj);
  }
  std::sort(s.generators.begin(), s.generators.end());
  return s;
}

ClosureVerdict extended_membership(const Density& q, const ModelMatrix& m,
                                   const HilbertBasisSet& basis) {
  m.validate();
  if (q.size() != m.cols())
    throw math_error("density does not match the model's state space");
  ClosureVerdict verdict;
  const std::vector<std::size_t> supp = q.support();

  if (supp.size() == q.size()) {
    bool inside;
    LogFit fit = fit_log_affine(m, log_values(q, supp), supp);
    if (q.is_exact())
      inside = check_implicit(q, basis.kernel);
    else
      inside = fit.residual < 1e-9;
    if (!inside) return verdict;
    verdict.kind = Closure::interior;
    verdict.theta = ThetaParam{fit.theta};
    return verdict;
  }

  const auto sets = exposed_sets_from_basis(basis, m);
  auto face = is_exposed(supp, sets, q.size());
  if (!face) return verdict;

  const ModelMatrix tm = trace_model(m, supp);
  bool inside;
  LogFit fit = fit_log_affine(tm, log_values(q, supp), all_states(supp.size()));
  if (q.is_exact()) {
    RatVector cond;
    cond.reserve(supp.size());
    for (std::size_t x : supp) cond.push_back(q.exact_value(x));
    inside = check_implicit(Density::exact(tm.states, std::move(cond)),
                            kernel_basis(tm));
  } else {
    inside = fit.residual < 1e-9;
  }
  if (!inside) return verdict;
  verdict.kind = Closure::border;
  verdict.face = std::move(*face);
  verdict.theta = ThetaParam{fit.theta};
  return verdict;
}

std::vector<double> default_beta_schedule() {
  std::vector<double> betas;
  betas.reserve(41);
  for (int k = 0; k <= 40; ++k) betas.push_back(-std::ldexp(1.0, k));
  return betas;
}

GibbsPath make_gibbs_path(const ExposedSet& face, ThetaParam base_theta) {
  return GibbsPath{std::move(base_theta), face.certificate, default_beta_schedule()};
}

namespace {

std::vector<double> face_statistic(const ModelMatrix& m, const GibbsPath& path) {
  std::vector<double> g(m.cols(), 0.0);
  if (path.face_functional.empty()) return g;
  const ModelMatrix ma = ensure_constant_row(m);
  if (path.face_functional.size() != ma.rows())
    throw math_error("face functional does not match the constant-adjoined rows");
  const IntMatrix w = weighted_rows(ma);
  for (std::size_t x = 0; x < m.cols(); ++x) {
    Int v(0);
    for (std::size_t j = 0; j < ma.rows(); ++j)
      v += path.face_functional[j] * w.at(j, x);
    g[x] = v.get_d();
  }
  return g;
}

}  // namespace

Density gibbs_density(const ModelMatrix& m, const GibbsPath& path, double beta) {
  m.validate();
  if (!std::isfinite(beta)) throw math_error("beta must be finite");
  if (path.base_theta.coords.size() != m.rows())
    throw math_error("theta length does not match the model rows");
  const std::size_t n = m.cols();
  const std::vector<double> g = face_statistic(m, path);
  std::vector<double> e(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    e[x] = beta * g[x];
    for (std::size_t j = 0; j < m.rows(); ++j)
      e[x] += path.base_theta.coords[j] * m.a.at(j, x).get_d();
  }
  double emax = *std::max_element(e.begin(), e.end());
  double z = 0;
  for (std::size_t x = 0; x < n; ++x) {
    e[x] = std::exp(e[x] - emax);
    z += e[x] * m.states.mu[x].get_d();
  }
  for (std::size_t x = 0; x < n; ++x) e[x] /= z;
  return Density::floating(m.states, std::move(e));
}

LimitResult limit_of_path(const ModelMatrix& m, const GibbsPath& path, double tol) {
  if (!(tol > 0)) throw math_error("tolerance must be positive");
  if (path.beta_schedule.empty())
    throw math_error("empty beta schedule");
  for (std::size_t i = 1; i < path.beta_schedule.size(); ++i)
    if (!(path.beta_schedule[i] < path.beta_schedule[i - 1]))
      throw math_error("beta schedule must be strictly decreasing");

  bool zero_functional = true;
  for (const Int& v : path.face_functional)
    if (v != 0) {
      zero_functional = false;
      break;
    }
  if (zero_functional)
    return LimitResult{density_theta(m, path.base_theta), 0.0, 0.0};

  Density prev = gibbs_density(m, path, path.beta_schedule.front());
  double gap = 0.0;
  for (std::size_t i = 1; i < path.beta_schedule.size(); ++i) {
    Density cur = gibbs_density(m, path, path.beta_schedule[i]);
    gap = tv_distance(prev, cur);
    if (gap < tol) {
      std::vector<double> v(cur.size());
      double z = 0;
      for (std::size_t x = 0; x < cur.size(); ++x) {
        v[x] = cur.value(x) < tol ? 0.0 : cur.value(x);
        z += v[x] * m.states.mu[x].get_d();
      }
      if (z == 0) throw math_error("limit clipped away all mass; lower tol");
      for (double& p : v) p /= z;
      return LimitResult{Density::floating(m.states, std::move(v)), gap,
                         path.beta_schedule[i]};
    }
    prev = std::move(cur);
  }
  throw math_error("schedule exhausted before convergence: last beta " +
                   std::to_string(path.beta_schedule.back()) + ", tv gap " +
                   std::to_string(gap));
}

Density b_model_density(const HilbertBasisSet& basis, const StateSpace& states,
                        const ZetaParam& zeta) {
  const std::size_t l = basis.size();
  const std::size_t n = basis.n_states();
  if (states.size() != n)
    throw math_error("state space does not match the basis");
  IntMatrix mono(l, n);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t x = 0; x < n; ++x) mono.at(j, x) = basis.vectors[j][x];
  return density_zeta(mono, states, zeta);
}

std::optional<RatVector> face_indicator_expansion(const ModelMatrix& m,
                                                  const std::vector<Int>& b) {
  if (b.size() != m.cols())
    throw math_error("vector length does not match the state space");
  const ModelMatrix ma = ensure_constant_row(m);
  const IntMatrix w = weighted_rows(ma);
  std::vector<Int> f(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) f[x] = Int(1) - b[x];
  return solve_in_rowspan(f, w);
}

}  // namespace eef
