#include "eef/family.hpp"

#include <algorithm>
#include <cmath>

namespace eef {

namespace {

unsigned long small_exponent(const Int& e) {
  if (e < 0 || !e.fits_ulong_p())
    throw math_error("exponent out of range: " + e.get_str());
  return e.get_ui();
}

}  // namespace

Density Density::exact(StateSpace states, RatVector values) {
  states.validate();
  if (values.size() != states.size())
    throw math_error("density length does not match the state space");
  Rational mass(0);
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] < 0) throw math_error("density has a negative value at state " +
                                        states.labels[x]);
    mass += values[x] * Rational(states.mu[x]);
  }
  if (mass != 1)
    throw math_error("density mass is " + to_string(mass) + ", expected 1");
  Density d;
  d.states_ = std::move(states);
  d.exact_ = true;
  d.rat_ = std::move(values);
  d.dbl_.reserve(d.rat_.size());
  for (const Rational& v : d.rat_) d.dbl_.push_back(v.get_d());
  return d;
}

Density Density::floating(StateSpace states, std::vector<double> values) {
  states.validate();
  if (values.size() != states.size())
    throw math_error("density length does not match the state space");
  double mass = 0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!(values[x] >= 0))
      throw math_error("density has a negative value at state " + states.labels[x]);
    mass += values[x] * states.mu[x].get_d();
  }
  if (std::abs(mass - 1.0) > 1e-12)
    throw math_error("density mass is " + std::to_string(mass) + ", expected 1");
  Density d;
  d.states_ = std::move(states);
  d.exact_ = false;
  d.dbl_ = std::move(values);
  return d;
}

double Density::value(std::size_t x) const { return dbl_.at(x); }

const Rational& Density::exact_value(std::size_t x) const {
  if (!exact_) throw math_error("density is not exact");
  return rat_.at(x);
}

const RatVector& Density::exact_values() const {
  if (!exact_) throw math_error("density is not exact");
  return rat_;
}

std::vector<std::size_t> Density::support() const {
  std::vector<std::size_t> s;
  for (std::size_t x = 0; x < size(); ++x) {
    bool pos = exact_ ? rat_[x] > 0 : dbl_[x] > 0;
    if (pos) s.push_back(x);
  }
  return s;
}

bool Density::full_support() const { return support().size() == size(); }

double log_partition(const ModelMatrix& m, const ThetaParam& theta) {
  m.validate();
  if (theta.coords.size() != m.rows())
    throw math_error("theta length does not match the model rows");
  const std::size_t n = m.cols();
  std::vector<double> v(n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < m.rows(); ++j)
      v[x] += theta.coords[j] * m.a.at(j, x).get_d();
  double vmax = *std::max_element(v.begin(), v.end());
  double s = 0;
  for (std::size_t x = 0; x < n; ++x)
    s += std::exp(v[x] - vmax) * m.states.mu[x].get_d();
  return vmax + std::log(s);
}

Density density_theta(const ModelMatrix& m, const ThetaParam& theta) {
  m.validate();
  if (theta.coords.size() != m.rows())
    throw math_error("theta length does not match the model rows");
  const std::size_t n = m.cols();
  std::vector<double> v(n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < m.rows(); ++j)
      v[x] += theta.coords[j] * m.a.at(j, x).get_d();
  double vmax = *std::max_element(v.begin(), v.end());
  double z = 0;
  for (std::size_t x = 0; x < n; ++x) {
    v[x] = std::exp(v[x] - vmax);
    z += v[x] * m.states.mu[x].get_d();
  }
  for (std::size_t x = 0; x < n; ++x) v[x] /= z;
  return Density::floating(m.states, std::move(v));
}

Density density_zeta(const IntMatrix& mono, const StateSpace& states,
                     const ZetaParam& zeta) {
  states.validate();
  const std::size_t l = mono.rows();
  const std::size_t n = mono.cols();
  if (n != states.size())
    throw math_error("monomial matrix width does not match the state space");
  if (zeta.coords.size() != l)
    throw math_error("zeta length does not match the monomial rows");
  for (const Rational& z : zeta.coords)
    if (z < 0) throw math_error("zeta must be nonnegative");
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t x = 0; x < n; ++x)
      if (mono.at(j, x) < 0)
        throw math_error("monomial exponents must be nonnegative");
  RatVector u(n, Rational(1));
  bool any_positive = false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < l; ++j) {
      const Int& e = mono.at(j, x);
      if (e > 0) u[x] *= rational_pow(zeta.coords[j], small_exponent(e));
    }
    if (u[x] > 0) any_positive = true;
  }
  if (!any_positive)
    throw math_error("no probability is defined: every monomial vanishes");
  Rational z(0);
  for (std::size_t x = 0; x < n; ++x) z += u[x] * Rational(states.mu[x]);
  for (std::size_t x = 0; x < n; ++x) u[x] /= z;
  return Density::exact(states, std::move(u));
}

MeanParam mean_parameters(const ModelMatrix& m, const Density& p) {
  m.validate();
  if (p.size() != m.cols())
    throw math_error("density does not match the model's state space");
  MeanParam eta;
  eta.dbl.assign(m.rows(), 0.0);
  if (p.is_exact()) {
    eta.exact = true;
    eta.rat.assign(m.rows(), Rational(0));
    for (std::size_t j = 0; j < m.rows(); ++j) {
      for (std::size_t x = 0; x < m.cols(); ++x)
        eta.rat[j] += Rational(m.a.at(j, x)) * p.exact_value(x) * Rational(m.states.mu[x]);
      eta.dbl[j] = eta.rat[j].get_d();
    }
    return eta;
  }
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t x = 0; x < m.cols(); ++x)
      eta.dbl[j] += m.a.at(j, x).get_d() * p.value(x) * m.states.mu[x].get_d();
  return eta;
}

bool check_implicit(const Density& p, const LatticeBasis& k) {
  if (!p.is_exact()) throw math_error("check_implicit requires an exact density");
  if (p.size() != k.n_states())
    throw math_error("kernel does not match the density's state space");
  for (std::size_t c = 0; c < k.dimension(); ++c) {
    Rational lhs(1), rhs(1);
    for (std::size_t x = 0; x < p.size(); ++x) {
      const Int& w = k.k.at(x, c);
      if (w > 0)
        lhs *= rational_pow(p.exact_value(x), small_exponent(w));
      else if (w < 0)
        rhs *= rational_pow(p.exact_value(x), small_exponent(-w));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

ModelMatrix trace_model(const ModelMatrix& m, const std::vector<std::size_t>& states) {
  m.validate();
  if (states.empty()) throw math_error("trace_model: empty state set");
  std::vector<std::size_t> s = states;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw math_error("trace_model: duplicate state index");
  if (s.back() >= m.cols()) throw math_error("trace_model: state index out of range");
  ModelMatrix out;
  out.row_names = m.row_names;
  for (std::size_t x : s) {
    out.states.labels.push_back(m.states.labels[x]);
    out.states.mu.push_back(m.states.mu[x]);
  }
  out.a = IntMatrix(m.rows(), s.size());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t i = 0; i < s.size(); ++i) out.a.at(j, i) = m.a.at(j, s[i]);
  out.validate();
  return out;
}

double tv_distance(const Density& p, const Density& q) {
  if (p.size() != q.size())
    throw math_error("total variation requires equal state spaces");
  double s = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    s += std::abs(p.value(x) - q.value(x)) * p.states().mu[x].get_d();
  return s / 2;
}

}  // namespace eef
