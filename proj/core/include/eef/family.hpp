#pragma once

#include "eef/hilbert.hpp"

namespace eef {

// Probability density with respect to the state space's mu. Exact densities
// normalize exactly; floating ones within 1e-12.
class Density {
 public:
  static Density exact(StateSpace states, RatVector values);
  static Density floating(StateSpace states, std::vector<double> values);

  bool is_exact() const { return exact_; }
  const StateSpace& states() const { return states_; }
  std::size_t size() const { return states_.size(); }

  double value(std::size_t x) const;
  const Rational& exact_value(std::size_t x) const;
  const RatVector& exact_values() const;

  std::vector<std::size_t> support() const;
  bool full_support() const;

 private:
  Density() = default;
  StateSpace states_;
  bool exact_ = false;
  RatVector rat_;
  std::vector<double> dbl_;
};

struct ThetaParam {
  std::vector<double> coords;  // one per model row
};

struct ZetaParam {
  RatVector coords;  // nonnegative, one per monomial row
};

struct MeanParam {
  bool exact = false;
  RatVector rat;
  std::vector<double> dbl;
};

// log sum_x exp(theta . a(x)) mu(x), stabilized by max subtraction.
double log_partition(const ModelMatrix& m, const ThetaParam& theta);

Density density_theta(const ModelMatrix& m, const ThetaParam& theta);

// p(x) proportional to prod_{j : mono(j,x) > 0} zeta_j^mono(j,x), with the
// empty product equal to 1. Throws when every state has mass zero.
Density density_zeta(const IntMatrix& mono, const StateSpace& states,
                     const ZetaParam& zeta);

MeanParam mean_parameters(const ModelMatrix& m, const Density& p);

// Binomial identities along the kernel columns: for each column w,
// prod p(x)^{w+(x)} = prod p(x)^{w-(x)} exactly. Requires an exact density.
bool check_implicit(const Density& p, const LatticeBasis& k);

// Restriction of the model to a nonempty subset of states.
ModelMatrix trace_model(const ModelMatrix& m, const std::vector<std::size_t>& states);

// Total variation distance (1/2) sum |p - q| mu.
double tv_distance(const Density& p, const Density& q);

}  // namespace eef
