#pragma once

#include "eef/family.hpp"

namespace eef {

// An exposed subset of states together with an integer witness: the
// functional certificate^T (weighted rows of ensure_constant_row(m)) is zero
// on `states` and >= 1 elsewhere. The full space is the improper face with a
// zero certificate. `generators` are 0-based indices of the basis elements
// whose zero sets intersect to `states`.
struct ExposedSet {
  std::vector<std::size_t> states;
  std::vector<Int> certificate;
  std::vector<std::size_t> generators;
};

struct GibbsPath {
  ThetaParam base_theta;
  std::vector<Int> face_functional;   // certificate of the target face
  std::vector<double> beta_schedule;  // strictly decreasing
};

enum class Closure { interior, border, outside };

struct ClosureVerdict {
  Closure kind = Closure::outside;
  std::optional<ExposedSet> face;     // present when kind == border
  std::optional<ThetaParam> theta;    // natural parameter on the support
};

struct LimitResult {
  Density density;
  double tv_gap = 0.0;
  double beta_stop = 0.0;
};

// One exposed set per basis element with a nonempty zero set, in basis order.
std::vector<ExposedSet> exposed_sets_from_basis(const HilbertBasisSet& basis,
                                                const ModelMatrix& m);

// S is exposed iff it equals the intersection of every basis zero set
// containing it; the witness is the sum of the members' certificates.
std::optional<ExposedSet> is_exposed(const std::vector<std::size_t>& states,
                                     const std::vector<ExposedSet>& basis_sets,
                                     std::size_t n_states);

// Decides whether q lies in the closed family: interior (full support and
// implicit equations hold), border (exposed support and the conditional lies
// in the trace family), or outside. Exact densities are tested exactly;
// floating ones by log-affine residual below 1e-9.
ClosureVerdict extended_membership(const Density& q, const ModelMatrix& m,
                                   const HilbertBasisSet& basis);

// -2^k for k = 0..40.
std::vector<double> default_beta_schedule();

GibbsPath make_gibbs_path(const ExposedSet& face, ThetaParam base_theta);

// Density proportional to exp(beta * g(x) + theta . a(x)) where g is the
// face functional evaluated state-wise.
Density gibbs_density(const ModelMatrix& m, const GibbsPath& path, double beta);

// Follows the schedule until consecutive densities are within tol in total
// variation, then clips values below tol and renormalizes on the face.
LimitResult limit_of_path(const ModelMatrix& m, const GibbsPath& path, double tol);

// Monomial density over the Hilbert basis rows.
Density b_model_density(const HilbertBasisSet& basis, const StateSpace& states,
                        const ZetaParam& zeta);

// Coefficients of 1 - b_j over the weighted rows of ensure_constant_row(m);
// nullopt when the indicator leaves the row span.
std::optional<RatVector> face_indicator_expansion(const ModelMatrix& m,
                                                  const std::vector<Int>& b);

}  // namespace eef
