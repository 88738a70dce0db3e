#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aopbench/types.hpp"

namespace aopbench {

/// Spectral iterate: the singular values beta_j of the projection matrix
/// in the fixed left/right singular basis, kept as a unit vector, plus
/// the history of normalization constants c^(1)..c^(i). Templated on the
/// real type so the same iteration runs in double or extended precision.
template <class Real>
struct BetaState {
  int iteration = 0;
  std::vector<Real> beta;       // positive, sum of squares == 1
  std::vector<Real> c_history;  // one entry per update applied

  int k() const { return static_cast<int>(beta.size()); }
};

/// Per-iteration condition-number diagnostics: kappa^(i) = max beta / min
/// beta and a^(i) = max beta^2, recorded as doubles regardless of the
/// solver precision.
struct KappaTrace {
  std::vector<double> kappa_seq;
  std::vector<double> a_seq;
};

template <class Real>
BetaState<Real> uniform_state(int k) {
  if (k < 1) throw std::invalid_argument("uniform_state: k must be >= 1");
  using std::sqrt;
  BetaState<Real> state;
  state.beta.assign(static_cast<std::size_t>(k), Real(1) / sqrt(Real(k)));
  return state;
}

/// Unnormalized update components w_j = (sigma_j^2 beta_j^2 + lambda2) /
/// (sigma_j^2 beta_j). Throws if any beta_j <= 0.
template <class Real>
std::vector<Real> unnormalized_update(const std::vector<double>& sigma_sq,
                                      const std::vector<Real>& beta,
                                      double lambda2) {
  if (sigma_sq.size() != beta.size())
    throw std::invalid_argument("unnormalized_update: size mismatch");
  std::vector<Real> w(beta.size());
  const Real lam(lambda2);
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (!(beta[j] > 0))
      throw std::domain_error("unnormalized_update: beta[" + std::to_string(j) +
                              "] is not positive");
    const Real ss(sigma_sq[j]);
    w[j] = (ss * beta[j] * beta[j] + lam) / (ss * beta[j]);
  }
  return w;
}

template <class Real>
Real norm2(const std::vector<Real>& v) {
  using std::sqrt;
  Real acc(0);
  for (const Real& x : v) acc += x * x;
  return sqrt(acc);
}

/// One fixed-point step: normalizes the unnormalized update to a unit
/// vector and appends the normalization constant c^(i) to the history.
template <class Real>
BetaState<Real> spectral_update(const SpectralModel& model,
                                const BetaState<Real>& state, double lambda2) {
  std::vector<Real> w = unnormalized_update(model.sigma_sq, state.beta, lambda2);
  const Real c = norm2(w);
  BetaState<Real> next;
  next.iteration = state.iteration + 1;
  next.beta.resize(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) next.beta[j] = w[j] / c;
  next.c_history = state.c_history;
  next.c_history.push_back(c);
  return next;
}

template <class Real>
double kappa_of(const std::vector<Real>& beta) {
  auto [lo, hi] = std::minmax_element(beta.begin(), beta.end());
  return static_cast<double>(*hi / *lo);
}

template <class Real>
double max_sq_of(const std::vector<Real>& beta) {
  const Real m = *std::max_element(beta.begin(), beta.end());
  return static_cast<double>(m * m);
}

template <class Real>
struct SpectralSolveResult {
  BetaState<Real> state;
  int iterations = 0;  // number of updates applied (s)
  bool converged = false;
  KappaTrace trace;  // entries 0..s
};

/// Iterates spectral_update from the uniform start until the sup-norm
/// change of beta drops below eps, or max_iter updates have been applied.
/// Non-convergence is reported through the flag, never thrown. The
/// optional observer is invoked after every update with (iteration, c,
/// beta).
template <class Real>
SpectralSolveResult<Real> solve_spectral(
    const SpectralModel& model, double lambda2, double eps, int max_iter,
    const std::function<void(int, const Real&, const std::vector<Real>&)>&
        observer = nullptr) {
  if (!(eps > 0)) throw std::invalid_argument("solve_spectral: eps must be > 0");
  if (max_iter < 1)
    throw std::invalid_argument("solve_spectral: max_iter must be >= 1");
  using std::abs;

  SpectralSolveResult<Real> result;
  result.state = uniform_state<Real>(model.k);
  result.trace.kappa_seq.push_back(kappa_of(result.state.beta));
  result.trace.a_seq.push_back(max_sq_of(result.state.beta));

  const Real threshold(eps);
  for (int i = 1; i <= max_iter; ++i) {
    BetaState<Real> next = spectral_update(model, result.state, lambda2);
    Real change(0);
    for (std::size_t j = 0; j < next.beta.size(); ++j) {
      const Real d = abs(next.beta[j] - result.state.beta[j]);
      if (d > change) change = d;
    }
    result.state = std::move(next);
    result.iterations = i;
    result.trace.kappa_seq.push_back(kappa_of(result.state.beta));
    result.trace.a_seq.push_back(max_sq_of(result.state.beta));
    if (observer) observer(i, result.state.c_history.back(), result.state.beta);
    if (change < threshold) {
      result.converged = true;
      break;
    }
  }
  return result;
}

/// Condition-number recurrence kappa^(i) =
/// (a + lambda2 kappa^2) kappa_prev / (a + lambda2 kappa_prev^2), where a
/// is the previous iterate's max beta^2 and kappa the model condition
/// number.
double kappa_recurrence(double kappa_prev, double a_prev, double lambda2,
                        double kappa);

/// Rotation scale rho = 1 / (2 lambda2 k kappa^2 kappa_iter). For states
/// produced by the iteration with lambda2 * kappa^2 >= 1 this keeps every
/// rotation amplitude rho * f(sigma_j, beta_j) at most 1.
double rho_parameter(int k, double lambda2, double kappa, double kappa_iter);

/// Analytic bounds on the normalization constant, evaluated together with
/// the exact value for the state's next update.
struct CBounds {
  double c_lower = 0;        // sqrt(1 + 2 k lambda2 + k^2 lambda2^2)
  double c_cap = 0;          // 1 + lambda2 sqrt(k) kappa^2
  double c_exact = 0;        // ||w|| for this state
  double max_component = 0;  // max_j w_j
};

/// Computes CBounds and enforces c_lower <= c_exact and max_component <=
/// c_cap (tiny floating-point slack). A violation throws std::logic_error:
/// it means the state did not come from the iteration or a bound is wrong.
template <class Real>
CBounds c_bounds(const SpectralModel& model, const BetaState<Real>& state,
                 double lambda2) {
  CBounds b;
  const double k = static_cast<double>(model.k);
  b.c_lower = std::sqrt(1.0 + 2.0 * k * lambda2 + k * k * lambda2 * lambda2);
  b.c_cap = 1.0 + lambda2 * std::sqrt(k) * model.kappa * model.kappa;

  std::vector<Real> w = unnormalized_update(model.sigma_sq, state.beta, lambda2);
  b.c_exact = static_cast<double>(norm2(w));
  Real max_w = w.front();
  for (const Real& x : w)
    if (x > max_w) max_w = x;
  b.max_component = static_cast<double>(max_w);

  const double slack = 1e-12;
  if (b.c_exact < b.c_lower * (1.0 - slack))
    throw std::logic_error("c_bounds: lower bound violated");
  if (b.max_component > b.c_cap * (1.0 + slack))
    throw std::logic_error("c_bounds: cap violated");
  return b;
}

/// Marked-amplitude geometry sin(theta) = c_i / (c_cap sqrt(k)), in
/// (0, 1]. Throws std::domain_error if the ratio exceeds 1 beyond
/// floating-point slack.
double sin_theta(double c_i, double c_cap, int k);

}  // namespace aopbench
