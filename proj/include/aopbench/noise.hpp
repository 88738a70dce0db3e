#pragma once

#include <cstdint>

#include "aopbench/rng.hpp"

namespace aopbench {

enum class NoiseMode { Exact, Grid, Stochastic };

/// Precision parameters of the emulated quantum subroutines. eps1 bounds
/// the phase-estimation (eigenvalue-register) error, eps2 the
/// amplitude-estimation (angle) error. eps0, eta and t0 only enter the
/// cost model.
struct NoiseConfig {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps0 = 0.0;
  NoiseMode mode = NoiseMode::Exact;
  std::uint64_t seed = 0;
  double eta = 0.5;  // amplitude-estimation failure probability
  double t0 = 1.0;   // evolution-time constant

  bool exact() const { return mode == NoiseMode::Exact; }
};

NoiseMode noise_mode_from_string(const std::string& name);
std::string to_string(NoiseMode mode);

/// Bounded perturbation of a positive register value. Grid mode rounds to
/// the nearest multiple of eps, stochastic mode adds uniform(-eps, eps)
/// noise clamped to stay positive, exact mode (or eps == 0) is the
/// identity.
double noisy_value(double true_value, double eps, NoiseMode mode,
                   SplitMix64& rng);

/// Same contract for an estimated angle: grid mode rounds to the nearest
/// multiple of eps * pi, stochastic adds uniform(-eps, eps). The result is
/// clamped to [0, pi/2].
double noisy_angle(double theta, double eps, NoiseMode mode, SplitMix64& rng);

}  // namespace aopbench
