#include "qdram/measurement.h"

#include <algorithm>
#include <cmath>

namespace qdram {

namespace {

// 97.5th percentile of the standard normal, for 95% two-sided intervals.
constexpr double kWilsonZ95 = 1.959963984540054;

}  // namespace

std::pair<Outcome, DensityMatrix> measure_z(const DensityMatrix& rho,
                                            RngStream& rng) {
  const double p_up = std::clamp(rho.p_up(), 0.0, 1.0);
  if (rng.uniform01() < p_up) {
    return {Outcome::kUp, DensityMatrix::from_elements(1.0, 0.0, 0.0, 0.0)};
  }
  return {Outcome::kDown, DensityMatrix::from_elements(0.0, 0.0, 0.0, 1.0)};
}

Estimate estimate_up_probability(std::span<const Outcome> outcomes) {
  if (outcomes.empty()) {
    throw EmptySampleError("cannot estimate from an empty outcome batch");
  }
  const auto n = static_cast<double>(outcomes.size());
  const auto ups = static_cast<double>(
      std::count(outcomes.begin(), outcomes.end(), Outcome::kUp));
  const double p_hat = ups / n;

  const double z = kWilsonZ95;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p_hat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;

  Estimate est;
  est.p_hat = p_hat;
  est.n_samples = outcomes.size();
  est.ci_low = std::clamp(center - half, 0.0, p_hat);
  est.ci_high = std::clamp(center + half, p_hat, 1.0);
  return est;
}

QubitState recreate_from_estimate(const Estimate& est, PhasePolicy policy,
                                  RngStream& rng) {
  if (!(est.p_hat >= 0.0 && est.p_hat <= 1.0)) {
    throw OutOfRangeError("estimate p_hat must lie in [0, 1]");
  }
  const double theta = 2.0 * std::acos(std::sqrt(est.p_hat));
  QubitState q = rotate_y(spin_up(), theta);
  if (policy == PhasePolicy::kUniformRandom) {
    q = apply_relative_phase(q, rng.uniform_angle());
  }
  return q;
}

double zeno_survival_analytic(double omega_rad_s, double total_time_s,
                              std::size_t n_measurements) {
  if (n_measurements == 0) {
    throw OutOfRangeError("at least one measurement is required");
  }
  if (omega_rad_s < 0.0 || total_time_s < 0.0) {
    throw OutOfRangeError("rate and time must be nonnegative");
  }
  const auto n = static_cast<double>(n_measurements);
  const double c = std::cos(omega_rad_s * total_time_s / (2.0 * n));
  return std::pow(c * c, n);
}

double zeno_survival_mc(double omega_rad_s, double total_time_s,
                        std::size_t n_measurements, std::size_t trials,
                        RngStream& rng) {
  if (trials == 0) {
    throw OutOfRangeError("at least one trial is required");
  }
  if (n_measurements == 0) {
    throw OutOfRangeError("at least one measurement is required");
  }
  const double dt = total_time_s / static_cast<double>(n_measurements);
  const CoherentLeakage leakage(omega_rad_s);
  const NoiseModel model = leakage;

  std::size_t survived = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    DensityMatrix rho = to_density(spin_up());
    bool all_up = true;
    for (std::size_t k = 0; k < n_measurements; ++k) {
      rho = evolve(rho, dt, model);
      auto [outcome, post] = measure_z(rho, rng);
      if (outcome == Outcome::kDown) {
        all_up = false;
        break;
      }
      rho = post;
    }
    if (all_up) {
      ++survived;
    }
  }
  return static_cast<double>(survived) / static_cast<double>(trials);
}

}  // namespace qdram
