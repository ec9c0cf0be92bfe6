#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "qdram/channels.h"
#include "qdram/qubit.h"
#include "qdram/random.h"

namespace qdram {

enum class Outcome { kUp, kDown };

// Binomial proportion estimate with a 95% Wilson score interval.
// n_samples == 0 marks an exact record (written, not sampled); estimates
// produced by estimate_up_probability always have n_samples >= 1.
struct Estimate {
  double p_hat = 0.0;
  std::size_t n_samples = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  static Estimate exact(double p) { return Estimate{p, 0, p, p}; }
};

enum class PhasePolicy { kZero, kUniformRandom };

// Ideal projective z-basis measurement: returns kUp with probability m00
// and the fully collapsed post-state (the corresponding basis projector).
std::pair<Outcome, DensityMatrix> measure_z(const DensityMatrix& rho,
                                            RngStream& rng);

// p_hat = (#up)/n with the Wilson score interval at 95% confidence.
// Throws EmptySampleError on an empty batch.
Estimate estimate_up_probability(std::span<const Outcome> outcomes);

// Re-preparation from a magnitude record: starts from |up> (fresh quanton
// from the spin-polarized contact), rotates about y so |up|^2 = p_hat,
// then applies the relative phase per policy (kUniformRandom draws a fresh
// arbitrary phase; kZero is deterministic for tests).
QubitState recreate_from_estimate(const Estimate& est, PhasePolicy policy,
                                  RngStream& rng);

// Probability that n equally spaced projective measurements all find |up>
// under coherent leakage at rate omega over total_time:
//   cos^2(omega*T/(2n))^n
double zeno_survival_analytic(double omega_rad_s, double total_time_s,
                              std::size_t n_measurements);

// Monte Carlo estimate of the same survival via repeated evolve + measure.
double zeno_survival_mc(double omega_rad_s, double total_time_s,
                        std::size_t n_measurements, std::size_t trials,
                        RngStream& rng);

}  // namespace qdram
