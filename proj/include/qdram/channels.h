#pragma once

#include <variant>

#include "qdram/qubit.h"

namespace qdram {

struct Noiseless {};

// Markovian relaxation/dephasing pair. t2 <= 2*t1 is required for the pair
// of channels to be physical.
class Markovian {
 public:
  Markovian(double t1_s, double t2_s);

  double t1_s() const { return t1_s_; }
  double t2_s() const { return t2_s_; }

 private:
  double t1_s_;
  double t2_s_;
};

// Coherent rotation about the y axis at angular rate omega — the unitary
// leakage a projective measurement can freeze.
class CoherentLeakage {
 public:
  explicit CoherentLeakage(double omega_rad_s);

  double omega_rad_s() const { return omega_rad_s_; }

 private:
  double omega_rad_s_;
};

using NoiseModel = std::variant<Noiseless, Markovian, CoherentLeakage>;

// Per-step channel strengths, both in [0, 1].
struct ChannelParams {
  double gamma = 0.0;  // amplitude damping
  double lam = 0.0;    // phase damping
};

// Two-operator amplitude-damping map relaxing toward |up> (the polarizer
// orientation). Trace preserving; throws OutOfRangeError for gamma
// outside [0, 1].
DensityMatrix amplitude_damping(const DensityMatrix& rho, double gamma);

// Leaves the diagonal untouched and multiplies the off-diagonals by
// sqrt(1 - lam).
DensityMatrix phase_damping(const DensityMatrix& rho, double lam);

// Strengths for one step of length dt: gamma = 1 - exp(-dt/t1), and lam
// chosen so the combined off-diagonal factor equals exp(-dt/t2) exactly
// (amplitude damping already contributes exp(-dt/(2 t1))).
ChannelParams markovian_step_params(const Markovian& model, double dt_s);

// Free evolution for dt under the given model. Markovian composes
// amplitude then residual phase damping; CoherentLeakage rotates by
// omega*dt about y; Noiseless is the identity. Throws NegativeTimeError.
DensityMatrix evolve(const DensityMatrix& rho, double dt_s,
                     const NoiseModel& model);

}  // namespace qdram
