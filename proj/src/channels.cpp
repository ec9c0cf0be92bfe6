#include "qdram/channels.h"

#include <cmath>

namespace qdram {

Markovian::Markovian(double t1_s, double t2_s) : t1_s_(t1_s), t2_s_(t2_s) {
  if (!std::isfinite(t1_s) || !std::isfinite(t2_s)) {
    throw NonFiniteError("relaxation times must be finite");
  }
  if (t1_s <= 0.0 || t2_s <= 0.0) {
    throw OutOfRangeError("relaxation times must be positive");
  }
  if (t2_s > 2.0 * t1_s) {
    throw OutOfRangeError("t2 must not exceed 2*t1");
  }
}

CoherentLeakage::CoherentLeakage(double omega_rad_s)
    : omega_rad_s_(omega_rad_s) {
  if (!std::isfinite(omega_rad_s)) {
    throw NonFiniteError("leakage rate must be finite");
  }
  if (omega_rad_s < 0.0) {
    throw OutOfRangeError("leakage rate must be nonnegative");
  }
}

DensityMatrix amplitude_damping(const DensityMatrix& rho, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw OutOfRangeError("amplitude damping strength must lie in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - gamma);
  return DensityMatrix::from_elements(
      rho.m00() + gamma * rho.m11(), keep * rho.m01(), keep * rho.m10(),
      (1.0 - gamma) * rho.m11());
}

DensityMatrix phase_damping(const DensityMatrix& rho, double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) {
    throw OutOfRangeError("phase damping strength must lie in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - lam);
  return DensityMatrix::from_elements(rho.m00(), keep * rho.m01(),
                                      keep * rho.m10(), rho.m11());
}

ChannelParams markovian_step_params(const Markovian& model, double dt_s) {
  ChannelParams params;
  params.gamma = 1.0 - std::exp(-dt_s / model.t1_s());
  // Residual off-diagonal factor after amplitude damping is
  // exp(-dt/(2 t1)); the total must be exp(-dt/t2).
  const double residual =
      std::exp(-dt_s * (1.0 / model.t2_s() - 0.5 / model.t1_s()));
  params.lam = std::max(0.0, 1.0 - residual * residual);
  return params;
}

namespace {

// U rho U^dag for a real rotation matrix [[c, -s], [s, c]].
DensityMatrix conjugate_by_rotation(const DensityMatrix& rho, double c,
                                    double s) {
  const Complex m00 = rho.m00();
  const Complex m01 = rho.m01();
  const Complex m10 = rho.m10();
  const Complex m11 = rho.m11();
  const Complex n00 = c * c * m00 - c * s * (m01 + m10) + s * s * m11;
  const Complex n01 = c * s * (m00 - m11) + c * c * m01 - s * s * m10;
  const Complex n11 = s * s * m00 + c * s * (m01 + m10) + c * c * m11;
  return DensityMatrix::from_elements(n00, n01, std::conj(n01), n11);
}

}  // namespace

DensityMatrix evolve(const DensityMatrix& rho, double dt_s,
                     const NoiseModel& model) {
  if (!(dt_s >= 0.0)) {
    throw NegativeTimeError("evolution time must be nonnegative");
  }
  if (std::holds_alternative<Noiseless>(model)) {
    return rho;
  }
  if (const auto* markovian = std::get_if<Markovian>(&model)) {
    const ChannelParams params = markovian_step_params(*markovian, dt_s);
    return phase_damping(amplitude_damping(rho, params.gamma), params.lam);
  }
  const auto& leakage = std::get<CoherentLeakage>(model);
  const double half_angle = 0.5 * leakage.omega_rad_s() * dt_s;
  return conjugate_by_rotation(rho, std::cos(half_angle), std::sin(half_angle));
}

}  // namespace qdram
