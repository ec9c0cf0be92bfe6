#include "qdram/qubit.h"

#include <cmath>

namespace qdram {

namespace {

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

QubitState::QubitState(Complex up, Complex down) {
  if (!finite(up) || !finite(down)) {
    throw NonFiniteError("qubit amplitudes must be finite");
  }
  const double norm_sq = std::norm(up) + std::norm(down);
  if (norm_sq <= 0.0) {
    throw ZeroVectorError("qubit amplitudes are numerically zero");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  up_ = up * inv;
  down_ = down * inv;
}

QubitState make_qubit(Complex up, Complex down) { return QubitState(up, down); }

QubitState spin_up() { return QubitState(1.0, 0.0); }

QubitState spin_down() { return QubitState(0.0, 1.0); }

QubitState plus_state() { return QubitState(1.0, 1.0); }

ProbPair::ProbPair(double p_up, double p_down) : p_up_(p_up), p_down_(p_down) {
  if (!std::isfinite(p_up) || !std::isfinite(p_down)) {
    throw NonFiniteError("probabilities must be finite");
  }
  if (p_up < -kInvariantTol || p_up > 1.0 + kInvariantTol ||
      p_down < -kInvariantTol || p_down > 1.0 + kInvariantTol) {
    throw OutOfRangeError("probabilities must lie in [0, 1]");
  }
  if (std::abs(p_up + p_down - 1.0) > kInvariantTol) {
    throw InvariantError("probability pair must sum to 1");
  }
}

ProbPair ProbPair::from_p_up(double p_up) { return ProbPair(p_up, 1.0 - p_up); }

DensityMatrix DensityMatrix::from_elements(Complex m00, Complex m01,
                                           Complex m10, Complex m11) {
  if (!finite(m00) || !finite(m01) || !finite(m10) || !finite(m11)) {
    throw NonFiniteError("density matrix elements must be finite");
  }
  if (std::abs(m00.imag()) > kInvariantTol ||
      std::abs(m11.imag()) > kInvariantTol) {
    throw InvariantError("density matrix diagonal must be real");
  }
  if (std::abs(m10 - std::conj(m01)) > kInvariantTol) {
    throw InvariantError("density matrix must be Hermitian");
  }
  if (std::abs(m00.real() + m11.real() - 1.0) > kInvariantTol) {
    throw InvariantError("density matrix trace must be 1");
  }
  const double det = m00.real() * m11.real() - std::norm(m01);
  if (m00.real() < -kInvariantTol || m11.real() < -kInvariantTol ||
      det < -kInvariantTol) {
    throw InvariantError("density matrix must be positive semidefinite");
  }
  return DensityMatrix(m00, m01, m10, m11);
}

double fidelity_pure(const QubitState& a, const QubitState& b) {
  const Complex overlap =
      std::conj(a.up()) * b.up() + std::conj(a.down()) * b.down();
  return std::norm(overlap);
}

double magnitude_fidelity(const ProbPair& p, const ProbPair& q) {
  const double bc = std::sqrt(p.p_up() * q.p_up()) +
                    std::sqrt(p.p_down() * q.p_down());
  return bc * bc;
}

double fidelity_vs_pure(const DensityMatrix& rho, const QubitState& psi) {
  const Complex u = psi.up();
  const Complex d = psi.down();
  const Complex val = std::conj(u) * (rho.m00() * u + rho.m01() * d) +
                      std::conj(d) * (rho.m10() * u + rho.m11() * d);
  return val.real();
}

QubitState rotate_y(const QubitState& q, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return QubitState(c * q.up() - s * q.down(), s * q.up() + c * q.down());
}

QubitState apply_relative_phase(const QubitState& q, double phi) {
  const Complex phase(std::cos(phi), std::sin(phi));
  return QubitState(q.up(), q.down() * phase);
}

DensityMatrix to_density(const QubitState& q) {
  const Complex coherence = q.up() * std::conj(q.down());
  return DensityMatrix::from_elements(std::norm(q.up()), coherence,
                                      std::conj(coherence), std::norm(q.down()));
}

double purity(const DensityMatrix& rho) {
  const double d0 = rho.m00().real();
  const double d1 = rho.m11().real();
  return d0 * d0 + d1 * d1 + 2.0 * std::norm(rho.m01());
}

QubitState dominant_eigenstate(const DensityMatrix& rho) {
  const double half_trace = 0.5 * (rho.m00().real() + rho.m11().real());
  const double det = rho.m00().real() * rho.m11().real() - std::norm(rho.m01());
  const double disc = std::max(half_trace * half_trace - det, 0.0);
  const double lambda = half_trace + std::sqrt(disc);

  // Two algebraic candidates for the eigenvector; pick the better
  // conditioned one.
  const Complex v1_up = rho.m01();
  const Complex v1_down = Complex(lambda) - rho.m00();
  const Complex v2_up = Complex(lambda) - rho.m11();
  const Complex v2_down = rho.m10();
  const double n1 = std::norm(v1_up) + std::norm(v1_down);
  const double n2 = std::norm(v2_up) + std::norm(v2_down);
  if (n1 >= n2) {
    return QubitState(v1_up, v1_down);
  }
  return QubitState(v2_up, v2_down);
}

}  // namespace qdram
