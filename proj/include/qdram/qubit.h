#pragma once

#include <complex>

#include "qdram/errors.h"

namespace qdram {

using Complex = std::complex<double>;

// Tolerance for all structural invariants (normalization, Hermiticity,
// unit trace). Double precision on 2x2 systems leaves large headroom.
inline constexpr double kInvariantTol = 1e-12;

// Pure single-qubit state a_up|up> + a_down|down>, kept normalized:
// |up|^2 + |down|^2 = 1 within kInvariantTol. Construction scales the
// input to unit norm; the caller's global phase is preserved (comparisons
// should use the phase-invariant fidelities below).
class QubitState {
 public:
  // Throws ZeroVectorError on (numerically) zero input, NonFiniteError on
  // NaN/Inf components.
  QubitState(Complex up, Complex down);

  Complex up() const { return up_; }
  Complex down() const { return down_; }

  // Probability of measuring spin-up / spin-down in the z basis.
  double p_up() const { return std::norm(up_); }
  double p_down() const { return std::norm(down_); }

 private:
  Complex up_;
  Complex down_;
};

QubitState make_qubit(Complex up, Complex down);

QubitState spin_up();
QubitState spin_down();
// (|up> + |down>)/sqrt(2)
QubitState plus_state();

// Pair of z-basis probabilities; p_up + p_down = 1 within kInvariantTol.
class ProbPair {
 public:
  ProbPair(double p_up, double p_down);

  // Complementary pair (p, 1-p).
  static ProbPair from_p_up(double p_up);

  double p_up() const { return p_up_; }
  double p_down() const { return p_down_; }

 private:
  double p_up_;
  double p_down_;
};

// 2x2 density matrix in the {|up>, |down>} basis. Valid instances are
// Hermitian with real diagonal, unit trace, and positive semidefinite,
// all within kInvariantTol.
class DensityMatrix {
 public:
  // Validates Hermiticity (m10 = conj(m01), real diagonal), unit trace and
  // positivity; throws InvariantError or NonFiniteError otherwise.
  static DensityMatrix from_elements(Complex m00, Complex m01, Complex m10,
                                     Complex m11);

  Complex m00() const { return m00_; }
  Complex m01() const { return m01_; }
  Complex m10() const { return m10_; }
  Complex m11() const { return m11_; }

  // Population of |up> (the Born probability for an up outcome).
  double p_up() const { return m00_.real(); }

 private:
  DensityMatrix(Complex m00, Complex m01, Complex m10, Complex m11)
      : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {}

  Complex m00_, m01_, m10_, m11_;
};

// |<a|b>|^2, symmetric and global-phase invariant, in [0, 1].
double fidelity_pure(const QubitState& a, const QubitState& b);

// (sqrt(p_up q_up) + sqrt(p_down q_down))^2 — the overlap of the magnitude
// records alone, which is all a measure-and-recreate memory preserves.
// Equals 1 iff p = q.
double magnitude_fidelity(const ProbPair& p, const ProbPair& q);

// <psi| rho |psi>: overlap of a (possibly mixed) stored state with a pure
// reference.
double fidelity_vs_pure(const DensityMatrix& rho, const QubitState& psi);

// Rotation about the y axis:
//   [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
QubitState rotate_y(const QubitState& q, double theta);

// Multiplies the down amplitude by exp(i*phi); magnitudes unchanged.
QubitState apply_relative_phase(const QubitState& q, double phi);

// |q><q|
DensityMatrix to_density(const QubitState& q);

// trace(rho^2), in [1/2, 1] for a valid single-qubit density matrix.
double purity(const DensityMatrix& rho);

// Eigenvector of the dominant eigenvalue. Well-conditioned only for
// near-pure matrices; used to lift a stored cell back to a pure state.
QubitState dominant_eigenstate(const DensityMatrix& rho);

}  // namespace qdram
