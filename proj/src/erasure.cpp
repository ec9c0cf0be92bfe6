#include "qdram/erasure.h"

#include <algorithm>
#include <cmath>

namespace qdram {

namespace {

// Below this squared norm a projection branch is considered empty and its
// residual undefined.
constexpr double kZeroBranchThreshold = 1e-15;

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

DetectorState::DetectorState(Complex c1, Complex c2) : c1_(c1), c2_(c2) {
  if (!finite(c1) || !finite(c2)) {
    throw NonFiniteError("detector amplitudes must be finite");
  }
  const double norm_sq = std::norm(c1) + std::norm(c2);
  if (norm_sq <= 0.0) {
    throw ZeroVectorError("detector amplitudes are numerically zero");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  c1_ *= inv;
  c2_ *= inv;
}

DetectorState symmetric_detector() {
  return DetectorState(kInvSqrt2, kInvSqrt2);
}

DetectorState antisymmetric_detector() {
  return DetectorState(kInvSqrt2, -kInvSqrt2);
}

JointState::JointState(Complex up1, Complex up2, Complex down1, Complex down2)
    : up1_(up1), up2_(up2), down1_(down1), down2_(down2) {
  if (!finite(up1) || !finite(up2) || !finite(down1) || !finite(down2)) {
    throw NonFiniteError("joint amplitudes must be finite");
  }
  const double norm_sq =
      std::norm(up1) + std::norm(up2) + std::norm(down1) + std::norm(down2);
  if (std::abs(norm_sq - 1.0) > kInvariantTol) {
    throw InvariantError("joint state must have unit norm");
  }
}

JointState entangle_with_detector(const QubitState& q) {
  return JointState(q.up(), 0.0, 0.0, q.down());
}

ProjectionResult project_detector(const JointState& joint,
                                  const DetectorState& d) {
  const Complex bra1 = std::conj(d.c1());
  const Complex bra2 = std::conj(d.c2());
  const Complex residual_up = bra1 * joint.up1() + bra2 * joint.up2();
  const Complex residual_down = bra1 * joint.down1() + bra2 * joint.down2();
  const double probability = std::norm(residual_up) + std::norm(residual_down);
  if (probability < kZeroBranchThreshold) {
    throw ZeroProbabilityBranchError(
        "projection branch has zero probability; residual undefined");
  }
  return ProjectionResult{QubitState(residual_up, residual_down), probability};
}

std::pair<int, ProjectionResult> measure_detector(const JointState& joint,
                                                  const DetectorState& b0,
                                                  const DetectorState& b1,
                                                  RngStream& rng) {
  const Complex overlap =
      std::conj(b0.c1()) * b1.c1() + std::conj(b0.c2()) * b1.c2();
  if (std::abs(overlap) > 1e-10) {
    throw InvariantError("detector measurement basis must be orthogonal");
  }
  const Complex bra1 = std::conj(b0.c1());
  const Complex bra2 = std::conj(b0.c2());
  const double p0 = std::norm(bra1 * joint.up1() + bra2 * joint.up2()) +
                    std::norm(bra1 * joint.down1() + bra2 * joint.down2());
  const int branch = rng.uniform01() < std::clamp(p0, 0.0, 1.0) ? 0 : 1;
  return {branch, project_detector(joint, branch == 0 ? b0 : b1)};
}

ErasureOutcome erase_and_recover(const QubitState& q, RngStream& rng) {
  const JointState joint = entangle_with_detector(q);
  auto [branch, projection] =
      measure_detector(joint, symmetric_detector(), antisymmetric_detector(),
                       rng);
  if (branch == 0) {
    return ErasureOutcome{ErasureBranch::kSymmetric, projection.residual,
                          projection.probability};
  }
  // The antisymmetric record flips the sign of the down amplitude; undo it
  // so recovery is exact on this branch too.
  return ErasureOutcome{
      ErasureBranch::kAntisymmetric,
      QubitState(projection.residual.up(), -projection.residual.down()),
      projection.probability};
}

BlochVector detector_bloch(const DetectorState& d) {
  const Complex cross = std::conj(d.c1()) * d.c2();
  BlochVector v;
  v.x = 2.0 * cross.real();
  v.y = 2.0 * cross.imag();
  v.z = std::norm(d.c1()) - std::norm(d.c2());
  return v;
}

DensityMatrix reduced_quanton(const JointState& joint) {
  const Complex m00 = std::norm(joint.up1()) + std::norm(joint.up2());
  const Complex m01 = joint.up1() * std::conj(joint.down1()) +
                      joint.up2() * std::conj(joint.down2());
  const Complex m11 = std::norm(joint.down1()) + std::norm(joint.down2());
  return DensityMatrix::from_elements(m00, m01, std::conj(m01), m11);
}

}  // namespace qdram
