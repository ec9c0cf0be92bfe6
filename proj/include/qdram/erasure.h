#pragma once

#include <utility>

#include "qdram/qubit.h"
#include "qdram/random.h"

namespace qdram {

// Two-state detector (spin analyzer); |c1|^2 + |c2|^2 = 1 within
// kInvariantTol. |1> is the analyzer passing an up-spin quanton, |2> the
// analyzer reflecting a down-spin one.
class DetectorState {
 public:
  DetectorState(Complex c1, Complex c2);

  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }

 private:
  Complex c1_;
  Complex c2_;
};

// (|1> + |2>)/sqrt(2): the state whose post-selection erases the
// which-spin record.
DetectorState symmetric_detector();

// (|1> - |2>)/sqrt(2), the orthogonal complement.
DetectorState antisymmetric_detector();

// Pure state of quanton (x) detector over the ordered basis
// { |up>|1>, |up>|2>, |down>|1>, |down>|2> }; total norm 1 within
// kInvariantTol.
class JointState {
 public:
  JointState(Complex up1, Complex up2, Complex down1, Complex down2);

  Complex up1() const { return up1_; }
  Complex up2() const { return up2_; }
  Complex down1() const { return down1_; }
  Complex down2() const { return down2_; }

 private:
  Complex up1_, up2_, down1_, down2_;
};

// a_up |up>|1> + a_down |down>|2> — the analyzer's record becomes
// entangled with the spin.
JointState entangle_with_detector(const QubitState& q);

struct ProjectionResult {
  QubitState residual;
  double probability = 0.0;
};

// Contracts the detector index against <d|. probability is the squared
// norm of the unnormalized residual; the residual is returned normalized.
// Throws ZeroProbabilityBranchError when the squared norm is below 1e-15.
ProjectionResult project_detector(const JointState& joint,
                                  const DetectorState& d);

// Projective measurement of the detector in the orthonormal basis
// {b0, b1}: samples a branch by its Born probability and returns its index
// together with the projection. The basis must be orthogonal within 1e-10.
std::pair<int, ProjectionResult> measure_detector(const JointState& joint,
                                                  const DetectorState& b0,
                                                  const DetectorState& b1,
                                                  RngStream& rng);

enum class ErasureBranch { kSymmetric, kAntisymmetric };

struct ErasureOutcome {
  ErasureBranch branch;
  QubitState recovered;
  double branch_probability;
};

// Entangles q with a fresh detector, measures the detector in the
// (|1> +- |2>)/sqrt(2) basis, and returns the recovered qubit. The
// symmetric branch (probability 1/2 for any input) restores q directly;
// the antisymmetric branch leaves (a_up, -a_down) and the recorded
// conditional phase flip maps it back, so recovery is deterministic
// across branches.
ErasureOutcome erase_and_recover(const QubitState& q, RngStream& rng);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Bloch representation of the detector with |1> -> +z and |2> -> -z; the
// symmetric state maps to +x.
BlochVector detector_bloch(const DetectorState& d);

// Partial trace over the detector: the quanton's reduced density matrix.
DensityMatrix reduced_quanton(const JointState& joint);

}  // namespace qdram
