#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qdram/channels.h"
#include "qdram/measurement.h"
#include "qdram/qubit.h"
#include "qdram/random.h"

namespace qdram {

// One quantum dot holding one physical copy of the qubit.
struct MemoryCell {
  DensityMatrix state;
  double last_refresh_s = 0.0;
};

struct MeasureRecreatePolicy {
  double period_s = 0.0;
  PhasePolicy phase = PhasePolicy::kUniformRandom;
};

struct ZenoPolicy {
  double interval_s = 0.0;
};

struct ErasurePolicy {
  double period_s = 0.0;
};

using RefreshPolicy =
    std::variant<MeasureRecreatePolicy, ZenoPolicy, ErasurePolicy>;

struct RefreshReport {
  std::size_t cycle_index = 0;
  double p_hat = 0.0;
  double magnitude_fidelity_vs_reference = 0.0;
  double full_fidelity_vs_reference = 0.0;
  double sim_time_s = 0.0;
};

// Strictly increasing cycle_index.
using TimeSeries = std::vector<RefreshReport>;

// One logical qubit stored in R redundant cells. The reference state is
// kept for scoring only: refreshes never read it.
class LogicalQubit {
 public:
  // Sets every cell to |q><q| and records q as the reference; the stored
  // magnitude record starts exact at |a_up|^2.
  static LogicalQubit write(std::size_t redundancy, const QubitState& q);

  // Free evolution of every cell for dt under the model.
  void step(double dt_s, const NoiseModel& model);

  // Measures all cells, estimates the up probability over the R outcomes,
  // and re-prepares every cell from the estimate (fresh arbitrary phase
  // per cell under kUniformRandom).
  RefreshReport refresh_measure_recreate(std::size_t cycle_index,
                                         PhasePolicy policy, RngStream& rng);

  // The Zeno observation: measures every cell, no re-preparation. p_hat in
  // the report is the fraction of cells found up (the survival fraction
  // when the reference is |up>).
  RefreshReport refresh_zeno(std::size_t cycle_index, RngStream& rng);

  // Full-state refresh through detector entanglement and erasure. Requires
  // every cell to still be pure (purity >= 1 - 1e-9); throws
  // MixedStateCellError otherwise.
  RefreshReport refresh_erasure(std::size_t cycle_index, RngStream& rng);

  // Destructive read: measures all cells and returns the magnitude
  // estimate. Cells are left collapsed.
  Estimate read(RngStream& rng);

  const std::vector<MemoryCell>& cells() const { return cells_; }
  const QubitState& reference() const { return reference_; }
  const Estimate& stored_estimate() const { return stored_estimate_; }
  double sim_time_s() const { return time_s_; }

 private:
  LogicalQubit(std::vector<MemoryCell> cells, const QubitState& reference,
               Estimate estimate)
      : cells_(std::move(cells)),
        reference_(reference),
        stored_estimate_(estimate) {}

  RefreshReport report_for(std::size_t cycle_index, double p_hat) const;

  std::vector<MemoryCell> cells_;
  QubitState reference_;
  Estimate stored_estimate_;
  double time_s_ = 0.0;
};

// Cells below this purity cannot be refreshed by erasure.
inline constexpr double kErasurePurityTol = 1e-9;

// floor(dot_density * area / redundancy). Throws NonPositiveInputError.
std::uint64_t capacity(double dot_density_per_cm2, std::uint64_t redundancy,
                       double area_cm2);

// Hexagonal-packing dot density, in dots/cm^2, for a pore lattice with the
// given pitch. Throws GeometryViolationError if the pore diameter exceeds
// the pitch (or is nonpositive).
double density_from_pore_geometry(double pore_diameter_nm, double pitch_nm);

}  // namespace qdram
