#include "qdram/memory.h"

#include <cmath>
#include <string>

namespace qdram {

LogicalQubit LogicalQubit::write(std::size_t redundancy, const QubitState& q) {
  if (redundancy == 0) {
    throw NonPositiveInputError("redundancy must be at least 1");
  }
  std::vector<MemoryCell> cells(redundancy, MemoryCell{to_density(q), 0.0});
  return LogicalQubit(std::move(cells), q, Estimate::exact(q.p_up()));
}

void LogicalQubit::step(double dt_s, const NoiseModel& model) {
  for (MemoryCell& cell : cells_) {
    cell.state = evolve(cell.state, dt_s, model);
  }
  time_s_ += dt_s;
}

RefreshReport LogicalQubit::report_for(std::size_t cycle_index,
                                       double p_hat) const {
  double full = 0.0;
  for (const MemoryCell& cell : cells_) {
    full += fidelity_vs_pure(cell.state, reference_);
  }
  full /= static_cast<double>(cells_.size());

  RefreshReport report;
  report.cycle_index = cycle_index;
  report.p_hat = p_hat;
  report.magnitude_fidelity_vs_reference = magnitude_fidelity(
      ProbPair::from_p_up(p_hat), ProbPair::from_p_up(reference_.p_up()));
  report.full_fidelity_vs_reference = full;
  report.sim_time_s = time_s_;
  return report;
}

RefreshReport LogicalQubit::refresh_measure_recreate(std::size_t cycle_index,
                                                     PhasePolicy policy,
                                                     RngStream& rng) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(cells_.size());
  for (MemoryCell& cell : cells_) {
    auto [outcome, post] = measure_z(cell.state, rng);
    cell.state = post;
    outcomes.push_back(outcome);
  }
  const Estimate estimate = estimate_up_probability(outcomes);
  for (MemoryCell& cell : cells_) {
    cell.state = to_density(recreate_from_estimate(estimate, policy, rng));
    cell.last_refresh_s = time_s_;
  }
  stored_estimate_ = estimate;
  return report_for(cycle_index, estimate.p_hat);
}

RefreshReport LogicalQubit::refresh_zeno(std::size_t cycle_index,
                                         RngStream& rng) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(cells_.size());
  for (MemoryCell& cell : cells_) {
    auto [outcome, post] = measure_z(cell.state, rng);
    cell.state = post;
    cell.last_refresh_s = time_s_;
    outcomes.push_back(outcome);
  }
  stored_estimate_ = estimate_up_probability(outcomes);
  return report_for(cycle_index, stored_estimate_.p_hat);
}

RefreshReport LogicalQubit::refresh_erasure(std::size_t cycle_index,
                                            RngStream& rng) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const double cell_purity = purity(cells_[i].state);
    if (cell_purity < 1.0 - kErasurePurityTol) {
      throw MixedStateCellError("cell " + std::to_string(i) +
                                " is mixed (purity " +
                                std::to_string(cell_purity) +
                                "); erasure refresh is undefined");
    }
  }
  double p_sum = 0.0;
  for (MemoryCell& cell : cells_) {
    const QubitState pure = dominant_eigenstate(cell.state);
    const ErasureOutcome outcome = erase_and_recover(pure, rng);
    cell.state = to_density(outcome.recovered);
    cell.last_refresh_s = time_s_;
    p_sum += cell.state.p_up();
  }
  const double p_hat = p_sum / static_cast<double>(cells_.size());
  stored_estimate_ = Estimate::exact(p_hat);
  return report_for(cycle_index, p_hat);
}

Estimate LogicalQubit::read(RngStream& rng) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(cells_.size());
  for (MemoryCell& cell : cells_) {
    auto [outcome, post] = measure_z(cell.state, rng);
    cell.state = post;
    outcomes.push_back(outcome);
  }
  stored_estimate_ = estimate_up_probability(outcomes);
  return stored_estimate_;
}

std::uint64_t capacity(double dot_density_per_cm2, std::uint64_t redundancy,
                       double area_cm2) {
  if (!(dot_density_per_cm2 > 0.0) || redundancy == 0 || !(area_cm2 > 0.0)) {
    throw NonPositiveInputError(
        "density, redundancy, and area must all be positive");
  }
  const double logical =
      std::floor(dot_density_per_cm2 * area_cm2 /
                 static_cast<double>(redundancy));
  return static_cast<std::uint64_t>(logical);
}

double density_from_pore_geometry(double pore_diameter_nm, double pitch_nm) {
  if (!(pore_diameter_nm > 0.0)) {
    throw GeometryViolationError("pore diameter must be positive");
  }
  if (pitch_nm < pore_diameter_nm) {
    throw GeometryViolationError("pitch must be at least the pore diameter");
  }
  // 2/(sqrt(3) * pitch^2) dots per nm^2; 1 cm^2 = 1e14 nm^2.
  constexpr double kSqrt3 = 1.7320508075688772935;
  return 2.0 / (kSqrt3 * pitch_nm * pitch_nm) * 1e14;
}

}  // namespace qdram
