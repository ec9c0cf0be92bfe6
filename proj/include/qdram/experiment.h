#pragma once

#include <vector>

#include "qdram/config.h"
#include "qdram/memory.h"
#include "qdram/random.h"

namespace qdram {

// One TimeSeries per repetition, indexed by repetition.
struct ExperimentResult {
  std::vector<TimeSeries> repetitions;
};

// The initial stored state described by the config:
// sqrt(p_up)|up> + sqrt(1-p_up) e^{i phi}|down>.
QubitState initial_state(const ExperimentConfig& config);

// One repetition: writes the initial state into R cells, then alternates
// free evolution over the refresh period with the configured refresh,
// for config.cycles cycles. Deterministic given (config, root seed,
// repetition index); each repetition draws from substream(root, index).
// Component errors are rethrown as SimulationError with the cycle
// attached.
TimeSeries run_repetition(const ExperimentConfig& config, RngSeed root,
                          std::uint64_t repetition_index);

// All repetitions. The substream-per-repetition rule makes the result
// identical for any thread count.
ExperimentResult run_experiment(const ExperimentConfig& config, RngSeed seed,
                                unsigned threads = 1);

// Across-repetition aggregate for one cycle. Stds are sample standard
// deviations (zero when there is a single repetition).
struct AggregateRow {
  std::size_t cycle = 0;
  double p_hat_mean = 0.0;
  double p_hat_std = 0.0;
  double magnitude_fidelity_mean = 0.0;
  double magnitude_fidelity_std = 0.0;
  double full_fidelity_mean = 0.0;
  double full_fidelity_std = 0.0;
  double sim_time_s = 0.0;
};

std::vector<AggregateRow> aggregate(const ExperimentResult& result);

}  // namespace qdram
