#include "qdram/experiment.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace qdram {

QubitState initial_state(const ExperimentConfig& config) {
  const double p = config.initial_p_up;
  const QubitState base =
      make_qubit(std::sqrt(p), std::sqrt(std::max(0.0, 1.0 - p)));
  return apply_relative_phase(base, config.initial_relative_phase_rad);
}

TimeSeries run_repetition(const ExperimentConfig& config, RngSeed root,
                          std::uint64_t repetition_index) {
  RngStream rng = substream(root, repetition_index);
  LogicalQubit qubit = LogicalQubit::write(config.redundancy,
                                           initial_state(config));
  TimeSeries series;
  series.reserve(config.cycles);
  for (std::size_t cycle = 1; cycle <= config.cycles; ++cycle) {
    try {
      qubit.step(config.refresh_period_s, config.noise);
      switch (config.protocol) {
        case Protocol::kMeasureRecreate:
          series.push_back(qubit.refresh_measure_recreate(
              cycle, config.phase_policy, rng));
          break;
        case Protocol::kZeno:
          series.push_back(qubit.refresh_zeno(cycle, rng));
          break;
        case Protocol::kErasure:
          series.push_back(qubit.refresh_erasure(cycle, rng));
          break;
      }
    } catch (const SimulationError&) {
      throw;
    } catch (const Error& e) {
      throw SimulationError(cycle, e.what());
    }
  }
  return series;
}

ExperimentResult run_experiment(const ExperimentConfig& config, RngSeed seed,
                                unsigned threads) {
  const std::size_t reps = config.repetitions;
  ExperimentResult result;
  result.repetitions.resize(reps);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, reps));
  if (workers == 1) {
    for (std::size_t r = 0; r < reps; ++r) {
      result.repetitions[r] = run_repetition(config, seed, r);
    }
    return result;
  }

  // Contiguous chunks; each repetition draws its own substream, so the
  // partition does not affect results.
  struct Failure {
    std::size_t repetition;
    std::exception_ptr error;
  };
  std::vector<Failure> failures(workers, Failure{0, nullptr});
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = reps * w / workers;
      const std::size_t end = reps * (w + 1) / workers;
      for (std::size_t r = begin; r < end; ++r) {
        try {
          result.repetitions[r] = run_repetition(config, seed, r);
        } catch (...) {
          failures[w] = Failure{r, std::current_exception()};
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
  // Surface the failure from the earliest repetition so diagnostics do not
  // depend on scheduling.
  const Failure* first = nullptr;
  for (const Failure& f : failures) {
    if (f.error && (first == nullptr || f.repetition < first->repetition)) {
      first = &f;
    }
  }
  if (first != nullptr) {
    std::rethrow_exception(first->error);
  }
  return result;
}

std::vector<AggregateRow> aggregate(const ExperimentResult& result) {
  std::vector<AggregateRow> rows;
  if (result.repetitions.empty() || result.repetitions.front().empty()) {
    return rows;
  }
  const std::size_t cycles = result.repetitions.front().size();
  const std::size_t reps = result.repetitions.size();
  rows.reserve(cycles);

  for (std::size_t c = 0; c < cycles; ++c) {
    AggregateRow row;
    row.cycle = result.repetitions.front()[c].cycle_index;
    row.sim_time_s = result.repetitions.front()[c].sim_time_s;

    double sum_p = 0.0, sum_m = 0.0, sum_f = 0.0;
    for (const TimeSeries& series : result.repetitions) {
      sum_p += series[c].p_hat;
      sum_m += series[c].magnitude_fidelity_vs_reference;
      sum_f += series[c].full_fidelity_vs_reference;
    }
    const double n = static_cast<double>(reps);
    row.p_hat_mean = sum_p / n;
    row.magnitude_fidelity_mean = sum_m / n;
    row.full_fidelity_mean = sum_f / n;

    if (reps > 1) {
      double ss_p = 0.0, ss_m = 0.0, ss_f = 0.0;
      for (const TimeSeries& series : result.repetitions) {
        const double dp = series[c].p_hat - row.p_hat_mean;
        const double dm = series[c].magnitude_fidelity_vs_reference -
                          row.magnitude_fidelity_mean;
        const double df = series[c].full_fidelity_vs_reference -
                          row.full_fidelity_mean;
        ss_p += dp * dp;
        ss_m += dm * dm;
        ss_f += df * df;
      }
      row.p_hat_std = std::sqrt(ss_p / (n - 1.0));
      row.magnitude_fidelity_std = std::sqrt(ss_m / (n - 1.0));
      row.full_fidelity_std = std::sqrt(ss_f / (n - 1.0));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qdram
