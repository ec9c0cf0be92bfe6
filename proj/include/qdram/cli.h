#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdram/experiment.h"

namespace qdram {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // usage or I/O failure
inline constexpr int kExitPrecondition = 2;  // simulation precondition failed

// CSV serialization of the aggregated series: the fixed header
// cycle,p_hat,magnitude_fidelity,full_fidelity,sim_time_s and one row per
// cycle with across-repetition means, reals at 17 significant digits,
// locale independent.
std::string to_csv(const std::vector<AggregateRow>& rows);

// Runs the configured experiment, writes the CSV to config.output_path,
// and prints the effective config plus a final-cycle summary (mean +- std)
// to `out`. Returns kExitOk, kExitUsage on I/O failure, or
// kExitPrecondition when a refresh precondition fails (the offending cycle
// is reported on `err`).
int cmd_simulate(const ExperimentConfig& config, unsigned threads,
                 std::ostream& out, std::ostream& err);

struct ZenoArgs {
  double omega_rad_s = 0.0;
  double total_time_s = 0.0;
  std::vector<std::size_t> n_list;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
};

// Prints a table of n vs analytic vs Monte Carlo survival probability.
int cmd_zeno(const ZenoArgs& args, std::ostream& out, std::ostream& err);

struct CapacityArgs {
  std::optional<double> dot_density_per_cm2;
  std::optional<double> pitch_nm;
  double pore_diameter_nm = 52.0;
  std::uint64_t redundancy = 100;
  double area_cm2 = 1.0;
};

// Prints the logical-qubit count (deriving the dot density from pore
// geometry when a pitch is given) and the state-space exponent.
int cmd_capacity(const CapacityArgs& args, std::ostream& out,
                 std::ostream& err);

}  // namespace qdram
