#include "qdram/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qdram/measurement.h"

namespace qdram {

namespace {

// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                    17);
  return std::string(buf, ptr);
}

std::string format_short(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string to_csv(const std::vector<AggregateRow>& rows) {
  std::string csv = "cycle,p_hat,magnitude_fidelity,full_fidelity,sim_time_s\n";
  for (const AggregateRow& row : rows) {
    csv += std::to_string(row.cycle);
    csv += ',';
    csv += format_real(row.p_hat_mean);
    csv += ',';
    csv += format_real(row.magnitude_fidelity_mean);
    csv += ',';
    csv += format_real(row.full_fidelity_mean);
    csv += ',';
    csv += format_real(row.sim_time_s);
    csv += '\n';
  }
  return csv;
}

int cmd_simulate(const ExperimentConfig& config, unsigned threads,
                 std::ostream& out, std::ostream& err) {
  ExperimentResult result;
  try {
    result = run_experiment(config, RngSeed{config.seed}, threads);
  } catch (const SimulationError& e) {
    err << "simulation aborted: " << e.what() << "\n";
    return kExitPrecondition;
  }
  const std::vector<AggregateRow> rows = aggregate(result);

  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) {
    err << "cannot open output file '" << config.output_path << "'\n";
    return kExitUsage;
  }
  file << to_csv(rows);
  file.close();
  if (!file) {
    err << "failed writing output file '" << config.output_path << "'\n";
    return kExitUsage;
  }

  out << describe_config(config);
  out << "threads = " << threads << "\n";
  if (rows.empty()) {
    out << "no cycles simulated; wrote header-only CSV to "
        << config.output_path << "\n";
    return kExitOk;
  }
  const AggregateRow& last = rows.back();
  out << "final cycle " << last.cycle << " (t = "
      << format_short(last.sim_time_s) << " s) over " << config.repetitions
      << " repetitions:\n";
  out << "  p_hat              = " << format_short(last.p_hat_mean) << " +- "
      << format_short(last.p_hat_std) << "\n";
  out << "  magnitude_fidelity = "
      << format_short(last.magnitude_fidelity_mean) << " +- "
      << format_short(last.magnitude_fidelity_std) << "\n";
  out << "  full_fidelity      = " << format_short(last.full_fidelity_mean)
      << " +- " << format_short(last.full_fidelity_std) << "\n";
  out << "wrote " << rows.size() << " rows to " << config.output_path << "\n";
  return kExitOk;
}

int cmd_zeno(const ZenoArgs& args, std::ostream& out, std::ostream& err) {
  if (args.omega_rad_s < 0.0 || args.total_time_s < 0.0 ||
      !std::isfinite(args.omega_rad_s) || !std::isfinite(args.total_time_s)) {
    err << "omega and total time must be finite and nonnegative\n";
    return kExitUsage;
  }
  if (args.n_list.empty() || args.trials == 0) {
    err << "need at least one measurement count and one trial\n";
    return kExitUsage;
  }
  for (std::size_t n : args.n_list) {
    if (n == 0) {
      err << "measurement counts must be at least 1\n";
      return kExitUsage;
    }
  }

  out << "omega = " << format_short(args.omega_rad_s)
      << " rad/s, total_time = " << format_short(args.total_time_s)
      << " s, trials = " << args.trials << ", seed = " << args.seed << "\n";
  out << std::setw(8) << "n" << std::setw(16) << "analytic" << std::setw(16)
      << "monte_carlo" << std::setw(14) << "abs_diff" << std::setw(14)
      << "three_sigma" << "\n";
  for (std::size_t i = 0; i < args.n_list.size(); ++i) {
    const std::size_t n = args.n_list[i];
    const double analytic =
        zeno_survival_analytic(args.omega_rad_s, args.total_time_s, n);
    RngStream rng = substream(RngSeed{args.seed}, i);
    const double mc = zeno_survival_mc(args.omega_rad_s, args.total_time_s, n,
                                       args.trials, rng);
    const double sigma = std::sqrt(
        std::max(analytic * (1.0 - analytic), 1e-300) /
        static_cast<double>(args.trials));
    out << std::setw(8) << n << std::setw(16) << std::setprecision(8)
        << std::fixed << analytic << std::setw(16) << mc << std::setw(14)
        << std::abs(mc - analytic) << std::setw(14) << 3.0 * sigma << "\n";
    out.unsetf(std::ios::fixed);
    out << std::setprecision(6);
  }
  return kExitOk;
}

int cmd_capacity(const CapacityArgs& args, std::ostream& out,
                 std::ostream& err) {
  try {
    double density = 0.0;
    if (args.pitch_nm) {
      density = density_from_pore_geometry(args.pore_diameter_nm,
                                           *args.pitch_nm);
      out << "dot density from pore geometry (diameter "
          << format_short(args.pore_diameter_nm) << " nm, pitch "
          << format_short(*args.pitch_nm) << " nm): " << format_short(density)
          << " dots/cm^2\n";
    } else if (args.dot_density_per_cm2) {
      density = *args.dot_density_per_cm2;
    } else {
      err << "need either a dot density or a pore pitch\n";
      return kExitUsage;
    }
    const std::uint64_t qubits =
        capacity(density, args.redundancy, args.area_cm2);
    out << "redundancy = " << args.redundancy << ", area = "
        << format_short(args.area_cm2) << " cm^2\n";
    out << qubits << " logical qubits\n";
    out << "state-space size 2^" << qubits << " (log2 = " << qubits << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qdram
