#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qdram/channels.h"
#include "qdram/measurement.h"

namespace qdram {

enum class Protocol { kMeasureRecreate, kZeno, kErasure };

// Effective experiment configuration. Field defaults are the documented
// configuration defaults; parse_config starts from them and overrides
// whatever the document sets.
struct ExperimentConfig {
  Protocol protocol = Protocol::kMeasureRecreate;
  std::size_t redundancy = 100;
  std::size_t cycles = 100;
  std::size_t repetitions = 1000;
  NoiseModel noise = Markovian(2e-6, 1e-6);
  double refresh_period_s = 1e-7;  // t2/10 under the default noise
  PhasePolicy phase_policy = PhasePolicy::kUniformRandom;
  double initial_p_up = 0.5;
  double initial_relative_phase_rad = 0.0;
  std::uint64_t seed = 1;
  std::string output_path = "qdram.csv";
};

// Parses the flat key-value configuration document (see the config
// reference in the README: [section] headers, key = value lines, #/;
// comments). Strict: unknown sections or keys are rejected with a
// suggestion, duplicate keys are errors, and every value is range-checked
// with its key path named in the diagnostic. Throws ParseError or
// ValidationError.
ExperimentConfig parse_config(std::string_view text);

// The effective configuration, one "key = value" line per setting,
// defaulted values included.
std::string describe_config(const ExperimentConfig& config);

const char* protocol_name(Protocol protocol);
const char* phase_policy_name(PhasePolicy policy);

}  // namespace qdram
