#include "qdram/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace qdram {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string suggestion(std::string_view got,
                       const std::vector<std::string_view>& known) {
  std::size_t best = 4;  // suggest only reasonably close names
  std::string_view pick;
  for (std::string_view candidate : known) {
    const std::size_t d = levenshtein(got, candidate);
    if (d < best) {
      best = d;
      pick = candidate;
    }
  }
  if (pick.empty()) {
    return "";
  }
  return "; did you mean '" + std::string(pick) + "'?";
}

[[noreturn]] void unknown_key(const std::string& path, std::string_view key,
                              const std::vector<std::string_view>& known) {
  throw ValidationError("unknown key '" + path + "'" +
                        suggestion(key, known));
}

std::uint64_t parse_u64(const std::string& path, std::string_view value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty()) {
    throw ValidationError(path + ": expected a nonnegative integer, got '" +
                          std::string(value) + "'");
  }
  return out;
}

double parse_double(const std::string& path, std::string_view value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty() ||
      !std::isfinite(out)) {
    throw ValidationError(path + ": expected a finite number, got '" +
                          std::string(value) + "'");
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

struct RawDocument {
  // section -> key -> value, insertion-validated.
  std::map<std::string, std::map<std::string, std::string>> entries;

  bool has(const std::string& section, const std::string& key) const {
    auto s = entries.find(section);
    return s != entries.end() && s->second.count(key) > 0;
  }

  std::optional<std::string> get(const std::string& section,
                                 const std::string& key) const {
    auto s = entries.find(section);
    if (s == entries.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
  }
};

const std::map<std::string_view, std::vector<std::string_view>> kSchema = {
    {"experiment",
     {"protocol", "redundancy", "cycles", "repetitions", "seed", "output"}},
    {"noise", {"model", "t1_s", "t2_s", "omega_rad_s"}},
    {"refresh", {"period_s", "phase_policy"}},
    {"initial_state", {"p_up", "relative_phase_rad"}},
};

RawDocument lex_document(std::string_view text) {
  RawDocument doc;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#' || line.front() == ';') {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      auto it = kSchema.find(section);
      if (it == kSchema.end()) {
        std::vector<std::string_view> names;
        for (const auto& [name, keys] : kSchema) names.push_back(name);
        throw ValidationError("unknown section '[" + section + "]'" +
                              suggestion(section, names));
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": key outside any [section]");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& known = kSchema.at(section);
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      unknown_key(section + "." + key, key, known);
    }
    if (value.empty()) {
      throw ValidationError(section + "." + key + ": empty value");
    }
    auto [it, inserted] = doc.entries[section].emplace(key, value);
    if (!inserted) {
      throw ValidationError("duplicate key '" + section + "." + key + "'");
    }
  }
  return doc;
}

}  // namespace

const char* protocol_name(Protocol protocol) {
  switch (protocol) {
    case Protocol::kMeasureRecreate:
      return "measure_recreate";
    case Protocol::kZeno:
      return "zeno";
    case Protocol::kErasure:
      return "erasure";
  }
  return "?";
}

const char* phase_policy_name(PhasePolicy policy) {
  return policy == PhasePolicy::kZero ? "zero" : "uniform_random";
}

ExperimentConfig parse_config(std::string_view text) {
  const RawDocument doc = lex_document(text);
  ExperimentConfig config;

  if (auto v = doc.get("experiment", "protocol")) {
    if (*v == "measure_recreate") {
      config.protocol = Protocol::kMeasureRecreate;
    } else if (*v == "zeno") {
      config.protocol = Protocol::kZeno;
    } else if (*v == "erasure") {
      config.protocol = Protocol::kErasure;
    } else {
      throw ValidationError(
          "experiment.protocol: expected one of measure_recreate, zeno, "
          "erasure; got '" + *v + "'");
    }
  }
  if (auto v = doc.get("experiment", "redundancy")) {
    config.redundancy = parse_u64("experiment.redundancy", *v);
    if (config.redundancy == 0) {
      throw ValidationError("experiment.redundancy: must be at least 1");
    }
  }
  if (auto v = doc.get("experiment", "cycles")) {
    config.cycles = parse_u64("experiment.cycles", *v);
  }
  if (auto v = doc.get("experiment", "repetitions")) {
    config.repetitions = parse_u64("experiment.repetitions", *v);
    if (config.repetitions == 0) {
      throw ValidationError("experiment.repetitions: must be at least 1");
    }
  }
  if (auto v = doc.get("experiment", "seed")) {
    config.seed = parse_u64("experiment.seed", *v);
  }
  if (auto v = doc.get("experiment", "output")) {
    config.output_path = *v;
  }

  std::string model = "markovian";
  if (auto v = doc.get("noise", "model")) {
    model = *v;
  }
  if (model == "markovian") {
    if (doc.has("noise", "omega_rad_s")) {
      throw ValidationError(
          "noise.omega_rad_s applies only to model = coherent_leakage");
    }
    const auto t1 = doc.get("noise", "t1_s");
    const auto t2 = doc.get("noise", "t2_s");
    double t1_s = 2e-6;
    double t2_s = 1e-6;
    if (t1 && t2) {
      t1_s = parse_double("noise.t1_s", *t1);
      t2_s = parse_double("noise.t2_s", *t2);
    } else if (t2) {
      t2_s = parse_double("noise.t2_s", *t2);
      t1_s = 2.0 * t2_s;  // default ratio t1 = 2*t2
    } else if (t1) {
      t1_s = parse_double("noise.t1_s", *t1);
      t2_s = 0.5 * t1_s;
    }
    try {
      config.noise = Markovian(t1_s, t2_s);
    } catch (const Error& e) {
      throw ValidationError(std::string("noise.t1_s/noise.t2_s: ") + e.what());
    }
    if (!doc.has("refresh", "period_s")) {
      config.refresh_period_s = t2_s / 10.0;
    }
  } else if (model == "coherent_leakage") {
    if (doc.has("noise", "t1_s") || doc.has("noise", "t2_s")) {
      throw ValidationError(
          "noise.t1_s/noise.t2_s apply only to model = markovian");
    }
    const auto omega = doc.get("noise", "omega_rad_s");
    if (!omega) {
      throw ValidationError(
          "noise.omega_rad_s is required for model = coherent_leakage");
    }
    try {
      config.noise = CoherentLeakage(parse_double("noise.omega_rad_s", *omega));
    } catch (const Error& e) {
      throw ValidationError(std::string("noise.omega_rad_s: ") + e.what());
    }
    if (!doc.has("refresh", "period_s")) {
      throw ValidationError(
          "refresh.period_s is required unless noise.model = markovian");
    }
  } else if (model == "noiseless") {
    if (doc.has("noise", "t1_s") || doc.has("noise", "t2_s") ||
        doc.has("noise", "omega_rad_s")) {
      throw ValidationError(
          "noise parameters are not accepted for model = noiseless");
    }
    config.noise = Noiseless{};
    if (!doc.has("refresh", "period_s")) {
      throw ValidationError(
          "refresh.period_s is required unless noise.model = markovian");
    }
  } else {
    throw ValidationError(
        "noise.model: expected one of markovian, coherent_leakage, "
        "noiseless; got '" + model + "'");
  }

  if (auto v = doc.get("refresh", "period_s")) {
    config.refresh_period_s = parse_double("refresh.period_s", *v);
    if (!(config.refresh_period_s > 0.0)) {
      throw ValidationError("refresh.period_s: must be positive");
    }
  }
  if (auto v = doc.get("refresh", "phase_policy")) {
    if (config.protocol != Protocol::kMeasureRecreate) {
      throw ValidationError(
          "refresh.phase_policy applies only to protocol = measure_recreate");
    }
    if (*v == "zero") {
      config.phase_policy = PhasePolicy::kZero;
    } else if (*v == "uniform_random") {
      config.phase_policy = PhasePolicy::kUniformRandom;
    } else {
      throw ValidationError(
          "refresh.phase_policy: expected zero or uniform_random; got '" +
          *v + "'");
    }
  }

  if (auto v = doc.get("initial_state", "p_up")) {
    config.initial_p_up = parse_double("initial_state.p_up", *v);
    if (config.initial_p_up < 0.0 || config.initial_p_up > 1.0) {
      throw ValidationError("initial_state.p_up: must lie in [0, 1]");
    }
  }
  if (auto v = doc.get("initial_state", "relative_phase_rad")) {
    config.initial_relative_phase_rad =
        parse_double("initial_state.relative_phase_rad", *v);
  }

  return config;
}

std::string describe_config(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "protocol = " << protocol_name(config.protocol) << "\n";
  out << "redundancy = " << config.redundancy << "\n";
  out << "cycles = " << config.cycles << "\n";
  out << "repetitions = " << config.repetitions << "\n";
  if (std::holds_alternative<Noiseless>(config.noise)) {
    out << "noise.model = noiseless\n";
  } else if (const auto* m = std::get_if<Markovian>(&config.noise)) {
    out << "noise.model = markovian\n";
    out << "noise.t1_s = " << format_double(m->t1_s()) << "\n";
    out << "noise.t2_s = " << format_double(m->t2_s()) << "\n";
  } else {
    const auto& leakage = std::get<CoherentLeakage>(config.noise);
    out << "noise.model = coherent_leakage\n";
    out << "noise.omega_rad_s = " << format_double(leakage.omega_rad_s())
        << "\n";
  }
  out << "refresh.period_s = " << format_double(config.refresh_period_s)
      << "\n";
  if (config.protocol == Protocol::kMeasureRecreate) {
    out << "refresh.phase_policy = " << phase_policy_name(config.phase_policy)
        << "\n";
  }
  out << "initial_state.p_up = " << format_double(config.initial_p_up) << "\n";
  out << "initial_state.relative_phase_rad = "
      << format_double(config.initial_relative_phase_rad) << "\n";
  out << "seed = " << config.seed << "\n";
  out << "output = " << config.output_path << "\n";
  return out.str();
}

}  // namespace qdram
