// Copyright 2026 The hcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hcnot/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "hcnot/error.hpp"

namespace hcnot {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

template <typename E>
E parse_enum(std::optional<E> parsed, std::string_view text, std::string_view key) {
  if (!parsed) throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
  return *parsed;
}

double round_grid(double x) { return std::round(x * 1e9) / 1e9; }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be start:stop:step");
    const double start = parse_number<double>(parts[0], "range start");
    const double stop = parse_number<double>(parts[1], "range stop");
    const double step = parse_number<double>(parts[2], "range step");
    if (!(step > 0.0) || stop < start) throw UsageError("range needs step > 0 and stop >= start");
    const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(round_grid(start + static_cast<double>(i) * step));
    return out;
  }
  for (auto part : split(text, ',')) {
    if (!part.empty()) out.push_back(round_grid(parse_number<double>(part, "list")));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (const auto pos = text.find(".."); pos != std::string_view::npos) {
    const int lo = parse_number<int>(text.substr(0, pos), "range low");
    const int hi = parse_number<int>(text.substr(pos + 2), "range high");
    if (hi < lo) throw UsageError("range needs high >= low");
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  for (auto part : split(text, ',')) {
    if (!part.empty()) out.push_back(parse_number<int>(part, "list"));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys{
      "p_cz",          "t_cz",           "eps_cz",
      "t_bell_remote", "t_bell_local",   "eps_bell",
      "t_coh",         "t_measure",      "bell_timing",
      "bell_attempt_probability",        "n",
      "mode",          "pool_size",      "reset_time",
      "resource_prep", "same_node_gate_mode",
      "decoherence",   "attempt_cap",    "p_cz_grid",
      "n_candidates",  "trials",         "seed",
      "workers",       "output_dir",     "emit_events",
      "growth_p_grid", "growth_targets", "growth_runs",
  };
  return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  auto& g = cfg.protocol.params;
  auto& pc = cfg.protocol;
  const auto v = trim(value);
  auto real = [&] { return parse_number<double>(v, key); };
  if (key == "p_cz") g.p_cz = real();
  else if (key == "t_cz") g.t_cz = real();
  else if (key == "eps_cz") g.eps_cz = real();
  else if (key == "t_bell_remote") g.t_bell_remote = real();
  else if (key == "t_bell_local") g.t_bell_local = real();
  else if (key == "eps_bell") g.eps_bell = real();
  else if (key == "t_coh") g.t_coh = real();
  else if (key == "t_measure") g.t_measure = real();
  else if (key == "bell_timing") {
    if (v == "fixed") g.bell_timing = BellTiming::Fixed;
    else if (v == "geometric") g.bell_timing = BellTiming::Geometric;
    else throw UsageError("invalid value '" + std::string(v) + "' for bell_timing");
  } else if (key == "bell_attempt_probability") g.bell_attempt_probability = real();
  else if (key == "n") pc.n = parse_number<int>(v, key);
  else if (key == "mode") pc.mode = parse_enum(parse_mode(v), v, key);
  else if (key == "pool_size") pc.pool_size = parse_number<int>(v, key);
  else if (key == "reset_time") pc.reset_time = real();
  else if (key == "resource_prep") pc.resource_prep = parse_enum(parse_resource_prep(v), v, key);
  else if (key == "same_node_gate_mode") {
    pc.same_node_gate_mode = parse_enum(parse_same_node_gate_mode(v), v, key);
  } else if (key == "decoherence") pc.decoherence = parse_enum(parse_decoherence_model(v), v, key);
  else if (key == "attempt_cap") pc.attempt_cap = parse_number<long>(v, key);
  else if (key == "p_cz_grid") cfg.sweep.p_cz_grid = parse_real_list(v);
  else if (key == "n_candidates") cfg.sweep.n_candidates = parse_int_list(v);
  else if (key == "trials") cfg.sweep.trials_per_point = parse_number<long>(v, key);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(v, key);
  else if (key == "workers") cfg.workers = parse_number<int>(v, key);
  else if (key == "output_dir") cfg.output_dir = std::string(v);
  else if (key == "emit_events") cfg.emit_events = parse_bool(v, key);
  else if (key == "growth_p_grid") cfg.growth_p_grid = parse_real_list(v);
  else if (key == "growth_targets") cfg.growth_targets = parse_int_list(v);
  else if (key == "growth_runs") cfg.growth_runs = parse_number<long>(v, key);
  else throw UsageError("unknown configuration key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    apply_config_text(cfg, buf.str());
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void RunConfig::finalize() {
  sweep.mode = protocol.mode;
  sweep.master_seed = seed;
  if (workers < 0) throw UsageError("workers must be non-negative");
  if (growth_runs < 1) throw UsageError("growth_runs must be at least 1");
  for (double p : growth_p_grid) {
    if (!(p > 0.0 && p <= 1.0)) throw UsageError("growth_p_grid values must lie in (0,1]");
  }
  for (int t : growth_targets) {
    if (t < 1) throw UsageError("growth_targets must be positive");
  }
  protocol.validate();
  sweep.validate();
}

int RunConfig::resolved_workers() const {
  if (workers > 0) return workers;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace hcnot
