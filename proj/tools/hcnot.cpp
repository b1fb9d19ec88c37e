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

// Command-line driver: oracle verification, single trials, encoding-level
// sweeps and GHZ growth statistics.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcnot/csv.hpp"
#include "hcnot/error.hpp"
#include "hcnot/montecarlo.hpp"
#include "hcnot/optimizer.hpp"
#include "hcnot/oracle/identities.hpp"
#include "hcnot/run_config.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hcnot;

constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct Flags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::optional<std::string> mode;
  std::optional<std::string> output;
  std::optional<int> workers;
  bool emit_events = false;
  std::string inject_fault;
};

RunConfig resolve(const Flags& f, bool trials_are_growth_runs) {
  RunConfig cfg;
  if (!f.config_path.empty()) load_config_file(cfg, f.config_path);
  if (f.seed) cfg.seed = *f.seed;
  if (f.trials) {
    if (trials_are_growth_runs) {
      cfg.growth_runs = *f.trials;
    } else {
      cfg.sweep.trials_per_point = *f.trials;
    }
  }
  if (f.mode) apply_setting(cfg, "mode", *f.mode);
  if (f.output) cfg.output_dir = *f.output;
  if (f.workers) cfg.workers = *f.workers;
  if (f.emit_events) cfg.emit_events = true;
  cfg.finalize();
  return cfg;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  const fs::path path = fs::path(cfg.output_dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void close_output(std::ofstream& out, const std::string& name) {
  out.close();
  if (!out) throw std::runtime_error("failed writing " + name);
}

int cmd_verify(const Flags& f) {
  oracle::SuiteOptions opts;
  if (!f.inject_fault.empty()) {
    if (f.inject_fault != "wrong-correction") throw UsageError("unknown fault " + f.inject_fault);
    opts.faults.wrong_recovery_correction = true;
  }
  bool all = true;
  for (const auto& r : oracle::run_identity_suite(opts)) {
    all = all && r.passed;
    std::printf("%-4s %-32s cases=%-6ld max_deviation=%.3e\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.cases, r.max_deviation);
  }
  std::printf("%s\n", all ? "all identities hold" : "identity failures detected");
  return all ? 0 : kExitIdentityFailure;
}

nlohmann::json event_json(const Event& e) {
  nlohmann::json j;
  j["time"] = e.time;
  j["duration"] = e.duration;
  j["kind"] = std::string(to_string(e.kind));
  j["lane"] = e.lane;
  j["qubits"] = e.qubits;
  if (e.outcome >= 0) j["outcome"] = e.outcome;
  j["label"] = e.label;
  return j;
}

int cmd_trial(const Flags& f) {
  const RunConfig cfg = resolve(f, false);
  TimelineDetail detail;
  const auto r = run_trial(cfg.protocol, cfg.seed, &detail);
  const auto& rec = r.record;
  auto line = [](const char* key, const std::string& value) {
    std::cout << key << '=' << value << '\n';
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  line("mode", std::string(to_string(cfg.protocol.mode)));
  line("n", std::to_string(cfg.protocol.n));
  line("p_cz", format_number(cfg.protocol.params.p_cz));
  line("seed", std::to_string(cfg.seed));
  line("completed", flag(rec.completed));
  line("logical_loss", flag(rec.logical_loss));
  line("elapsed_s", format_number(rec.elapsed));
  line("reencode_time_s", format_number(rec.reencode_time));
  line("exposure_qubit_s", format_number(rec.exposure_total));
  line("cz_attempts", std::to_string(rec.cz_attempts));
  line("cz_successes", std::to_string(rec.cz_successes));
  line("bell_pairs_consumed", std::to_string(rec.bell_pairs_consumed));
  line("psi_consumed", std::to_string(rec.psi_consumed));
  line("phi_consumed", std::to_string(rec.phi_consumed));
  line("restarts", std::to_string(rec.restarts));
  line("final_resource_level", std::to_string(rec.final_resource_level));
  line("final_phi_level", std::to_string(rec.final_phi_level));
  line("qubits_conserved", flag(rec.qubits_conserved));
  line("heralded_factor", format_number(r.ledger.heralded_factor));
  line("exposure_factor", format_number(r.ledger.exposure_factor));
  line("p_phys", format_number(r.ledger.p_phys()));
  for (const auto& [q, t] : rec.per_qubit_exposure) {
    std::cout << "exposure[" << q << "]=" << format_number(t) << '\n';
  }
  if (cfg.emit_events) {
    auto out = open_output(cfg, "events.jsonl");
    for (const auto& e : detail.events) out << event_json(e).dump() << '\n';
    close_output(out, "events.jsonl");
    std::cerr << "wrote " << (fs::path(cfg.output_dir) / "events.jsonl").string() << '\n';
  }
  return 0;
}

int cmd_sweep(const Flags& f) {
  const RunConfig cfg = resolve(f, false);
  const auto& spec = cfg.sweep;
  std::cerr << "sweep mode=" << to_string(spec.mode) << " points=" << spec.p_cz_grid.size()
            << " candidates=" << spec.n_candidates.size() << " trials=" << spec.trials_per_point
            << " workers=" << cfg.resolved_workers() << '\n';
  const auto result = sweep(spec, cfg.protocol, cfg.resolved_workers(), [](std::size_t done, std::size_t total) {
    std::cerr << "\r  " << done << '/' << total << std::flush;
    if (done == total) std::cerr << '\n';
  });
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  auto sweep_out = open_output(cfg, "sweep.csv");
  write_sweep_csv(sweep_out, result);
  close_output(sweep_out, "sweep.csv");
  auto optimal_out = open_output(cfg, "optimal.csv");
  write_optimal_csv(optimal_out, result);
  close_output(optimal_out, "optimal.csv");
  write_optimal_csv(std::cout, result);
  return 0;
}

int cmd_grow(const Flags& f) {
  const RunConfig cfg = resolve(f, true);
  std::vector<GrowthRow> rows;
  for (double p : cfg.growth_p_grid) {
    GateParams params = cfg.protocol.params;
    params.p_cz = p;
    for (int target : cfg.growth_targets) {
      rows.push_back({p, growth_statistics(params, target, cfg.growth_runs, cfg.seed,
                                           cfg.resolved_workers(), cfg.protocol.attempt_cap)});
      std::cerr << "  p_cz=" << format_number(p) << " target=" << target << " done\n";
    }
  }
  auto out = open_output(cfg, "growth.csv");
  write_growth_csv(out, rows);
  close_output(out, "growth.csv");
  write_growth_csv(std::cout, rows);
  return 0;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "flat key = value configuration file");
  sub->add_option("--seed", f.seed, "master seed");
  sub->add_option("--trials", f.trials, "trials per point (grow: runs per point)");
  sub->add_option("--mode", f.mode, "local or network")->check(CLI::IsMember({"local", "network"}));
  sub->add_option("--output", f.output, "output directory");
  sub->add_option("--workers", f.workers, "worker threads (0: all hardware threads)");
  sub->add_flag("--emit-events", f.emit_events, "write the trial event log as JSON lines");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical CNOT from heralded CZ gates: verification and Monte Carlo"};
  app.require_subcommand(1);
  Flags flags;
  auto* verify = app.add_subcommand("verify", "run the state-vector identity suite");
  verify->add_option("--inject-fault", flags.inject_fault)->group("");
  auto* trial = app.add_subcommand("trial", "run one trial and print its record");
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep p_cz and n; write sweep.csv and optimal.csv");
  auto* grow = app.add_subcommand("grow", "GHZ growth statistics; write growth.csv");
  for (auto* sub : {trial, sweep_cmd, grow}) add_common(sub, flags);
  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(flags);
    if (trial->parsed()) return cmd_trial(flags);
    if (sweep_cmd->parsed()) return cmd_sweep(flags);
    if (grow->parsed()) return cmd_grow(flags);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
