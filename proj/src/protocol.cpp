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

#include "hcnot/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hcnot/error.hpp"
#include "hcnot/sequence.hpp"

namespace hcnot {

std::string_view to_string(Mode mode) { return mode == Mode::Local ? "local" : "network"; }

std::string_view to_string(ResourcePrep prep) {
  return prep == ResourcePrep::Pipelined ? "pipelined" : "serial";
}

std::string_view to_string(SameNodeGateMode mode) {
  return mode == SameNodeGateMode::Direct ? "direct" : "teleported";
}

std::string_view to_string(DecoherenceModel model) {
  return model == DecoherenceModel::Exponential ? "exponential" : "linear";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "local") return Mode::Local;
  if (text == "network") return Mode::Network;
  return std::nullopt;
}

std::optional<ResourcePrep> parse_resource_prep(std::string_view text) {
  if (text == "pipelined") return ResourcePrep::Pipelined;
  if (text == "serial") return ResourcePrep::Serial;
  return std::nullopt;
}

std::optional<SameNodeGateMode> parse_same_node_gate_mode(std::string_view text) {
  if (text == "direct") return SameNodeGateMode::Direct;
  if (text == "teleported") return SameNodeGateMode::Teleported;
  return std::nullopt;
}

std::optional<DecoherenceModel> parse_decoherence_model(std::string_view text) {
  if (text == "exponential") return DecoherenceModel::Exponential;
  if (text == "linear") return DecoherenceModel::Linear;
  return std::nullopt;
}

NetworkTopology NetworkTopology::two_nodes() { return {{{0, 1}, {2, 3}}}; }

int NetworkTopology::node_of(CavityRef cavity) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].data_cavity == cavity || nodes[i].resource_cavity == cavity) {
      return static_cast<int>(i);
    }
  }
  throw UsageError("cavity " + std::to_string(cavity) + " is not in the topology");
}

std::optional<LinkKind> NetworkTopology::link_between(CavityRef a, CavityRef b) const {
  const int na = node_of(a);
  const int nb = node_of(b);
  if (a == b) return std::nullopt;
  return na == nb ? LinkKind::IntraNode : LinkKind::InterNode;
}

void ProtocolConfig::validate() const {
  if (n < 1) throw UsageError("encoding level n must be at least 1");
  if (pool_size < 0) throw UsageError("pool_size must be non-negative");
  if (effective_pool_size() < n) throw UsageError("pool_size must be at least n");
  if (!(reset_time >= 0.0)) throw UsageError("reset_time must be non-negative");
  if (attempt_cap < 1) throw UsageError("attempt_cap must be positive");
  params.validate();
}

UnitRun aux_mediated_cnot(LogicalBlock& control, LogicalBlock& target, Stage2Route route,
                          SimContext& ctx) {
  UnitRun run;
  const long before = ctx.tl.tally().cz_attempts;
  while (true) {
    const auto unit = run_aux_unit(control, target, route, ctx, "unit");
    if (unit.success) break;
    if (unit.failed_stage == 1) ++run.stage1_failures;
    if (unit.failed_stage == 2) ++run.stage2_failures;
    if ((unit.control_destroyed && control.logical) || (unit.target_destroyed && target.logical)) {
      run.status = UnitStatus::Loss;
      break;
    }
    if (unit.control_destroyed || unit.target_destroyed) {
      run.status = UnitStatus::TargetDestroyed;
      break;
    }
  }
  run.cz_attempts = ctx.tl.tally().cz_attempts - before;
  return run;
}

namespace {

struct Placement {
  CavityRef psi;
  CavityRef resource;
  CavityRef phi;
  int cavities;
};

Stage2Route route_between(const ProtocolConfig& cfg, const NetworkTopology& topo, CavityRef a,
                          CavityRef b) {
  if (cfg.mode == Mode::Local) return {};
  const auto link = topo.link_between(a, b);
  if (!link) return {};
  if (*link == LinkKind::IntraNode && cfg.same_node_gate_mode == SameNodeGateMode::Direct) {
    return {Stage2Route::Kind::CrossCavityDirect, LinkKind::IntraNode};
  }
  return {Stage2Route::Kind::Teleported, *link};
}

class TrialRunner {
 public:
  TrialRunner(const ProtocolConfig& cfg, Rng& rng, TimelineDetail* detail)
      : cfg_(cfg),
        topo_(NetworkTopology::two_nodes()),
        place_(cfg.mode == Mode::Local ? Placement{0, 0, 0, 1}
                                       : Placement{topo_.nodes[0].data_cavity,
                                                   topo_.nodes[0].resource_cavity,
                                                   topo_.nodes[1].data_cavity,
                                                   topo_.cavity_count()}),
        pools_(pool_totals(), cfg.reset_time),
        tl_(detail),
        ctx_{cfg.params, rng, tl_, pools_, cfg.attempt_cap},
        detail_(detail) {}

  TrialRecord run() {
    const bool history = detail_ != nullptr;
    psi_ = make_block(0, place_.psi, cfg_.n, true, ctx_);
    phi_ = make_block(1, place_.phi, cfg_.n, true, ctx_);
    psi_.track_history = phi_.track_history = history;
    resource_.id = 2;
    resource_.cavity = place_.resource;
    resource_.track_history = history;
    tl_.watch(psi_);
    tl_.watch(phi_);

    if (cfg_.n == 1) {
      unencoded();
    } else {
      encoded();
    }
    return finish();
  }

 private:
  std::vector<int> pool_totals() const {
    const int pool = cfg_.effective_pool_size();
    if (cfg_.mode == Mode::Local) return {3 * cfg_.n + pool};
    std::vector<int> totals(static_cast<std::size_t>(place_.cavities), pool);
    totals[static_cast<std::size_t>(place_.psi)] += cfg_.n;
    totals[static_cast<std::size_t>(place_.resource)] += cfg_.n;
    totals[static_cast<std::size_t>(place_.phi)] += cfg_.n;
    return totals;
  }

  void lose() {
    record_.logical_loss = true;
    record_.completed = false;
  }

  // No redundancy: one CNOT, and any failed CZ destroys the qubits.
  void unencoded() {
    const QubitId c = psi_.designated();
    const QubitId t = phi_.designated();
    const auto route = route_between(cfg_, topo_, place_.psi, place_.phi);
    bool ok = false;
    if (route.kind == Stage2Route::Kind::Teleported) {
      const auto tele = teleported_cnot(route.link, cfg_.params, ctx_.rng);
      tl_.record_bell(tele.bell, "direct.bell");
      const QubitId near[] = {c};
      const QubitId far[] = {t};
      tl_.record_cz({tele.control_cz_success, cfg_.params.t_cz}, near, "direct.control");
      tl_.record_cz({tele.target_cz_success, cfg_.params.t_cz}, far, "direct.target");
      ok = tele.success;
    } else {
      const auto gate = route.kind == Stage2Route::Kind::Local
                            ? effective_cnot(place_.psi, place_.phi, cfg_.params, ctx_.rng)
                            : sample_cz(cfg_.params, ctx_.rng);
      const QubitId pair[] = {c, t};
      tl_.record_cz(gate, pair, "direct");
      ok = gate.success;
    }
    if (!ok) {
      measure_out(psi_, c, ctx_, "direct.lost");
      measure_out(phi_, t, ctx_, "direct.lost");
      lose();
      return;
    }
    record_.completed = true;
  }

  // Brings a missing resource block to level n.
  void prepare_resource() {
    tl_.watch(resource_);
    default_growth_strategy().grow(resource_, cfg_.n, ctx_);
  }

  LogicalBlock& block(BlockRole role) {
    switch (role) {
      case BlockRole::Psi: return psi_;
      case BlockRole::Resource: return resource_;
      case BlockRole::Phi: return phi_;
    }
    throw std::logic_error("unknown block role");
  }

  CavityRef cavity(BlockRole role) const {
    switch (role) {
      case BlockRole::Psi: return place_.psi;
      case BlockRole::Resource: return place_.resource;
      case BlockRole::Phi: return place_.phi;
    }
    throw std::logic_error("unknown block role");
  }

  void encoded() {
    if (cfg_.resource_prep == ResourcePrep::Pipelined) {
      // Prepared off the critical path: present at t = 0 at no cost.
      auto& pool = pools_.at(place_.resource);
      for (int i = 0; i < cfg_.n; ++i) resource_.members.push_back(pool.acquire(tl_));
      tl_.watch(resource_);
    } else {
      prepare_resource();
    }

    const std::vector<QubitId> phi_initial = phi_.members;
    std::array<Stage2Route, kLogicalCnotSequence.size()> routes{};
    for (std::size_t i = 0; i < kLogicalCnotSequence.size(); ++i) {
      const auto& u = kLogicalCnotSequence[i];
      routes[i] = route_between(cfg_, topo_, cavity(u.control), cavity(u.target));
    }

    std::size_t unit = 0;
    while (unit < kLogicalCnotSequence.size()) {
      const auto& spec = kLogicalCnotSequence[unit];
      LogicalBlock& control = block(spec.control);
      LogicalBlock& target = block(spec.target);
      if (target.destroyed()) {
        // Only the resource can be rebuilt; it holds nothing before unit 1.
        prepare_resource();
      }
      const std::string label = detail_ ? "unit" + std::to_string(unit + 1) : std::string();
      const auto r = run_aux_unit(control, target, routes[unit], ctx_, label);
      if (r.success) {
        ++unit;
        continue;
      }
      if ((r.control_destroyed && control.logical) || (r.target_destroyed && target.logical)) {
        lose();
        return;
      }
      if (r.failed_stage == 2) {
        // p1 was read in the qubit basis: every completed unit is undone.
        if (unit > 0) {
          ++record_.restarts;
          tl_.wait(0.0, "undo");
        }
        unit = 0;
      }
    }

    // Read p1 in the rotated basis and the rest of psi by parity.
    const QubitId p1 = psi_.designated();
    {
      const QubitId one[] = {p1};
      tl_.record_measure(cfg_.params.t_measure, one, -1, "psi.rotated");
      tl_.remove_member(psi_, p1);
      pools_.at(place_.psi).release(p1, tl_.now());
    }
    // A zero-time multi-qubit readout; the outcome only sets the Pauli frame.
    const std::vector<QubitId> rest = psi_.members;
    if (!rest.empty()) tl_.record_measure(cfg_.params.t_measure, rest, -1, "psi.parity");
    for (QubitId q : rest) {
      tl_.remove_member(psi_, q);
      pools_.at(place_.psi).release(q, tl_.now());
    }
    resource_.logical = true;
    record_.psi_consumed = cfg_.n;
    record_.phi_consumed = static_cast<int>(
        std::count_if(phi_initial.begin(), phi_initial.end(), [&](QubitId q) {
          return std::find(phi_.members.begin(), phi_.members.end(), q) == phi_.members.end();
        }));

    const double reencode_start = tl_.now();
    if (cfg_.mode == Mode::Local) {
      if (reencode(resource_, cfg_.n, ctx_).logical_loss ||
          reencode(phi_, cfg_.n, ctx_).logical_loss) {
        record_.reencode_time = tl_.now() - reencode_start;
        lose();
        return;
      }
    } else {
      // Each block re-encodes in its own cavity; the phases run concurrently.
      tl_.unwatch(resource_);
      tl_.unwatch(phi_);
      Timeline lane_r = tl_.fork(1);
      Timeline lane_f = tl_.fork(2);
      lane_r.watch(resource_);
      lane_f.watch(phi_);
      SimContext ctx_r{cfg_.params, ctx_.rng, lane_r, pools_, cfg_.attempt_cap};
      SimContext ctx_f{cfg_.params, ctx_.rng, lane_f, pools_, cfg_.attempt_cap};
      bool lost = reencode(resource_, cfg_.n, ctx_r).logical_loss;
      if (!lost) lost = reencode(phi_, cfg_.n, ctx_f).logical_loss;
      Timeline* lanes[] = {&lane_r, &lane_f};
      tl_.join_lanes(lanes);
      lane_r.unwatch(resource_);
      lane_f.unwatch(phi_);
      if (lost) {
        record_.reencode_time = tl_.now() - reencode_start;
        lose();
        return;
      }
    }
    record_.reencode_time = tl_.now() - reencode_start;
    record_.completed = true;
  }

  TrialRecord finish() {
    tl_.end();
    record_.elapsed = tl_.now();
    record_.exposure_total = tl_.exposure();
    record_.cz_attempts = tl_.tally().cz_attempts;
    record_.cz_successes = tl_.tally().cz_successes;
    record_.bell_pairs_consumed = tl_.tally().bell_pairs;
    record_.final_resource_level = resource_.level();
    record_.final_phi_level = phi_.level();
    record_.qubits_conserved =
        pools_.in_use() == psi_.level() + resource_.level() + phi_.level();
    if (detail_ != nullptr) {
      for (std::size_t q = 0; q < detail_->exposure.size(); ++q) {
        if (detail_->exposure[q] > 0.0) {
          record_.per_qubit_exposure.emplace_back(static_cast<QubitId>(q), detail_->exposure[q]);
        }
      }
    }
    return record_;
  }

  const ProtocolConfig& cfg_;
  NetworkTopology topo_;
  Placement place_;
  PoolSet pools_;
  Timeline tl_;
  SimContext ctx_;
  TimelineDetail* detail_;
  LogicalBlock psi_;
  LogicalBlock phi_;
  LogicalBlock resource_;
  TrialRecord record_;
};

}  // namespace

TrialRecord logical_cnot_local(const ProtocolConfig& config, Rng& rng, TimelineDetail* detail) {
  if (config.mode != Mode::Local) throw UsageError("logical_cnot_local needs mode=local");
  config.validate();
  return TrialRunner(config, rng, detail).run();
}

TrialRecord logical_cnot_network(const ProtocolConfig& config, Rng& rng, TimelineDetail* detail) {
  if (config.mode != Mode::Network) throw UsageError("logical_cnot_network needs mode=network");
  config.validate();
  return TrialRunner(config, rng, detail).run();
}

TrialRecord logical_cnot(const ProtocolConfig& config, Rng& rng, TimelineDetail* detail) {
  return config.mode == Mode::Local ? logical_cnot_local(config, rng, detail)
                                    : logical_cnot_network(config, rng, detail);
}

}  // namespace hcnot
