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

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hcnot/encoding.hpp"
#include "hcnot/gates.hpp"
#include "hcnot/random.hpp"
#include "hcnot/timeline.hpp"

namespace hcnot {

enum class Mode { Local, Network };
enum class ResourcePrep { Pipelined, Serial };
enum class SameNodeGateMode { Direct, Teleported };
enum class DecoherenceModel { Exponential, Linear };

std::string_view to_string(Mode mode);
std::string_view to_string(ResourcePrep prep);
std::string_view to_string(SameNodeGateMode mode);
std::string_view to_string(DecoherenceModel model);
std::optional<Mode> parse_mode(std::string_view text);
std::optional<ResourcePrep> parse_resource_prep(std::string_view text);
std::optional<SameNodeGateMode> parse_same_node_gate_mode(std::string_view text);
std::optional<DecoherenceModel> parse_decoherence_model(std::string_view text);

/// Two nodes, each with a data cavity and a resource cavity.
struct NetworkTopology {
  struct Node {
    CavityRef data_cavity;
    CavityRef resource_cavity;
  };
  std::vector<Node> nodes;

  static NetworkTopology two_nodes();
  int cavity_count() const { return 2 * static_cast<int>(nodes.size()); }
  int node_of(CavityRef cavity) const;
  /// Empty when both ends are the same cavity.
  std::optional<LinkKind> link_between(CavityRef a, CavityRef b) const;
};

struct ProtocolConfig {
  int n = 2;
  Mode mode = Mode::Local;
  GateParams params;
  /// Free qubits per cavity beyond the blocks placed there; 0 selects 4n.
  int pool_size = 0;
  double reset_time = 0.0;
  ResourcePrep resource_prep = ResourcePrep::Pipelined;
  SameNodeGateMode same_node_gate_mode = SameNodeGateMode::Teleported;
  DecoherenceModel decoherence = DecoherenceModel::Exponential;
  long attempt_cap = kDefaultAttemptCap;

  int effective_pool_size() const { return pool_size > 0 ? pool_size : 4 * n; }
  /// Throws UsageError on invalid values.
  void validate() const;
};

struct TrialRecord {
  bool completed = false;
  bool logical_loss = false;
  double elapsed = 0.0;
  double reencode_time = 0.0;
  /// Sum of per-qubit exposure in qubit-seconds.
  double exposure_total = 0.0;
  /// Filled only when a TimelineDetail is supplied: (qubit, seconds).
  std::vector<std::pair<QubitId, double>> per_qubit_exposure;
  long cz_attempts = 0;
  long cz_successes = 0;
  long bell_pairs_consumed = 0;
  /// Physical qubits of the control and target blocks consumed by the gate.
  int psi_consumed = 0;
  int phi_consumed = 0;
  /// Times the two-unit sequence restarted after a stage-2 failure.
  int restarts = 0;
  int final_resource_level = 0;
  int final_phi_level = 0;
  bool qubits_conserved = true;
};

enum class UnitStatus { Success, Loss, TargetDestroyed };

struct UnitRun {
  UnitStatus status = UnitStatus::Success;
  long cz_attempts = 0;
  int stage1_failures = 0;
  int stage2_failures = 0;
};

/// Stand-alone auxiliary-mediated CNOT that retries until success: a stage-1
/// failure costs the target one level, a stage-2 failure costs both blocks
/// one level, and each restarts from stage 1. A destroyed logical block is a
/// loss; a destroyed resource target is reported as TargetDestroyed.
UnitRun aux_mediated_cnot(LogicalBlock& control, LogicalBlock& target, Stage2Route route,
                          SimContext& ctx);

/// Single-cavity logical CNOT including final re-encoding.
TrialRecord logical_cnot_local(const ProtocolConfig& config, Rng& rng,
                               TimelineDetail* detail = nullptr);

/// Two-node logical CNOT with teleported cross-cavity gates.
TrialRecord logical_cnot_network(const ProtocolConfig& config, Rng& rng,
                                 TimelineDetail* detail = nullptr);

/// Dispatches on config.mode.
TrialRecord logical_cnot(const ProtocolConfig& config, Rng& rng, TimelineDetail* detail = nullptr);

}  // namespace hcnot
