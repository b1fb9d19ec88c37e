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

#include <cstdint>
#include <limits>

#include "hcnot/random.hpp"

namespace hcnot {

/// Cavity identifier. Gates between qubits in different cavities must be
/// teleported.
using CavityRef = int;

enum class LinkKind { IntraNode, InterNode };
enum class BellTiming { Fixed, Geometric };

struct GateParams {
  double p_cz = 0.75;
  double t_cz = 10e-6;
  double eps_cz = 1e-4;
  double t_bell_remote = 160e-6;
  double t_bell_local = 10e-6;
  double eps_bell = 1e-4;
  double t_coh = 1.0;  // may be +inf
  double t_measure = 0.0;
  BellTiming bell_timing = BellTiming::Fixed;
  /// Per-attempt success probability when bell_timing is Geometric. The
  /// configured Bell time stays the mean generation time.
  double bell_attempt_probability = 0.1;

  /// Throws UsageError when a probability leaves [0,1], p_cz leaves (0,1],
  /// or a time is negative.
  void validate() const;
};

struct GateOutcome {
  bool success = false;
  double duration = 0.0;
};

/// One heralded CZ. Duration is t_cz whatever the outcome.
GateOutcome sample_cz(const GateParams& params, Rng& rng);

/// H on the target, heralded CZ, H on the target. Both qubits must share a
/// cavity; otherwise UsageError.
GateOutcome effective_cnot(CavityRef control, CavityRef target, const GateParams& params, Rng& rng);

struct BellPair {
  LinkKind link = LinkKind::IntraNode;
  double generation_time = 0.0;
  double error = 0.0;
};

/// Nominal generation time for a link: the mean under either timing model.
double bell_time(LinkKind link, const GateParams& params);

BellPair generate_bell(LinkKind link, const GateParams& params, Rng& rng);

enum class FailedSide : std::uint8_t { None = 0, Control = 1, Target = 2, Both = 3 };

struct TeleportedOutcome {
  bool success = false;
  double duration = 0.0;
  BellPair bell;
  bool control_cz_success = false;
  bool target_cz_success = false;
  FailedSide failed = FailedSide::None;
};

/// Gate teleportation of a CNOT through one Bell pair. The pair is generated
/// first, then the control-side CZ, then the target-side CZ. Both CZs are
/// always attempted so the duration is t_bell + 2 t_cz.
TeleportedOutcome teleported_cnot(LinkKind link, const GateParams& params, Rng& rng);

}  // namespace hcnot
