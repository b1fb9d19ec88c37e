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
#include <string>
#include <vector>

namespace hcnot::oracle {

inline constexpr double kIdentityTolerance = 1e-10;

/// Negative-control hooks for the verify command.
struct FaultInjection {
  /// Use sigma_z instead of sigma_x after a |1> recovery outcome.
  bool wrong_recovery_correction = false;
};

struct SuiteOptions {
  int random_states = 20;
  std::uint64_t seed = 20260101;
  FaultInjection faults;
};

struct IdentityResult {
  std::string name;
  long cases = 0;            // branches/inputs checked
  double max_deviation = 0;  // max over cases of 1 - fidelity (and probability errors)
  bool passed = false;
};

IdentityResult check_hadamard_involution(const SuiteOptions& opts);
IdentityResult check_hczh_is_cnot(const SuiteOptions& opts);
IdentityResult check_ghz_definition(const SuiteOptions& opts);
IdentityResult check_ghz_measurements(const SuiteOptions& opts);
IdentityResult check_logical_preparation(const SuiteOptions& opts);
IdentityResult check_parity_recovery(const SuiteOptions& opts);
IdentityResult check_fusion(const SuiteOptions& opts);
IdentityResult check_attach(const SuiteOptions& opts);
IdentityResult check_aux_unit(const SuiteOptions& opts);
IdentityResult check_aux_unit_failures(const SuiteOptions& opts);
IdentityResult check_unit_undo(const SuiteOptions& opts);
IdentityResult check_reencode_fusion(const SuiteOptions& opts);
IdentityResult check_gate_teleportation(const SuiteOptions& opts);
IdentityResult check_logical_cnot_local(const SuiteOptions& opts);
IdentityResult check_logical_cnot_network(const SuiteOptions& opts);

/// Every identity above, in a fixed order.
std::vector<IdentityResult> run_identity_suite(const SuiteOptions& opts);

}  // namespace hcnot::oracle
