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
#include <vector>

#include "hcnot/gates.hpp"

namespace hcnot {

using QubitId = std::int32_t;

struct LevelChange {
  double time = 0.0;
  int level = 0;
};

/// One parity-encoded block (or an unencoded GHZ resource). The level is the
/// number of member qubits. Member order matters only in that front() is the
/// designated qubit for the next two-qubit gate.
struct LogicalBlock {
  int id = 0;
  CavityRef cavity = 0;
  /// Logical blocks carry user information; destroying one is a loss.
  /// Resources carry none and can be regrown.
  bool logical = false;
  double birth_time = 0.0;
  std::vector<QubitId> members;
  bool track_history = false;
  std::vector<LevelChange> history;

  int level() const { return static_cast<int>(members.size()); }
  bool destroyed() const { return members.empty(); }
  QubitId designated() const { return members.front(); }
};

}  // namespace hcnot
