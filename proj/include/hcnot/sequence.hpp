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

#include <array>

namespace hcnot {

/// The three logical blocks taking part in one logical CNOT.
enum class BlockRole { Psi, Resource, Phi };

/// One aux-mediated CNOT unit: a physical CNOT from the control block's
/// designated qubit onto a target-block qubit, routed through a fresh
/// auxiliary that inherits the target qubit's role.
struct CnotUnitSpec {
  BlockRole control;
  BlockRole target;
};

/// Frozen logical-CNOT sequence, shared by the bookkeeping protocol and the
/// state-vector oracle.
///
/// psi's designated qubit p1 controls both units. After unit 1 the resource
/// carries the stabilizer Z(p1) Z(resource), so p1 is a weight-one copy of the
/// resource's logical Z; that is what lets a single physical CNOT from p1 act
/// as the logical CNOT onto phi. Afterwards p1 is read in the rotated basis and
/// the rest of psi by a qubit-basis parity measurement, which leaves psi's
/// logical content in the resource block.
///
/// Consequence for failure handling: a stage-2 failure in any unit projects p1
/// in the qubit basis, which undoes every unit already completed in the pass.
inline constexpr std::array<CnotUnitSpec, 2> kLogicalCnotSequence{{
    {BlockRole::Psi, BlockRole::Resource},
    {BlockRole::Psi, BlockRole::Phi},
}};

}  // namespace hcnot
