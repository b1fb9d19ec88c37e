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

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hcnot/oracle/pure_state.hpp"

namespace hcnot::oracle {

/// A PureState whose qubits are addressed by name. Circuits in the identity
/// suite add and remove qubits freely, so positional indices are unstable;
/// labels are not.
class LabeledRegister {
 public:
  LabeledRegister() = default;

  /// Appends `block` as the new highest qubits, named by `labels`.
  void append(const PureState& block, std::vector<std::string> labels);
  /// Appends one fresh |0> qubit.
  void append_zero(std::string label);
  /// Appends one fresh |+> qubit.
  void append_plus(std::string label);

  void apply(const Gate& gate, std::initializer_list<std::string_view> labels);

  /// Projects the named qubit onto `outcome` and removes it. Returns the
  /// branch probability (relative to the current, normalized state).
  double project_out(std::string_view label, BasisKind basis, int outcome);

  /// Qubit-basis projection that keeps the qubit. Returns the branch probability.
  double dephase_to(std::string_view label, int outcome);

  bool contains(std::string_view label) const;
  int index_of(std::string_view label) const;
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const PureState& state() const { return state_; }

  /// The state with qubit k holding order[k]. `order` must list every label.
  PureState state_in_order(const std::vector<std::string>& order) const;

 private:
  PureState state_ = PureState::empty_register();
  std::vector<std::string> labels_;
};

}  // namespace hcnot::oracle
