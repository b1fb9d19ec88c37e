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

#include "hcnot/oracle/labeled_register.hpp"

#include <algorithm>

#include "hcnot/error.hpp"

namespace hcnot::oracle {

void LabeledRegister::append(const PureState& block, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != block.num_qubits()) {
    throw UsageError("label count does not match block size");
  }
  for (const auto& l : labels) {
    if (contains(l)) throw UsageError("duplicate qubit label: " + l);
  }
  state_ = state_.empty() ? block : tensor(state_, block);
  labels_.insert(labels_.end(), std::make_move_iterator(labels.begin()),
                 std::make_move_iterator(labels.end()));
}

void LabeledRegister::append_zero(std::string label) {
  append(PureState(1), {std::move(label)});
}

void LabeledRegister::append_plus(std::string label) {
  append(apply_gate(PureState(1), Gate::h(), {0}), {std::move(label)});
}

void LabeledRegister::apply(const Gate& gate, std::initializer_list<std::string_view> labels) {
  std::vector<int> targets;
  targets.reserve(labels.size());
  for (auto l : labels) targets.push_back(index_of(l));
  state_ = apply_gate(std::move(state_), gate, targets);
}

double LabeledRegister::project_out(std::string_view label, BasisKind basis, int outcome) {
  const int q = index_of(label);
  auto [prob, rest] = oracle::project_out(state_, q, basis, outcome);
  state_ = std::move(rest);
  labels_.erase(labels_.begin() + q);
  return prob;
}

double LabeledRegister::dephase_to(std::string_view label, int outcome) {
  auto [prob, out] = oracle::dephase_to(state_, index_of(label), outcome);
  state_ = std::move(out);
  return prob;
}

bool LabeledRegister::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int LabeledRegister::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UsageError("unknown qubit label: " + std::string(label));
  return static_cast<int>(it - labels_.begin());
}

PureState LabeledRegister::state_in_order(const std::vector<std::string>& order) const {
  if (order.size() != labels_.size()) throw UsageError("state_in_order: order must list every qubit");
  std::vector<int> source(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) source[k] = index_of(order[k]);
  const auto src = state_.amplitudes();
  std::vector<Amplitude> amps(src.size());
  for (std::uint64_t i = 0; i < src.size(); ++i) {
    std::uint64_t j = 0;
    for (std::size_t k = 0; k < source.size(); ++k) {
      if ((i >> source[k]) & 1U) j |= std::uint64_t{1} << k;
    }
    amps[j] = src[i];
  }
  return PureState::from_amplitudes(state_.num_qubits(), std::move(amps));
}

}  // namespace hcnot::oracle
