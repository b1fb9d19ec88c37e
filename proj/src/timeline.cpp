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

#include "hcnot/timeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcnot {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Cz: return "cz";
    case EventKind::Bell: return "bell";
    case EventKind::Measure: return "measure";
    case EventKind::Wait: return "wait";
    case EventKind::Join: return "join";
    case EventKind::Leave: return "leave";
    case EventKind::End: return "end";
  }
  return "unknown";
}

Timeline::Timeline(TimelineDetail* detail, double start, int lane)
    : detail_(detail), now_(start), lane_(lane) {}

void Timeline::log(EventKind kind, double duration, std::span<const QubitId> qubits, int outcome,
                   std::string_view label) {
  if (detail_ == nullptr) return;
  detail_->events.push_back(Event{now_, duration, kind, outcome, lane_,
                                  std::vector<QubitId>(qubits.begin(), qubits.end()),
                                  std::string(label)});
}

void Timeline::note_level(LogicalBlock& block) {
  if (block.track_history) block.history.push_back({now_, block.level()});
}

void Timeline::watch(LogicalBlock& block) {
  if (watching(block)) return;
  watched_.push_back(&block);
  log(EventKind::Join, 0.0, block.members, -1, "watch");
}

void Timeline::unwatch(LogicalBlock& block) {
  const auto it = std::find(watched_.begin(), watched_.end(), &block);
  if (it == watched_.end()) return;
  watched_.erase(it);
  log(EventKind::Leave, 0.0, block.members, -1, "unwatch");
}

bool Timeline::watching(const LogicalBlock& block) const {
  return std::find(watched_.begin(), watched_.end(), &block) != watched_.end();
}

int Timeline::exposed_qubits() const {
  int count = static_cast<int>(aux_.size());
  for (const auto* b : watched_) count += b->level();
  return count;
}

void Timeline::activate_aux(QubitId q) {
  aux_.push_back(q);
  const QubitId one[] = {q};
  log(EventKind::Join, 0.0, one, -1, "aux");
}

void Timeline::deactivate_aux(QubitId q) {
  const auto it = std::find(aux_.begin(), aux_.end(), q);
  if (it == aux_.end()) throw std::logic_error("deactivating an inactive auxiliary");
  aux_.erase(it);
  const QubitId one[] = {q};
  log(EventKind::Leave, 0.0, one, -1, "aux");
}

void Timeline::add_member(LogicalBlock& block, QubitId q) {
  block.members.push_back(q);
  note_level(block);
  if (watching(block)) {
    const QubitId one[] = {q};
    log(EventKind::Join, 0.0, one, -1, "member");
  }
}

void Timeline::remove_member(LogicalBlock& block, QubitId q) {
  const auto it = std::find(block.members.begin(), block.members.end(), q);
  if (it == block.members.end()) throw std::logic_error("qubit is not a member of the block");
  block.members.erase(it);
  note_level(block);
  if (watching(block)) {
    const QubitId one[] = {q};
    log(EventKind::Leave, 0.0, one, -1, "member");
  }
}

void Timeline::charge(double dt, EventKind kind, std::span<const QubitId> qubits, int outcome,
                      std::string_view label) {
  log(kind, dt, qubits, outcome, label);
  if (dt <= 0.0) return;
  exposure_ += dt * exposed_qubits();
  if (detail_ != nullptr) {
    auto bump = [&](QubitId q) {
      if (detail_->exposure.size() <= static_cast<std::size_t>(q)) {
        detail_->exposure.resize(static_cast<std::size_t>(q) + 1, 0.0);
      }
      detail_->exposure[static_cast<std::size_t>(q)] += dt;
    };
    for (const auto* b : watched_) {
      for (QubitId q : b->members) bump(q);
    }
    for (QubitId q : aux_) bump(q);
  }
  now_ += dt;
}

void Timeline::record_cz(const GateOutcome& gate, std::span<const QubitId> qubits,
                         std::string_view label) {
  ++tally_.cz_attempts;
  if (gate.success) ++tally_.cz_successes;
  charge(gate.duration, EventKind::Cz, qubits, gate.success ? 1 : 0, label);
}

void Timeline::record_bell(const BellPair& pair, std::string_view label) {
  ++tally_.bell_pairs;
  charge(pair.generation_time, EventKind::Bell, {}, pair.link == LinkKind::InterNode ? 1 : 0,
         label);
}

void Timeline::record_measure(double t_measure, std::span<const QubitId> qubits, int outcome,
                              std::string_view label) {
  tally_.measurements += static_cast<long>(qubits.size());
  charge(t_measure, EventKind::Measure, qubits, outcome, label);
}

void Timeline::wait(double dt, std::string_view label) { charge(dt, EventKind::Wait, {}, -1, label); }

void Timeline::end() { log(EventKind::End, 0.0, {}, -1, "end"); }

Timeline Timeline::fork(int lane) const { return Timeline(detail_, now_, lane); }

void Timeline::join_lanes(std::span<Timeline* const> lanes) {
  double latest = now_;
  for (const auto* l : lanes) latest = std::max(latest, l->now_);
  for (auto* l : lanes) {
    if (l->now_ < latest) l->wait(latest - l->now_, "idle");
    exposure_ += l->exposure_;
    tally_ += l->tally_;
  }
  now_ = latest;
}

}  // namespace hcnot
