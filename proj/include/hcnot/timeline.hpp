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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcnot/block.hpp"
#include "hcnot/gates.hpp"

namespace hcnot {

enum class EventKind : std::uint8_t { Cz, Bell, Measure, Wait, Join, Leave, End };

std::string_view to_string(EventKind kind);

struct Event {
  double time = 0.0;  // start of the event
  double duration = 0.0;
  EventKind kind = EventKind::Wait;
  int outcome = -1;  // -1: none; for Cz 1 = success; for Measure the recorded bit
  int lane = 0;
  std::vector<QubitId> qubits;
  std::string label;
};

/// Optional per-trial detail: event log and per-qubit exposure in seconds,
/// indexed by qubit id. Shared by a timeline and its lanes.
struct TimelineDetail {
  std::vector<Event> events;
  std::vector<double> exposure;
};

struct Tally {
  long cz_attempts = 0;
  long cz_successes = 0;
  long bell_pairs = 0;
  long measurements = 0;

  Tally& operator+=(const Tally& o) {
    cz_attempts += o.cz_attempts;
    cz_successes += o.cz_successes;
    bell_pairs += o.bell_pairs;
    measurements += o.measurements;
    return *this;
  }
};

/// Trial clock and decoherence exposure. Every charged duration advances the
/// clock and adds exposure to each member of every watched block and to each
/// active auxiliary. Member changes of watched blocks go through add_member
/// and remove_member so the event log stays replayable.
class Timeline {
 public:
  explicit Timeline(TimelineDetail* detail = nullptr, double start = 0.0, int lane = 0);

  double now() const { return now_; }
  /// Total exposure in qubit-seconds.
  double exposure() const { return exposure_; }
  const Tally& tally() const { return tally_; }
  bool detailed() const { return detail_ != nullptr; }
  int lane() const { return lane_; }

  void watch(LogicalBlock& block);
  void unwatch(LogicalBlock& block);
  bool watching(const LogicalBlock& block) const;
  int exposed_qubits() const;

  void activate_aux(QubitId q);
  void deactivate_aux(QubitId q);

  void add_member(LogicalBlock& block, QubitId q);
  void remove_member(LogicalBlock& block, QubitId q);

  /// Advances the clock by dt and charges exposure.
  void charge(double dt, EventKind kind, std::span<const QubitId> qubits = {}, int outcome = -1,
              std::string_view label = {});
  void record_cz(const GateOutcome& gate, std::span<const QubitId> qubits, std::string_view label);
  void record_bell(const BellPair& pair, std::string_view label);
  /// One batch of simultaneous measurements, charged t_measure once.
  void record_measure(double t_measure, std::span<const QubitId> qubits, int outcome,
                      std::string_view label);
  void wait(double dt, std::string_view label);
  void end();

  /// A concurrent lane starting now, sharing this timeline's detail sink.
  Timeline fork(int lane) const;
  /// Brings all lanes to the latest lane time (idle lanes keep exposing their
  /// watched blocks) and folds their clocks, exposure and tallies into this.
  void join_lanes(std::span<Timeline* const> lanes);

 private:
  void log(EventKind kind, double duration, std::span<const QubitId> qubits, int outcome,
           std::string_view label);
  void note_level(LogicalBlock& block);

  TimelineDetail* detail_ = nullptr;
  double now_ = 0.0;
  double exposure_ = 0.0;
  int lane_ = 0;
  Tally tally_;
  std::vector<LogicalBlock*> watched_;
  std::vector<QubitId> aux_;
};

}  // namespace hcnot
