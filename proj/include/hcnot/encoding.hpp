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

#include <string_view>
#include <utility>
#include <vector>

#include "hcnot/block.hpp"
#include "hcnot/gates.hpp"
#include "hcnot/random.hpp"
#include "hcnot/timeline.hpp"

namespace hcnot {

inline constexpr long kDefaultAttemptCap = 1'000'000;

/// Free qubits of one cavity. A released qubit becomes available again after
/// reset_time.
class QubitPool {
 public:
  QubitPool(CavityRef cavity, QubitId first_id, int total, double reset_time);

  CavityRef cavity() const { return cavity_; }
  int total() const { return total_; }
  int free_count() const { return static_cast<int>(free_.size()); }
  int pending_count() const { return static_cast<int>(pending_.size()); }
  int in_use() const { return total_ - free_count() - pending_count(); }

  /// Waits on the timeline for a pending reset if nothing is free. Throws
  /// PoolExhausted when nothing is free or pending.
  QubitId acquire(Timeline& tl);
  void release(QubitId q, double now);

 private:
  void collect(double now);

  CavityRef cavity_;
  int total_;
  double reset_time_;
  std::vector<QubitId> free_;
  std::vector<std::pair<double, QubitId>> pending_;  // (ready time, qubit)
};

/// One pool per cavity, with disjoint qubit-id ranges.
class PoolSet {
 public:
  PoolSet(const std::vector<int>& totals, double reset_time);
  QubitPool& at(CavityRef cavity);
  const QubitPool& at(CavityRef cavity) const;
  int size() const { return static_cast<int>(pools_.size()); }
  int total_qubits() const;
  int in_use() const;

 private:
  std::vector<QubitPool> pools_;
};

/// Everything an operation needs besides its blocks.
struct SimContext {
  const GateParams& params;
  Rng& rng;
  Timeline& tl;
  PoolSet& pools;
  long attempt_cap = kDefaultAttemptCap;
};

// Level-only rules.

struct RecoveryStep {
  int level = 0;
  bool flip_correction = false;  // sigma_x on one surviving member
  bool logical_loss = false;
};

/// Bookkeeping after a member was projected and read out. Level 1 yields a
/// loss; level 0 is a usage error.
RecoveryStep recover_after_failure(int level, int outcome);

/// Levels after fusing GHZ blocks of levels n and m. One block of n+m-1 on
/// success; n-1 and m-1 on failure (0 means destroyed).
std::vector<int> fuse_levels(int n, int m, bool success);

// Operations on blocks.

/// Takes `level` fresh qubits from the cavity's pool.
LogicalBlock make_block(int id, CavityRef cavity, int level, bool logical, SimContext& ctx);

/// Reads a member out in the qubit basis, drops it from the block and returns
/// it to the pool. Returns the outcome bit.
int measure_out(LogicalBlock& block, QubitId q, SimContext& ctx, std::string_view label);

/// Returns every member to the pool without measurement bookkeeping.
void dissolve(LogicalBlock& block, SimContext& ctx);

struct GrowthOutcome {
  double elapsed = 0.0;
  long cz_attempts = 0;
  long cz_successes = 0;
  int achieved_level = 0;
};

/// Interface for GHZ growth procedures.
class GrowthStrategy {
 public:
  virtual ~GrowthStrategy() = default;
  virtual std::string_view name() const = 0;
  /// Grows `resource` in place to `target`. An empty resource starts from a
  /// fresh single. Throws GrowthCapExceeded after ctx.attempt_cap attempts.
  virtual GrowthOutcome grow(LogicalBlock& resource, int target, SimContext& ctx) const = 0;
};

/// Attaches one fresh |+> at a time through a heralded CNOT. A failure
/// measures out the participating member and the fresh qubit; a single that
/// fails is discarded and replaced from the pool.
class SequentialAttachment final : public GrowthStrategy {
 public:
  std::string_view name() const override { return "sequential"; }
  GrowthOutcome grow(LogicalBlock& resource, int target, SimContext& ctx) const override;
};

const GrowthStrategy& default_growth_strategy();

struct GrowthResult {
  LogicalBlock block;
  GrowthOutcome outcome;
};

/// Grows a fresh GHZ resource of `target_level` in `cavity`.
GrowthResult grow_ghz(int target_level, CavityRef cavity, SimContext& ctx,
                      const GrowthStrategy& strategy = default_growth_strategy());

/// How the second stage of an auxiliary unit reaches the control.
struct Stage2Route {
  enum class Kind { Local, CrossCavityDirect, Teleported };
  Kind kind = Kind::Local;
  LinkKind link = LinkKind::IntraNode;  // used when teleported
};

struct AuxUnitResult {
  bool success = false;
  int failed_stage = 0;  // 0 on success
  bool control_destroyed = false;
  bool target_destroyed = false;
};

/// One attempt at the two-stage auxiliary unit realizing CNOT(control's
/// designated qubit -> target's designated qubit). The auxiliary is taken
/// from the target's cavity. On success the target's designated qubit is
/// consumed and the auxiliary joins the target. On a stage-1 failure the
/// target loses one level; on a stage-2 failure both blocks do.
AuxUnitResult run_aux_unit(LogicalBlock& control, LogicalBlock& target, Stage2Route route,
                           SimContext& ctx, std::string_view label);

struct ReencodeOutcome {
  double elapsed = 0.0;
  long cz_attempts = 0;
  long cz_successes = 0;
  int achieved_level = 0;
  bool logical_loss = false;
};

/// Restores `block` to `target_level`: grows a resource of
/// target_level - level + 1, fuses it on through the auxiliary unit and reads
/// the resource's fusion qubit in the rotated basis. Failures shrink the
/// block (and, at stage 2, the resource) and the loop resumes with a larger
/// resource. A failure at level 1 loses the block.
ReencodeOutcome reencode(LogicalBlock& block, int target_level, SimContext& ctx,
                         const GrowthStrategy& strategy = default_growth_strategy());

}  // namespace hcnot
