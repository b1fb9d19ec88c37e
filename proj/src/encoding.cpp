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

#include "hcnot/encoding.hpp"

#include <algorithm>
#include <string>

#include "hcnot/error.hpp"

namespace hcnot {

QubitPool::QubitPool(CavityRef cavity, QubitId first_id, int total, double reset_time)
    : cavity_(cavity), total_(total), reset_time_(reset_time) {
  if (total < 0) throw UsageError("pool size must be non-negative");
  if (reset_time < 0.0) throw UsageError("reset time must be non-negative");
  free_.reserve(static_cast<std::size_t>(total));
  // Highest id first so that acquire() hands out ids in increasing order.
  for (int i = total - 1; i >= 0; --i) free_.push_back(first_id + i);
}

void QubitPool::collect(double now) {
  auto ready = [now](const auto& entry) { return entry.first <= now; };
  for (const auto& [at, q] : pending_) {
    if (at <= now) free_.push_back(q);
  }
  pending_.erase(std::remove_if(pending_.begin(), pending_.end(), ready), pending_.end());
}

QubitId QubitPool::acquire(Timeline& tl) {
  if (!pending_.empty()) collect(tl.now());
  if (free_.empty()) {
    if (pending_.empty()) {
      throw PoolExhausted("cavity " + std::to_string(cavity_) + " has no free qubits");
    }
    const auto earliest = std::min_element(pending_.begin(), pending_.end())->first;
    tl.wait(earliest - tl.now(), "reset");
    collect(tl.now());
  }
  const QubitId q = free_.back();
  free_.pop_back();
  return q;
}

void QubitPool::release(QubitId q, double now) {
  if (reset_time_ <= 0.0) {
    free_.push_back(q);
  } else {
    pending_.emplace_back(now + reset_time_, q);
  }
}

PoolSet::PoolSet(const std::vector<int>& totals, double reset_time) {
  QubitId next = 0;
  for (std::size_t c = 0; c < totals.size(); ++c) {
    pools_.emplace_back(static_cast<CavityRef>(c), next, totals[c], reset_time);
    next += totals[c];
  }
}

QubitPool& PoolSet::at(CavityRef cavity) {
  if (cavity < 0 || cavity >= size()) throw UsageError("unknown cavity");
  return pools_[static_cast<std::size_t>(cavity)];
}

const QubitPool& PoolSet::at(CavityRef cavity) const {
  if (cavity < 0 || cavity >= size()) throw UsageError("unknown cavity");
  return pools_[static_cast<std::size_t>(cavity)];
}

int PoolSet::total_qubits() const {
  int n = 0;
  for (const auto& p : pools_) n += p.total();
  return n;
}

int PoolSet::in_use() const {
  int n = 0;
  for (const auto& p : pools_) n += p.in_use();
  return n;
}

RecoveryStep recover_after_failure(int level, int outcome) {
  if (level <= 0) throw UsageError("recovery on a destroyed block");
  if (outcome != 0 && outcome != 1) throw UsageError("outcome must be 0 or 1");
  if (level == 1) return {0, false, true};
  return {level - 1, outcome == 1, false};
}

std::vector<int> fuse_levels(int n, int m, bool success) {
  if (n < 1 || m < 1) throw UsageError("fusion needs two non-empty blocks");
  if (success) return {n + m - 1};
  return {n - 1, m - 1};
}

LogicalBlock make_block(int id, CavityRef cavity, int level, bool logical, SimContext& ctx) {
  LogicalBlock block;
  block.id = id;
  block.cavity = cavity;
  block.logical = logical;
  block.birth_time = ctx.tl.now();
  auto& pool = ctx.pools.at(cavity);
  for (int i = 0; i < level; ++i) ctx.tl.add_member(block, pool.acquire(ctx.tl));
  return block;
}

namespace {

void discard(QubitId q, SimContext& ctx, std::string_view label) {
  const QubitId one[] = {q};
  ctx.tl.record_measure(ctx.params.t_measure, one, -1, label);
}

void discard_aux(QubitId aux, CavityRef cavity, SimContext& ctx, std::string_view label) {
  discard(aux, ctx, label);
  ctx.tl.deactivate_aux(aux);
  ctx.pools.at(cavity).release(aux, ctx.tl.now());
}

// Rotated-basis readout of a consumed member; its sign only feeds the Pauli
// frame.
void consume_rotated(LogicalBlock& block, QubitId q, SimContext& ctx, std::string_view label) {
  const QubitId one[] = {q};
  ctx.tl.record_measure(ctx.params.t_measure, one, -1, label);
  ctx.tl.remove_member(block, q);
  ctx.pools.at(block.cavity).release(q, ctx.tl.now());
}

}  // namespace

int measure_out(LogicalBlock& block, QubitId q, SimContext& ctx, std::string_view label) {
  const int outcome = ctx.rng.bit();
  const QubitId one[] = {q};
  ctx.tl.record_measure(ctx.params.t_measure, one, outcome, label);
  ctx.tl.remove_member(block, q);
  ctx.pools.at(block.cavity).release(q, ctx.tl.now());
  return outcome;
}

void dissolve(LogicalBlock& block, SimContext& ctx) {
  while (!block.destroyed()) {
    const QubitId q = block.members.back();
    ctx.tl.remove_member(block, q);
    ctx.pools.at(block.cavity).release(q, ctx.tl.now());
  }
}

GrowthOutcome SequentialAttachment::grow(LogicalBlock& resource, int target, SimContext& ctx) const {
  if (target < 1) throw UsageError("growth target must be at least 1");
  const double start = ctx.tl.now();
  const long successes_before = ctx.tl.tally().cz_successes;
  auto& pool = ctx.pools.at(resource.cavity);
  if (resource.destroyed()) ctx.tl.add_member(resource, pool.acquire(ctx.tl));
  long attempts = 0;
  while (resource.level() < target) {
    if (attempts >= ctx.attempt_cap) {
      throw GrowthCapExceeded("GHZ growth to level " + std::to_string(target) +
                              " exceeded " + std::to_string(ctx.attempt_cap) + " attempts");
    }
    ++attempts;
    const QubitId fresh = pool.acquire(ctx.tl);
    const QubitId member = resource.designated();
    const auto gate = effective_cnot(resource.cavity, resource.cavity, ctx.params, ctx.rng);
    const QubitId pair[] = {fresh, member};
    ctx.tl.record_cz(gate, pair, "grow");
    if (gate.success) {
      ctx.tl.add_member(resource, fresh);
      continue;
    }
    measure_out(resource, member, ctx, "grow.recover");
    discard(fresh, ctx, "grow.discard");
    pool.release(fresh, ctx.tl.now());
    if (resource.destroyed()) ctx.tl.add_member(resource, pool.acquire(ctx.tl));
  }
  return {ctx.tl.now() - start, attempts, ctx.tl.tally().cz_successes - successes_before,
          resource.level()};
}

const GrowthStrategy& default_growth_strategy() {
  static const SequentialAttachment strategy;
  return strategy;
}

GrowthResult grow_ghz(int target_level, CavityRef cavity, SimContext& ctx,
                      const GrowthStrategy& strategy) {
  GrowthResult result;
  result.block.id = -1;
  result.block.cavity = cavity;
  result.block.birth_time = ctx.tl.now();
  result.outcome = strategy.grow(result.block, target_level, ctx);
  return result;
}

AuxUnitResult run_aux_unit(LogicalBlock& control, LogicalBlock& target, Stage2Route route,
                           SimContext& ctx, std::string_view label) {
  if (control.destroyed() || target.destroyed()) throw UsageError("aux unit on a destroyed block");
  // Event labels are only built when an event log is being kept.
  auto tag = [&](std::string_view suffix) {
    return ctx.tl.detailed() ? std::string(label).append(suffix) : std::string();
  };
  auto& target_pool = ctx.pools.at(target.cavity);
  const QubitId aux = target_pool.acquire(ctx.tl);
  ctx.tl.activate_aux(aux);

  const QubitId q2 = target.designated();
  const auto stage1 = effective_cnot(target.cavity, target.cavity, ctx.params, ctx.rng);
  {
    const QubitId pair[] = {q2, aux};
    ctx.tl.record_cz(stage1, pair, tag(".stage1"));
  }
  if (!stage1.success) {
    discard_aux(aux, target.cavity, ctx, tag(".stage1.aux"));
    measure_out(target, q2, ctx, tag(".stage1.recover"));
    return {false, 1, false, target.destroyed()};
  }

  const QubitId q1 = control.designated();
  bool ok = false;
  if (route.kind == Stage2Route::Kind::Teleported) {
    const auto tele = teleported_cnot(route.link, ctx.params, ctx.rng);
    ctx.tl.record_bell(tele.bell, tag(".bell"));
    const QubitId near[] = {q1};
    const QubitId far[] = {aux};
    ctx.tl.record_cz({tele.control_cz_success, ctx.params.t_cz}, near, tag(".stage2.control"));
    ctx.tl.record_cz({tele.target_cz_success, ctx.params.t_cz}, far, tag(".stage2.target"));
    ok = tele.success;
  } else {
    const auto stage2 = route.kind == Stage2Route::Kind::Local
                            ? effective_cnot(control.cavity, target.cavity, ctx.params, ctx.rng)
                            : sample_cz(ctx.params, ctx.rng);
    const QubitId pair[] = {q1, aux};
    ctx.tl.record_cz(stage2, pair, tag(".stage2"));
    ok = stage2.success;
  }
  if (!ok) {
    discard_aux(aux, target.cavity, ctx, tag(".stage2.aux"));
    measure_out(control, q1, ctx, tag(".stage2.recover"));
    measure_out(target, q2, ctx, tag(".stage2.recover"));
    return {false, 2, control.destroyed(), target.destroyed()};
  }

  consume_rotated(target, q2, ctx, tag(".transfer"));
  ctx.tl.deactivate_aux(aux);
  ctx.tl.add_member(target, aux);
  return {true, 0, false, false};
}

ReencodeOutcome reencode(LogicalBlock& block, int target_level, SimContext& ctx,
                         const GrowthStrategy& strategy) {
  if (block.destroyed()) throw UsageError("re-encoding a destroyed block");
  ReencodeOutcome out;
  out.achieved_level = block.level();
  if (block.level() >= target_level) return out;

  const double start = ctx.tl.now();
  const Tally before = ctx.tl.tally();
  LogicalBlock resource;
  resource.id = -1;
  resource.cavity = block.cavity;
  while (true) {
    const int needed = target_level - block.level() + 1;
    strategy.grow(resource, needed, ctx);
    const auto unit = run_aux_unit(resource, block, Stage2Route{}, ctx, "reencode");
    if (unit.success) {
      consume_rotated(resource, resource.designated(), ctx, "reencode.fuse");
      for (QubitId q : resource.members) ctx.tl.add_member(block, q);
      resource.members.clear();
      break;
    }
    if (unit.target_destroyed) {
      dissolve(resource, ctx);
      out.logical_loss = block.logical;
      break;
    }
  }
  out.elapsed = ctx.tl.now() - start;
  out.cz_attempts = ctx.tl.tally().cz_attempts - before.cz_attempts;
  out.cz_successes = ctx.tl.tally().cz_successes - before.cz_successes;
  out.achieved_level = block.level();
  return out;
}

}  // namespace hcnot
