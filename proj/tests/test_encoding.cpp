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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hcnot/encoding.hpp"
#include "hcnot/error.hpp"
#include "hcnot/montecarlo.hpp"
#include "markov_oracle.hpp"

namespace hcnot {
namespace {

using testing_oracle::growth_attempts;
using testing_oracle::reencode_expectation;

GateParams with_p(double p) {
  GateParams g;
  g.p_cz = p;
  return g;
}

struct Env {
  explicit Env(double p, int pool = 64, double reset = 0.0, std::uint64_t seed = 1)
      : params(with_p(p)), rng(seed), pools({pool}, reset), ctx{params, rng, tl, pools} {}
  GateParams params;
  Rng rng;
  Timeline tl;
  PoolSet pools;
  SimContext ctx;
};

TEST(Recovery, Examples) {
  auto r = recover_after_failure(3, 0);
  EXPECT_EQ(r.level, 2);
  EXPECT_FALSE(r.flip_correction);
  EXPECT_FALSE(r.logical_loss);
  r = recover_after_failure(3, 1);
  EXPECT_EQ(r.level, 2);
  EXPECT_TRUE(r.flip_correction);
  EXPECT_TRUE(recover_after_failure(1, 0).logical_loss);
  EXPECT_TRUE(recover_after_failure(1, 1).logical_loss);
  EXPECT_THROW(recover_after_failure(0, 0), UsageError);
}

TEST(Fusion, LevelExamples) {
  EXPECT_EQ(fuse_levels(2, 3, true), std::vector<int>{4});
  EXPECT_EQ(fuse_levels(2, 3, false), (std::vector<int>{1, 2}));
  EXPECT_EQ(fuse_levels(1, 1, false), (std::vector<int>{0, 0}));
  EXPECT_THROW(fuse_levels(0, 2, true), UsageError);
}

TEST(Pool, AcquireReleaseAndExhaustion) {
  Timeline tl;
  QubitPool pool(0, 10, 2, 0.0);
  EXPECT_EQ(pool.acquire(tl), 10);
  EXPECT_EQ(pool.acquire(tl), 11);
  EXPECT_EQ(pool.in_use(), 2);
  EXPECT_THROW(pool.acquire(tl), PoolExhausted);
  pool.release(10, tl.now());
  EXPECT_EQ(pool.acquire(tl), 10);
}

TEST(Pool, WaitsForPendingReset) {
  Timeline tl;
  QubitPool pool(0, 0, 1, 5e-6);
  const auto q = pool.acquire(tl);
  pool.release(q, tl.now());
  EXPECT_EQ(pool.free_count(), 0);
  EXPECT_EQ(pool.pending_count(), 1);
  EXPECT_EQ(pool.acquire(tl), q);
  EXPECT_DOUBLE_EQ(tl.now(), 5e-6);
}

TEST(Growth, DeterministicAtUnitSuccess) {
  for (int target : {1, 2, 4, 8}) {
    Env env(1.0);
    const auto g = grow_ghz(target, 0, env.ctx);
    EXPECT_EQ(g.outcome.cz_attempts, target - 1);
    EXPECT_EQ(g.outcome.cz_successes, target - 1);
    EXPECT_EQ(g.outcome.achieved_level, target);
    EXPECT_EQ(g.block.level(), target);
    EXPECT_DOUBLE_EQ(g.outcome.elapsed, (target - 1) * env.params.t_cz);
    EXPECT_EQ(env.pools.in_use(), target);
  }
}

TEST(Growth, PairIsGeometric) {
  const double p = 0.5;
  const auto stats = growth_statistics(with_p(p), 2, 100000, 7, 1);
  const double sd = std::sqrt(1 - p) / p;
  EXPECT_NEAR(stats.mean_attempts, 1 / p, 3 * sd / std::sqrt(100000.0));
}

TEST(Growth, MatchesMarkovChain) {
  const auto stats = growth_statistics(with_p(0.5), 4, 100000, 11, 1);
  const double expected = growth_attempts(0.5, 0, 4);
  EXPECT_NEAR(stats.mean_attempts / expected, 1.0, 0.02);
  EXPECT_NEAR(stats.mean_time, stats.mean_attempts * 10e-6, 1e-12);
}

TEST(Growth, MarkovOracleHandChecks) {
  EXPECT_DOUBLE_EQ(growth_attempts(0.5, 0, 2), 2.0);
  // E1 = 1 + p E2 + q E1, E2 = 1 + q E1 with p = q = 1/2 gives E1 = 6.
  EXPECT_NEAR(growth_attempts(0.5, 0, 3), 6.0, 1e-12);
  EXPECT_NEAR(growth_attempts(1.0, 0, 8), 7.0, 1e-12);
}

TEST(Growth, MeanAttemptsNonIncreasingInP) {
  double previous = 1e300;
  double previous_ci = 0.0;
  for (double p : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    const auto s = growth_statistics(with_p(p), 4, 100000, 3, 1);
    const double sd_prev = previous_ci / 1.96;
    const double sd_now = s.ci95 / 1.96;
    EXPECT_LE(s.mean_attempts, previous + 3 * std::sqrt(sd_prev * sd_prev + sd_now * sd_now)) << p;
    previous = s.mean_attempts;
    previous_ci = s.ci95;
  }
}

TEST(Growth, AttemptCapRaises) {
  Env env(0.05);
  env.ctx.attempt_cap = 10;
  EXPECT_THROW(grow_ghz(8, 0, env.ctx), GrowthCapExceeded);
}

TEST(Growth, PoolTooSmallRaises) {
  Env env(1.0, 2);
  EXPECT_THROW(grow_ghz(3, 0, env.ctx), PoolExhausted);
}

TEST(Growth, FailedSinglesReturnToThePool) {
  Env env(0.3, 3, 0.0, 5);
  const auto g = grow_ghz(2, 0, env.ctx);
  EXPECT_EQ(g.block.level(), 2);
  EXPECT_EQ(env.pools.in_use(), 2);
}

TEST(Reencode, NothingToDo) {
  Env env(0.5);
  auto block = make_block(0, 0, 3, true, env.ctx);
  const auto r = reencode(block, 3, env.ctx);
  EXPECT_EQ(r.cz_attempts, 0);
  EXPECT_DOUBLE_EQ(r.elapsed, 0.0);
  EXPECT_EQ(block.level(), 3);
}

TEST(Reencode, OneLevelShortAtUnitSuccess) {
  Env env(1.0);
  auto block = make_block(0, 0, 4, true, env.ctx);
  const auto r = reencode(block, 5, env.ctx);
  // One attachment for the 2-qubit resource, two CZs for the fusion unit.
  EXPECT_EQ(r.cz_attempts, 3);
  EXPECT_DOUBLE_EQ(r.elapsed, 3 * env.params.t_cz);
  EXPECT_EQ(block.level(), 5);
  EXPECT_FALSE(r.logical_loss);
  EXPECT_EQ(env.pools.in_use(), 5);
}

TEST(Reencode, MatchesMarkovChain) {
  const double p = 0.8;
  const GateParams params = with_p(p);
  Moments elapsed;
  long losses = 0;
  const long runs = 100000;
  for (long i = 0; i < runs; ++i) {
    Rng rng(derive_seed(99, static_cast<std::uint64_t>(i)));
    Timeline tl;
    PoolSet pools({32}, 0.0);
    SimContext ctx{params, rng, tl, pools};
    auto block = make_block(0, 0, 2, true, ctx);
    const auto r = reencode(block, 4, ctx);
    elapsed.add(r.elapsed);
    if (r.logical_loss) {
      ++losses;
      EXPECT_EQ(pools.in_use(), 0);
    } else {
      EXPECT_EQ(block.level(), 4);
      EXPECT_EQ(pools.in_use(), 4);
    }
  }
  const auto expected = reencode_expectation(p, 2, 4);
  EXPECT_NEAR(elapsed.mean / (expected.attempts * params.t_cz), 1.0, 0.02);
  const double loss = static_cast<double>(losses) / runs;
  EXPECT_NEAR(loss, expected.loss, 3 * std::sqrt(expected.loss * (1 - expected.loss) / runs) + 1e-4);
}

TEST(Reencode, LevelOneFailureIsALoss) {
  const GateParams params = with_p(0.5);
  bool saw_loss = false;
  for (std::uint64_t seed = 0; seed < 200 && !saw_loss; ++seed) {
    Rng rng(seed);
    Timeline tl;
    PoolSet pools({16}, 0.0);
    SimContext ctx{params, rng, tl, pools};
    auto block = make_block(0, 0, 1, true, ctx);
    const auto r = reencode(block, 2, ctx);
    if (r.logical_loss) {
      saw_loss = true;
      EXPECT_TRUE(block.destroyed());
      EXPECT_EQ(pools.in_use(), 0);
    } else {
      EXPECT_EQ(block.level(), 2);
    }
  }
  EXPECT_TRUE(saw_loss);
}

TEST(AuxUnit, CleanPassKeepsLevels) {
  Env env(1.0);
  auto control = make_block(0, 0, 3, true, env.ctx);
  auto target = make_block(1, 0, 2, true, env.ctx);
  const auto q2 = target.designated();
  const auto r = run_aux_unit(control, target, Stage2Route{}, env.ctx, "u");
  EXPECT_TRUE(r.success);
  EXPECT_EQ(control.level(), 3);
  EXPECT_EQ(target.level(), 2);
  EXPECT_EQ(std::find(target.members.begin(), target.members.end(), q2), target.members.end());
  EXPECT_EQ(env.tl.tally().cz_attempts, 2);
  EXPECT_DOUBLE_EQ(env.tl.now(), 2 * env.params.t_cz);
  EXPECT_EQ(env.pools.in_use(), 5);
}

TEST(AuxUnit, CrossCavityNeedsARoute) {
  GateParams params = with_p(1.0);
  Rng rng(1);
  Timeline tl;
  PoolSet pools({8, 8}, 0.0);
  SimContext ctx{params, rng, tl, pools};
  auto control = make_block(0, 0, 2, true, ctx);
  auto target = make_block(1, 1, 2, true, ctx);
  EXPECT_THROW(run_aux_unit(control, target, Stage2Route{}, ctx, "u"), UsageError);
  const auto r = run_aux_unit(control, target,
                              {Stage2Route::Kind::Teleported, LinkKind::IntraNode}, ctx, "u");
  EXPECT_TRUE(r.success);
  EXPECT_EQ(tl.tally().bell_pairs, 1);
}

}  // namespace
}  // namespace hcnot
