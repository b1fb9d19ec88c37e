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

#include <cmath>
#include <limits>

#include "hcnot/error.hpp"
#include "hcnot/montecarlo.hpp"

namespace hcnot {
namespace {

ProtocolConfig config(Mode mode, int n, double p) {
  ProtocolConfig c;
  c.mode = mode;
  c.n = n;
  c.params.p_cz = p;
  return c;
}

bool same(const Aggregate& a, const Aggregate& b) {
  return a.trials == b.trials && a.losses == b.losses && a.mean_p_phys == b.mean_p_phys &&
         a.p_e == b.p_e && a.ci95 == b.ci95 && a.mean_elapsed == b.mean_elapsed;
}

TEST(TotalError, Examples) {
  EXPECT_NEAR(total_error(0.004, 0.006), 0.009976, 1e-15);
  EXPECT_DOUBLE_EQ(total_error(0.0, 0.25), 0.25);
  EXPECT_DOUBLE_EQ(total_error(1.0, 0.25), 1.0);
}

TEST(Ledger, HandComputedLocalGolden) {
  const auto cfg = config(Mode::Local, 2, 1.0);
  const auto r = run_trial(cfg, 1);
  const double expected = 1.0 - std::pow(1.0 - 1e-4, 4) * std::exp(-4 * 7 * 10e-6 / 1.0);
  EXPECT_NEAR(r.ledger.p_phys(), expected, 1e-12);
}

TEST(Ledger, BellPairsCount) {
  const auto cfg = config(Mode::Network, 2, 1.0);
  const auto r = run_trial(cfg, 1);
  const double heralded = std::pow(1.0 - 1e-4, 6) * std::pow(1.0 - 1e-4, 2);
  EXPECT_NEAR(r.ledger.heralded_factor, heralded, 1e-15);
}

TEST(Ledger, IdealHardwareHasNoPhysicalError) {
  auto cfg = config(Mode::Network, 3, 0.8);
  cfg.params.eps_cz = 0.0;
  cfg.params.eps_bell = 0.0;
  cfg.params.t_coh = std::numeric_limits<double>::infinity();
  const auto agg = run_ensemble(cfg, 3000, 4, 1);
  EXPECT_EQ(agg.mean_p_phys, 0.0);
  EXPECT_DOUBLE_EQ(agg.p_e, agg.loss_fraction);
}

TEST(Ledger, LinearDecoherence) {
  auto cfg = config(Mode::Local, 2, 1.0);
  cfg.params.eps_cz = 0.0;
  cfg.decoherence = DecoherenceModel::Linear;
  cfg.params.t_coh = 1e-4;
  EXPECT_DOUBLE_EQ(run_trial(cfg, 1).ledger.exposure_factor, 0.0);
  cfg.params.t_coh = 1e-3;
  EXPECT_NEAR(run_trial(cfg, 1).ledger.exposure_factor, 1.0 - 2.8e-4 / 1e-3, 1e-12);
}

TEST(Ensemble, DeterministicAndWorkerIndependent) {
  for (Mode mode : {Mode::Local, Mode::Network}) {
    const auto cfg = config(mode, 3, 0.8);
    const auto a = run_ensemble(cfg, 5000, 42, 1);
    const auto b = run_ensemble(cfg, 5000, 42, 1);
    const auto c = run_ensemble(cfg, 5000, 42, 8);
    EXPECT_TRUE(same(a, b));
    EXPECT_TRUE(same(a, c));
    const auto d = run_ensemble(cfg, 5000, 43, 1);
    EXPECT_FALSE(same(a, d));
  }
}

TEST(Ensemble, UnencodedErrorTracksGateFailure) {
  auto cfg = config(Mode::Local, 1, 0.8);
  cfg.params.eps_cz = 0.0;
  cfg.params.t_coh = std::numeric_limits<double>::infinity();
  const auto agg = run_ensemble(cfg, 50000, 9, 2);
  EXPECT_NEAR(agg.p_e, 0.2, 3 * std::sqrt(0.2 * 0.8 / 50000));
}

TEST(Ensemble, IntervalShrinksAsRootN) {
  const auto cfg = config(Mode::Local, 1, 0.8);
  const auto small = run_ensemble(cfg, 4000, 1, 1);
  const auto large = run_ensemble(cfg, 64000, 1, 1);
  EXPECT_NEAR(small.ci95 / large.ci95, 4.0, 0.4);
  EXPECT_NEAR(large.ci95, 1.96 * large.sd / std::sqrt(64000.0), 1e-15);
}

TEST(Ensemble, RejectsEmptyRun) {
  EXPECT_THROW(run_ensemble(config(Mode::Local, 2, 0.8), 0, 1, 1), UsageError);
}

TEST(Moments, MergeMatchesSequential) {
  Moments all;
  Moments left;
  Moments right;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::sin(i * 0.37) * 5 + i * 0.01;
    all.add(x);
    (i < 313 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count, all.count);
  EXPECT_NEAR(left.mean, all.mean, 1e-12);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-9);
  Moments empty;
  empty.merge(all);
  EXPECT_EQ(empty.count, all.count);
}

TEST(GrowthStats, UnitSuccess) {
  GateParams g;
  g.p_cz = 1.0;
  const auto s = growth_statistics(g, 8, 100, 1, 1);
  EXPECT_DOUBLE_EQ(s.mean_attempts, 7.0);
  EXPECT_DOUBLE_EQ(s.mean_time, 70e-6);
  EXPECT_DOUBLE_EQ(s.ci95, 0.0);
}

TEST(GrowthStats, CapPropagates) {
  GateParams g;
  g.p_cz = 0.05;
  EXPECT_THROW(growth_statistics(g, 8, 100, 1, 2, 20), GrowthCapExceeded);
}

}  // namespace
}  // namespace hcnot
