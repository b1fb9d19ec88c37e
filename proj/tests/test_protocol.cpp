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
#include <map>

#include "hcnot/error.hpp"
#include "hcnot/montecarlo.hpp"
#include "hcnot/protocol.hpp"

namespace hcnot {
namespace {

ProtocolConfig config(Mode mode, int n, double p) {
  ProtocolConfig c;
  c.mode = mode;
  c.n = n;
  c.params.p_cz = p;
  return c;
}

// Rebuilds per-qubit exposure from the join and leave events alone.
std::map<QubitId, double> replay_exposure(const TimelineDetail& detail) {
  std::map<QubitId, double> open;
  std::map<QubitId, double> total;
  double end = 0.0;
  for (const auto& e : detail.events) {
    if (e.kind == EventKind::Join) {
      for (QubitId q : e.qubits) {
        EXPECT_EQ(open.count(q), 0u) << "qubit " << q << " joined twice";
        open[q] = e.time;
      }
    } else if (e.kind == EventKind::Leave) {
      for (QubitId q : e.qubits) {
        const auto it = open.find(q);
        EXPECT_NE(it, open.end()) << "qubit " << q << " left without joining";
        if (it == open.end()) continue;
        total[q] += e.time - it->second;
        open.erase(it);
      }
    } else if (e.kind == EventKind::End) {
      end = e.time;
    }
  }
  for (const auto& [q, start] : open) total[q] += end - start;
  return total;
}

TEST(AuxMediatedCnot, UnitSuccessCostsTwoCz) {
  GateParams params;
  params.p_cz = 1.0;
  Rng rng(1);
  Timeline tl;
  PoolSet pools({32}, 0.0);
  SimContext ctx{params, rng, tl, pools};
  auto c = make_block(0, 0, 3, true, ctx);
  auto t = make_block(1, 0, 3, true, ctx);
  const auto run = aux_mediated_cnot(c, t, Stage2Route{}, ctx);
  EXPECT_EQ(run.status, UnitStatus::Success);
  EXPECT_EQ(run.cz_attempts, 2);
  EXPECT_DOUBLE_EQ(tl.now(), 2 * params.t_cz);
  EXPECT_EQ(c.level(), 3);
  EXPECT_EQ(t.level(), 3);
}

TEST(AuxMediatedCnot, SingleStageTwoFailureCostsOneLevelEach) {
  GateParams params;
  params.p_cz = 0.5;
  bool found = false;
  for (std::uint64_t seed = 0; seed < 2000 && !found; ++seed) {
    Rng rng(seed);
    Timeline tl;
    PoolSet pools({32}, 0.0);
    SimContext ctx{params, rng, tl, pools};
    auto c = make_block(0, 0, 3, true, ctx);
    auto t = make_block(1, 0, 3, true, ctx);
    const auto run = aux_mediated_cnot(c, t, Stage2Route{}, ctx);
    if (run.stage1_failures == 0 && run.stage2_failures == 1) {
      found = true;
      EXPECT_EQ(run.status, UnitStatus::Success);
      EXPECT_EQ(run.cz_attempts, 4);
      EXPECT_EQ(c.level(), 2);
      EXPECT_EQ(t.level(), 2);
    }
  }
  EXPECT_TRUE(found);
}

TEST(AuxMediatedCnot, DestroyedLogicalBlockIsALoss) {
  GateParams params;
  params.p_cz = 0.3;
  int losses = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    Timeline tl;
    PoolSet pools({32}, 0.0);
    SimContext ctx{params, rng, tl, pools};
    auto c = make_block(0, 0, 1, true, ctx);
    auto t = make_block(1, 0, 1, true, ctx);
    const auto run = aux_mediated_cnot(c, t, Stage2Route{}, ctx);
    if (run.status == UnitStatus::Loss) {
      ++losses;
      EXPECT_TRUE(c.destroyed() || t.destroyed());
    }
  }
  EXPECT_GT(losses, 0);
}

TEST(LogicalCnot, UnencodedIsOneGate) {
  Rng rng(3);
  const auto r = logical_cnot(config(Mode::Local, 1, 1.0), rng);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.cz_attempts, 1);
  EXPECT_DOUBLE_EQ(r.elapsed, 10e-6);
}

TEST(LogicalCnot, UnencodedLossRateIsFailureRate) {
  const double p = 0.8;
  const auto cfg = config(Mode::Local, 1, p);
  const long trials = 40000;
  long losses = 0;
  for (long i = 0; i < trials; ++i) {
    Rng rng(derive_seed(5, static_cast<std::uint64_t>(i)));
    losses += logical_cnot(cfg, rng).logical_loss ? 1 : 0;
  }
  const double loss = static_cast<double>(losses) / trials;
  EXPECT_NEAR(loss, 1 - p, 3 * std::sqrt(p * (1 - p) / trials));
}

TEST(LogicalCnot, LocalGoldenAtUnitSuccess) {
  Rng rng(1);
  const auto r = logical_cnot(config(Mode::Local, 2, 1.0), rng);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.cz_attempts, 4);
  EXPECT_EQ(r.bell_pairs_consumed, 0);
  EXPECT_NEAR(r.elapsed, 40e-6, 1e-15);
  EXPECT_DOUBLE_EQ(r.reencode_time, 0.0);
  EXPECT_EQ(r.restarts, 0);
  EXPECT_EQ(r.final_resource_level, 2);
  EXPECT_EQ(r.final_phi_level, 2);
  EXPECT_TRUE(r.qubits_conserved);
  // Seven qubits (two blocks, the resource, one auxiliary at a time) for
  // four 10 us gates.
  EXPECT_NEAR(r.exposure_total, 4 * 7 * 10e-6, 1e-15);
}

TEST(LogicalCnot, NetworkGoldenAtUnitSuccess) {
  Rng rng(1);
  const auto r = logical_cnot(config(Mode::Network, 2, 1.0), rng);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.bell_pairs_consumed, 2);
  EXPECT_EQ(r.cz_attempts, 6);
  EXPECT_NEAR(r.elapsed, 230e-6, 1e-12);
}

TEST(LogicalCnot, NetworkDirectSameNodeGate) {
  auto cfg = config(Mode::Network, 2, 1.0);
  cfg.same_node_gate_mode = SameNodeGateMode::Direct;
  Rng rng(1);
  const auto r = logical_cnot(cfg, rng);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.bell_pairs_consumed, 1);
  EXPECT_EQ(r.cz_attempts, 5);
  EXPECT_NEAR(r.elapsed, 210e-6, 1e-12);
}

TEST(LogicalCnot, NetworkUnencodedIsTeleported) {
  Rng rng(1);
  const auto r = logical_cnot(config(Mode::Network, 1, 1.0), rng);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.bell_pairs_consumed, 1);
  EXPECT_EQ(r.cz_attempts, 2);
  EXPECT_NEAR(r.elapsed, 180e-6, 1e-12);
}

TEST(LogicalCnot, SerialResourcePrepAddsGrowth) {
  auto cfg = config(Mode::Local, 3, 1.0);
  cfg.resource_prep = ResourcePrep::Serial;
  Rng rng(1);
  const auto r = logical_cnot(cfg, rng);
  EXPECT_EQ(r.cz_attempts, 2 + 4);
  EXPECT_NEAR(r.elapsed, 60e-6, 1e-15);
}

TEST(LogicalCnot, ConsumptionAndConservation) {
  for (Mode mode : {Mode::Local, Mode::Network}) {
    for (int n : {2, 3, 5}) {
      const auto cfg = config(mode, n, 0.75);
      for (std::uint64_t i = 0; i < 2000; ++i) {
        Rng rng(derive_seed(17, i));
        const auto r = logical_cnot(cfg, rng);
        ASSERT_TRUE(r.qubits_conserved) << to_string(mode) << " n=" << n << " trial " << i;
        ASSERT_NE(r.completed, r.logical_loss);
        if (r.completed) {
          EXPECT_GE(r.psi_consumed + r.phi_consumed, 1);
          EXPECT_EQ(r.psi_consumed, n);
          EXPECT_EQ(r.final_resource_level, n);
          EXPECT_EQ(r.final_phi_level, n);
        }
        EXPECT_GE(r.elapsed, r.reencode_time);
        EXPECT_GE(r.cz_attempts, r.cz_successes);
      }
    }
  }
}

TEST(LogicalCnot, EventLogReplaysTheLedger) {
  for (Mode mode : {Mode::Local, Mode::Network}) {
    for (int n : {1, 2, 4}) {
      const auto cfg = config(mode, n, 0.7);
      for (std::uint64_t i = 0; i < 200; ++i) {
        TimelineDetail detail;
        Rng rng(derive_seed(23, i));
        const auto r = logical_cnot(cfg, rng, &detail);
        const auto replayed = replay_exposure(detail);
        double sum = 0.0;
        for (const auto& [q, t] : replayed) sum += t;
        EXPECT_NEAR(sum, r.exposure_total, 1e-12 + 1e-9 * r.exposure_total);
        for (const auto& [q, t] : r.per_qubit_exposure) {
          const auto it = replayed.find(q);
          ASSERT_NE(it, replayed.end());
          EXPECT_NEAR(it->second, t, 1e-12);
        }
        long cz = 0;
        long cz_ok = 0;
        long bell = 0;
        for (const auto& e : detail.events) {
          if (e.kind == EventKind::Cz) {
            ++cz;
            cz_ok += e.outcome == 1 ? 1 : 0;
          }
          if (e.kind == EventKind::Bell) ++bell;
        }
        EXPECT_EQ(cz, r.cz_attempts);
        EXPECT_EQ(cz_ok, r.cz_successes);
        EXPECT_EQ(bell, r.bell_pairs_consumed);
        ASSERT_FALSE(detail.events.empty());
        EXPECT_EQ(detail.events.back().kind, EventKind::End);
        EXPECT_NEAR(detail.events.back().time, r.elapsed, 1e-15);
      }
    }
  }
}

TEST(LogicalCnot, NetworkIsNeverFasterAtUnitSuccess) {
  for (int n = 1; n <= 6; ++n) {
    Rng a(1);
    Rng b(1);
    const auto local = logical_cnot(config(Mode::Local, n, 1.0), a);
    const auto network = logical_cnot(config(Mode::Network, n, 1.0), b);
    EXPECT_GE(network.elapsed, local.elapsed) << n;
  }
}

TEST(LogicalCnot, ModeMismatchIsRejected) {
  Rng rng(1);
  EXPECT_THROW(logical_cnot_local(config(Mode::Network, 2, 0.9), rng), UsageError);
  EXPECT_THROW(logical_cnot_network(config(Mode::Local, 2, 0.9), rng), UsageError);
  EXPECT_THROW(logical_cnot(config(Mode::Local, 0, 0.9), rng), UsageError);
}

TEST(Topology, Links) {
  const auto topo = NetworkTopology::two_nodes();
  EXPECT_EQ(topo.cavity_count(), 4);
  EXPECT_FALSE(topo.link_between(0, 0));
  EXPECT_EQ(*topo.link_between(0, 1), LinkKind::IntraNode);
  EXPECT_EQ(*topo.link_between(1, 2), LinkKind::InterNode);
  EXPECT_THROW(topo.node_of(7), UsageError);
}

TEST(Enums, RoundTrip) {
  for (Mode m : {Mode::Local, Mode::Network}) EXPECT_EQ(parse_mode(to_string(m)), m);
  for (auto r : {ResourcePrep::Pipelined, ResourcePrep::Serial}) {
    EXPECT_EQ(parse_resource_prep(to_string(r)), r);
  }
  for (auto s : {SameNodeGateMode::Direct, SameNodeGateMode::Teleported}) {
    EXPECT_EQ(parse_same_node_gate_mode(to_string(s)), s);
  }
  for (auto d : {DecoherenceModel::Exponential, DecoherenceModel::Linear}) {
    EXPECT_EQ(parse_decoherence_model(to_string(d)), d);
  }
  EXPECT_FALSE(parse_mode("remote"));
}

}  // namespace
}  // namespace hcnot
