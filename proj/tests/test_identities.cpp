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

#include <set>

#include "hcnot/oracle/identities.hpp"
#include "hcnot/oracle/labeled_register.hpp"
#include "hcnot/sequence.hpp"

namespace hcnot::oracle {
namespace {

TEST(Identities, FullSuitePasses) {
  const auto results = run_identity_suite({});
  ASSERT_FALSE(results.empty());
  std::set<std::string> names;
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << " deviation " << r.max_deviation;
    EXPECT_LE(r.max_deviation, kIdentityTolerance) << r.name;
    EXPECT_GT(r.cases, 0) << r.name;
    names.insert(r.name);
  }
  EXPECT_EQ(names.size(), results.size());
}

TEST(Identities, WrongCorrectionIsDetected) {
  SuiteOptions opts;
  opts.random_states = 4;
  opts.faults.wrong_recovery_correction = true;
  const auto r = check_parity_recovery(opts);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.max_deviation, 0.1);
}

TEST(Identities, SequenceRoutesBothUnitsFromPsi) {
  ASSERT_EQ(kLogicalCnotSequence.size(), 2u);
  EXPECT_EQ(kLogicalCnotSequence[0].control, BlockRole::Psi);
  EXPECT_EQ(kLogicalCnotSequence[0].target, BlockRole::Resource);
  EXPECT_EQ(kLogicalCnotSequence[1].control, BlockRole::Psi);
  EXPECT_EQ(kLogicalCnotSequence[1].target, BlockRole::Phi);
}

TEST(LabeledRegister, TracksLabelsThroughRemoval) {
  LabeledRegister reg;
  reg.append(make_ghz(3), {"a", "b", "c"});
  reg.append_plus("d");
  EXPECT_EQ(reg.size(), 4);
  EXPECT_NEAR(reg.project_out("b", BasisKind::QubitBasis, 0), 0.5, 1e-12);
  EXPECT_FALSE(reg.contains("b"));
  EXPECT_EQ(reg.index_of("c"), 1);
  const auto s = reg.state_in_order({"d", "a", "c"});
  EXPECT_NEAR(fidelity(s, tensor(apply_gate(PureState(1), Gate::h(), {0}), make_ghz(2))), 1.0,
              1e-12);
}

}  // namespace
}  // namespace hcnot::oracle
