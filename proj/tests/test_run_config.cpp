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
#include <fstream>
#include <string>

#include "hcnot/error.hpp"
#include "hcnot/run_config.hpp"

#ifndef HCNOT_SOURCE_DIR
#error "HCNOT_SOURCE_DIR must point at the source tree"
#endif

namespace hcnot {
namespace {

TEST(RunConfig, DefaultFileMatchesBuiltInDefaults) {
  RunConfig cfg;
  load_config_file(cfg, std::string(HCNOT_SOURCE_DIR) + "/configs/default.conf");
  cfg.finalize();
  const RunConfig ref;
  EXPECT_EQ(cfg.protocol.params.p_cz, ref.protocol.params.p_cz);
  EXPECT_EQ(cfg.protocol.params.t_cz, ref.protocol.params.t_cz);
  EXPECT_EQ(cfg.protocol.params.t_bell_remote, ref.protocol.params.t_bell_remote);
  EXPECT_EQ(cfg.protocol.n, ref.protocol.n);
  EXPECT_EQ(cfg.sweep.p_cz_grid, SweepSpec::default_p_grid());
  EXPECT_EQ(cfg.sweep.n_candidates, SweepSpec::default_n_candidates());
  EXPECT_EQ(cfg.sweep.trials_per_point, ref.sweep.trials_per_point);
  EXPECT_EQ(cfg.growth_targets, ref.growth_targets);
  EXPECT_EQ(cfg.output_dir, "out");
}

TEST(RunConfig, UnknownKeyIsNamed) {
  RunConfig cfg;
  try {
    apply_config_text(cfg, "p_cz = 0.8\nbogus_key = 3\n");
    FAIL() << "expected a usage error";
  } catch (const UsageError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("bogus_key"), std::string::npos);
    EXPECT_NE(msg.find("line 2"), std::string::npos);
  }
}

TEST(RunConfig, CommentsAndBlankLines) {
  RunConfig cfg;
  apply_config_text(cfg, "# header\n\n  mode = network   # trailing\nt_coh = inf\n");
  EXPECT_EQ(cfg.protocol.mode, Mode::Network);
  EXPECT_TRUE(std::isinf(cfg.protocol.params.t_coh));
  cfg.finalize();
  EXPECT_EQ(cfg.sweep.mode, Mode::Network);
}

TEST(RunConfig, BadValues) {
  RunConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "p_cz", "abc"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "mode", "remote"), UsageError);
  EXPECT_THROW(apply_setting(cfg, "emit_events", "maybe"), UsageError);
  EXPECT_THROW(apply_config_text(cfg, "no equals sign\n"), UsageError);
  apply_setting(cfg, "p_cz", "1.5");
  EXPECT_THROW(cfg.finalize(), UsageError);
}

TEST(RunConfig, EveryListedKeyIsAccepted) {
  for (auto key : config_keys()) {
    RunConfig cfg;
    EXPECT_NO_THROW({
      try {
        apply_setting(cfg, key, "1");
      } catch (const UsageError& e) {
        EXPECT_EQ(std::string(e.what()).find("unknown"), std::string::npos) << key;
      }
    });
  }
}

TEST(RunConfig, MissingFile) {
  RunConfig cfg;
  EXPECT_THROW(load_config_file(cfg, "/nonexistent/file.conf"), UsageError);
}

TEST(Lists, Reals) {
  EXPECT_EQ(parse_real_list("0.5, 0.75,1"), (std::vector<double>{0.5, 0.75, 1.0}));
  const auto r = parse_real_list("0.70:0.995:0.005");
  ASSERT_EQ(r.size(), 60u);
  EXPECT_EQ(r[13], 0.765);
  EXPECT_EQ(r.back(), 0.995);
  EXPECT_THROW(parse_real_list("1:0:0.1"), UsageError);
  EXPECT_THROW(parse_real_list(""), UsageError);
}

TEST(Lists, Ints) {
  EXPECT_EQ(parse_int_list("1..4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(parse_int_list("2,4,8"), (std::vector<int>{2, 4, 8}));
  EXPECT_THROW(parse_int_list("5..2"), UsageError);
  EXPECT_THROW(parse_int_list("x"), UsageError);
}

}  // namespace
}  // namespace hcnot
