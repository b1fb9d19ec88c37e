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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcnot/optimizer.hpp"
#include "hcnot/protocol.hpp"

namespace hcnot {

/// Everything a CLI run needs. Defaults, then the config file, then flags.
struct RunConfig {
  ProtocolConfig protocol;
  SweepSpec sweep;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  bool emit_events = false;
  int workers = 0;  // 0: one per hardware thread
  std::vector<double> growth_p_grid{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<int> growth_targets{2, 4, 8};
  long growth_runs = 100'000;

  /// Makes derived fields consistent (sweep mode and seed follow the
  /// protocol mode and seed) and validates everything.
  void finalize();
  int resolved_workers() const;
};

/// Applies one `key = value` setting. Throws UsageError on unknown keys or
/// malformed values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses flat `key = value` text; `#` starts a comment. Errors name the line.
void apply_config_text(RunConfig& cfg, std::string_view text);

void load_config_file(RunConfig& cfg, const std::string& path);

/// Every recognized key, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Parses "a,b,c" or "start:stop:step"; values are rounded to 1e-9 so that
/// grid points print cleanly.
std::vector<double> parse_real_list(std::string_view text);
/// Parses "a,b,c" or "lo..hi".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace hcnot
