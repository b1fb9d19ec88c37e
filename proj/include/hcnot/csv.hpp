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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hcnot/montecarlo.hpp"
#include "hcnot/optimizer.hpp"

namespace hcnot {

inline constexpr std::string_view kSweepHeader =
    "mode,p_cz,n,trials,loss_fraction,mean_p_phys,p_e,ci95,mean_elapsed_s,master_seed";
inline constexpr std::string_view kOptimalHeader = "mode,p_cz,best_n,p_e,ci95";
inline constexpr std::string_view kGrowthHeader = "p_cz,target_level,mean_attempts,mean_time_s,ci95";

/// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

void write_sweep_csv(std::ostream& os, const SweepResult& result);
void write_optimal_csv(std::ostream& os, const SweepResult& result);

struct GrowthRow {
  double p_cz = 0.0;
  GrowthStats stats;
};

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows);

}  // namespace hcnot
