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

#include "hcnot/csv.hpp"

#include <array>
#include <charconv>

namespace hcnot {

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << kSweepHeader << '\n';
  for (const auto& row : result.rows) {
    for (const auto& c : row.candidates) {
      os << to_string(result.mode) << ',' << format_number(row.p_cz) << ',' << c.n << ','
         << c.agg.trials << ',' << format_number(c.agg.loss_fraction) << ','
         << format_number(c.agg.mean_p_phys) << ',' << format_number(c.agg.p_e) << ','
         << format_number(c.agg.ci95) << ',' << format_number(c.agg.mean_elapsed) << ','
         << result.master_seed << '\n';
    }
  }
}

void write_optimal_csv(std::ostream& os, const SweepResult& result) {
  os << kOptimalHeader << '\n';
  for (const auto& row : result.rows) {
    os << to_string(result.mode) << ',' << format_number(row.p_cz) << ',' << row.best_n << ','
       << format_number(row.p_e) << ',' << format_number(row.ci95) << '\n';
  }
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows) {
  os << kGrowthHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.p_cz) << ',' << r.stats.target_level << ','
       << format_number(r.stats.mean_attempts) << ',' << format_number(r.stats.mean_time) << ','
       << format_number(r.stats.ci95) << '\n';
  }
}

}  // namespace hcnot
