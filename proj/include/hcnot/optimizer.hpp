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
#include <functional>
#include <string>
#include <vector>

#include "hcnot/montecarlo.hpp"
#include "hcnot/protocol.hpp"

namespace hcnot {

struct SweepSpec {
  Mode mode = Mode::Local;
  std::vector<double> p_cz_grid = default_p_grid();
  std::vector<int> n_candidates = default_n_candidates();
  long trials_per_point = kDefaultTrials;
  std::uint64_t master_seed = 1;

  /// 0.700, 0.705, ..., 0.995.
  static std::vector<double> default_p_grid();
  /// 1..12.
  static std::vector<int> default_n_candidates();
  void validate() const;
};

struct CandidateResult {
  int n = 0;
  Aggregate agg;
};

struct OptimumRow {
  double p_cz = 0.0;
  int best_n = 0;
  double p_e = 0.0;
  double ci95 = 0.0;
  std::vector<CandidateResult> candidates;  // in n_candidates order
};

struct SweepResult {
  Mode mode = Mode::Local;
  std::uint64_t master_seed = 0;
  std::vector<OptimumRow> rows;  // in grid order
  std::vector<std::string> warnings;
};

/// Smallest n whose p_e lies within its own ci95 of the minimum p_e.
std::size_t select_best(const std::vector<CandidateResult>& candidates);

/// Called after each (p_cz, n) ensemble with (done, total).
using SweepProgress = std::function<void(std::size_t, std::size_t)>;

/// Runs every candidate n at p_cz with `base` otherwise unchanged. All
/// candidates share the master seed.
OptimumRow optimize_encoding(double p_cz, const SweepSpec& spec, const ProtocolConfig& base,
                             int workers);

SweepResult sweep(const SweepSpec& spec, const ProtocolConfig& base, int workers,
                  const SweepProgress& progress = {});

}  // namespace hcnot
