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

#include "hcnot/protocol.hpp"
#include "hcnot/timeline.hpp"

namespace hcnot {

inline constexpr long kDefaultTrials = 50'000;
/// Trials per work unit. Partial results are merged in chunk order, so the
/// aggregate does not depend on how chunks are spread over workers.
inline constexpr long kChunkSize = 1024;

struct ErrorLedger {
  double heralded_factor = 1.0;
  double exposure_factor = 1.0;

  double p_phys() const { return 1.0 - heralded_factor * exposure_factor; }
};

ErrorLedger make_ledger(const TrialRecord& record, const ProtocolConfig& config);

struct TrialResult {
  TrialRecord record;
  ErrorLedger ledger;
};

/// One logical CNOT driven by a generator seeded with `seed`.
TrialResult run_trial(const ProtocolConfig& config, std::uint64_t seed,
                      TimelineDetail* detail = nullptr);

/// Running moments of a per-trial value, mergeable in a fixed order.
struct Moments {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Moments& other);
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  /// Half-width of a normal-approximation 95% interval on the mean.
  double ci95() const;
};

struct Aggregate {
  long trials = 0;
  long losses = 0;
  double loss_fraction = 0.0;
  double mean_p_phys = 0.0;  // over completed trials
  double p_e = 0.0;
  double ci95 = 0.0;
  double sd = 0.0;  // of the per-trial error value
  double mean_elapsed = 0.0;
};

/// loss + (1 - loss) * mean_p_phys.
double total_error(double loss_fraction, double mean_p_phys);
double total_error(const Aggregate& agg);

/// Trial i uses derive_seed(master_seed, i).
Aggregate run_ensemble(const ProtocolConfig& config, long n_trials, std::uint64_t master_seed,
                       int workers);

struct GrowthStats {
  int target_level = 0;
  long runs = 0;
  double mean_attempts = 0.0;
  double mean_time = 0.0;
  double ci95 = 0.0;  // on mean_attempts
};

/// Repeated stand-alone growth of a GHZ resource to target_level.
GrowthStats growth_statistics(const GateParams& params, int target_level, long runs,
                              std::uint64_t master_seed, int workers,
                              long attempt_cap = kDefaultAttemptCap);

}  // namespace hcnot
