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

#include "hcnot/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "hcnot/error.hpp"

namespace hcnot {

std::vector<double> SweepSpec::default_p_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 60; ++i) grid.push_back(static_cast<double>(700 + 5 * i) / 1000.0);
  return grid;
}

std::vector<int> SweepSpec::default_n_candidates() {
  std::vector<int> n(12);
  for (int i = 0; i < 12; ++i) n[static_cast<std::size_t>(i)] = i + 1;
  return n;
}

void SweepSpec::validate() const {
  if (p_cz_grid.empty()) throw UsageError("p_cz grid is empty");
  if (n_candidates.empty()) throw UsageError("n_candidates is empty");
  for (double p : p_cz_grid) {
    if (!(p > 0.0 && p <= 1.0)) throw UsageError("p_cz grid values must lie in (0,1]");
  }
  for (int n : n_candidates) {
    if (n < 1) throw UsageError("n_candidates must be positive");
  }
  if (trials_per_point < 1) throw UsageError("trials must be at least 1");
}

std::size_t select_best(const std::vector<CandidateResult>& candidates) {
  if (candidates.empty()) throw UsageError("no candidates");
  double p_min = candidates.front().agg.p_e;
  for (const auto& c : candidates) p_min = std::min(p_min, c.agg.p_e);
  // The argmin itself always qualifies, so `best` is always set.
  std::size_t best = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (c.agg.p_e - p_min > c.agg.ci95) continue;
    if (best == candidates.size() || c.n < candidates[best].n) best = i;
  }
  return best;
}

namespace {

CandidateResult run_candidate(double p_cz, int n, const SweepSpec& spec,
                              const ProtocolConfig& base, int workers) {
  ProtocolConfig cfg = base;
  cfg.mode = spec.mode;
  cfg.n = n;
  cfg.params.p_cz = p_cz;
  return {n, run_ensemble(cfg, spec.trials_per_point, spec.master_seed, workers)};
}

OptimumRow make_row(double p_cz, std::vector<CandidateResult> candidates) {
  OptimumRow row;
  row.p_cz = p_cz;
  const auto& best = candidates[select_best(candidates)];
  row.best_n = best.n;
  row.p_e = best.agg.p_e;
  row.ci95 = best.agg.ci95;
  row.candidates = std::move(candidates);
  return row;
}

}  // namespace

OptimumRow optimize_encoding(double p_cz, const SweepSpec& spec, const ProtocolConfig& base,
                             int workers) {
  spec.validate();
  std::vector<CandidateResult> candidates;
  for (int n : spec.n_candidates) candidates.push_back(run_candidate(p_cz, n, spec, base, workers));
  return make_row(p_cz, std::move(candidates));
}

SweepResult sweep(const SweepSpec& spec, const ProtocolConfig& base, int workers,
                  const SweepProgress& progress) {
  spec.validate();
  SweepResult result;
  result.mode = spec.mode;
  result.master_seed = spec.master_seed;
  const std::size_t total = spec.p_cz_grid.size() * spec.n_candidates.size();
  std::size_t done = 0;
  for (double p : spec.p_cz_grid) {
    std::vector<CandidateResult> candidates;
    for (int n : spec.n_candidates) {
      candidates.push_back(run_candidate(p, n, spec, base, workers));
      if (progress) progress(++done, total);
    }
    result.rows.push_back(make_row(p, std::move(candidates)));
  }

  // The candidate range is adequate only if the lowest p_cz has an interior optimum.
  const auto lowest = std::min_element(result.rows.begin(), result.rows.end(),
                                       [](const auto& a, const auto& b) { return a.p_cz < b.p_cz; });
  const int n_max = *std::max_element(spec.n_candidates.begin(), spec.n_candidates.end());
  if (lowest->best_n == n_max && spec.n_candidates.size() > 1) {
    result.warnings.push_back("optimal n at p_cz=" + std::to_string(lowest->p_cz) +
                              " is the largest candidate (" + std::to_string(n_max) +
                              "); consider extending n_candidates");
  }
  return result;
}

}  // namespace hcnot
