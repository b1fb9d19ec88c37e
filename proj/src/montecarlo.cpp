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

#include "hcnot/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "hcnot/encoding.hpp"
#include "hcnot/error.hpp"
#include "hcnot/random.hpp"

namespace hcnot {

ErrorLedger make_ledger(const TrialRecord& record, const ProtocolConfig& config) {
  const auto& p = config.params;
  ErrorLedger ledger;
  ledger.heralded_factor = std::pow(1.0 - p.eps_cz, static_cast<double>(record.cz_successes)) *
                           std::pow(1.0 - p.eps_bell, static_cast<double>(record.bell_pairs_consumed));
  const double x = std::isinf(p.t_coh) ? 0.0 : record.exposure_total / p.t_coh;
  ledger.exposure_factor = config.decoherence == DecoherenceModel::Exponential
                               ? std::exp(-x)
                               : std::max(0.0, 1.0 - x);
  return ledger;
}

TrialResult run_trial(const ProtocolConfig& config, std::uint64_t seed, TimelineDetail* detail) {
  Rng rng(seed);
  TrialResult result;
  result.record = logical_cnot(config, rng, detail);
  result.ledger = make_ledger(result.record, config);
  return result;
}

void Moments::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void Moments::merge(const Moments& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  const double n = static_cast<double>(count + o.count);
  const double delta = o.mean - mean;
  mean += delta * static_cast<double>(o.count) / n;
  m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / n;
  count += o.count;
}

double Moments::ci95() const {
  if (count == 0) return 0.0;
  return 1.96 * std::sqrt(variance() / static_cast<double>(count));
}

double total_error(double loss_fraction, double mean_p_phys) {
  return loss_fraction + (1.0 - loss_fraction) * mean_p_phys;
}

double total_error(const Aggregate& agg) { return total_error(agg.loss_fraction, agg.mean_p_phys); }

namespace {

// Runs fn(begin, end) for each fixed-size chunk of [0, n) on `workers`
// threads and merges the partial results in chunk order.
template <typename Partial, typename Fn>
Partial chunked_reduce(long n, int workers, Fn fn) {
  const long chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<Partial> parts(static_cast<std::size_t>(chunks));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    while (true) {
      const long c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        parts[static_cast<std::size_t>(c)] = fn(c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const int threads = static_cast<int>(std::clamp<long>(workers, 1, std::max<long>(chunks, 1)));
  if (threads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Partial total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

struct EnsemblePartial {
  long losses = 0;
  long completed = 0;
  Moments value;  // 1 on loss, else p_phys
  Moments p_phys;
  Moments elapsed;

  void merge(const EnsemblePartial& o) {
    losses += o.losses;
    completed += o.completed;
    value.merge(o.value);
    p_phys.merge(o.p_phys);
    elapsed.merge(o.elapsed);
  }
};

struct GrowthPartial {
  Moments attempts;
  Moments time;

  void merge(const GrowthPartial& o) {
    attempts.merge(o.attempts);
    time.merge(o.time);
  }
};

}  // namespace

Aggregate run_ensemble(const ProtocolConfig& config, long n_trials, std::uint64_t master_seed,
                       int workers) {
  if (n_trials < 1) throw UsageError("n_trials must be at least 1");
  config.validate();
  const auto total = chunked_reduce<EnsemblePartial>(n_trials, workers, [&](long begin, long end) {
    EnsemblePartial part;
    for (long i = begin; i < end; ++i) {
      const auto r = run_trial(config, derive_seed(master_seed, static_cast<std::uint64_t>(i)));
      part.elapsed.add(r.record.elapsed);
      if (r.record.logical_loss) {
        ++part.losses;
        part.value.add(1.0);
      } else {
        ++part.completed;
        const double p = r.ledger.p_phys();
        part.p_phys.add(p);
        part.value.add(p);
      }
    }
    return part;
  });
  Aggregate agg;
  agg.trials = n_trials;
  agg.losses = total.losses;
  agg.loss_fraction = static_cast<double>(total.losses) / static_cast<double>(n_trials);
  agg.mean_p_phys = total.p_phys.mean;
  agg.p_e = total_error(agg);
  agg.sd = std::sqrt(total.value.variance());
  agg.ci95 = total.value.ci95();
  agg.mean_elapsed = total.elapsed.mean;
  return agg;
}

GrowthStats growth_statistics(const GateParams& params, int target_level, long runs,
                              std::uint64_t master_seed, int workers, long attempt_cap) {
  if (runs < 1) throw UsageError("runs must be at least 1");
  if (target_level < 1) throw UsageError("target_level must be at least 1");
  params.validate();
  const auto total = chunked_reduce<GrowthPartial>(runs, workers, [&](long begin, long end) {
    GrowthPartial part;
    for (long i = begin; i < end; ++i) {
      Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
      Timeline tl;
      PoolSet pools({target_level + 2}, 0.0);
      SimContext ctx{params, rng, tl, pools, attempt_cap};
      const auto g = grow_ghz(target_level, 0, ctx);
      part.attempts.add(static_cast<double>(g.outcome.cz_attempts));
      part.time.add(g.outcome.elapsed);
    }
    return part;
  });
  return {target_level, runs, total.attempts.mean, total.time.mean, total.attempts.ci95()};
}

}  // namespace hcnot
