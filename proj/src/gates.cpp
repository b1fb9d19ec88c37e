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

#include "hcnot/gates.hpp"

#include <cmath>
#include <string>

#include "hcnot/error.hpp"

namespace hcnot {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError(std::string(name) + " must lie in [0,1]");
}

void require_time(double t, const char* name) {
  if (!(t >= 0.0)) throw UsageError(std::string(name) + " must be non-negative");
}

}  // namespace

void GateParams::validate() const {
  if (!(p_cz > 0.0 && p_cz <= 1.0)) throw UsageError("p_cz must lie in (0,1]");
  require_probability(eps_cz, "eps_cz");
  require_probability(eps_bell, "eps_bell");
  require_time(t_cz, "t_cz");
  require_time(t_bell_remote, "t_bell_remote");
  require_time(t_bell_local, "t_bell_local");
  require_time(t_measure, "t_measure");
  if (!(t_coh > 0.0)) throw UsageError("t_coh must be positive");
  if (!(bell_attempt_probability > 0.0 && bell_attempt_probability <= 1.0)) {
    throw UsageError("bell_attempt_probability must lie in (0,1]");
  }
}

GateOutcome sample_cz(const GateParams& params, Rng& rng) {
  return {rng.bernoulli(params.p_cz), params.t_cz};
}

GateOutcome effective_cnot(CavityRef control, CavityRef target, const GateParams& params,
                           Rng& rng) {
  if (control != target) {
    throw UsageError("effective_cnot needs both qubits in one cavity; use teleported_cnot");
  }
  return sample_cz(params, rng);
}

double bell_time(LinkKind link, const GateParams& params) {
  return link == LinkKind::InterNode ? params.t_bell_remote : params.t_bell_local;
}

BellPair generate_bell(LinkKind link, const GateParams& params, Rng& rng) {
  const double mean = bell_time(link, params);
  double time = mean;
  if (params.bell_timing == BellTiming::Geometric) {
    // Attempts of length mean*q, each succeeding with probability q.
    const double q = params.bell_attempt_probability;
    long attempts = 1;
    while (!rng.bernoulli(q)) ++attempts;
    time = static_cast<double>(attempts) * mean * q;
  }
  return {link, time, params.eps_bell};
}

TeleportedOutcome teleported_cnot(LinkKind link, const GateParams& params, Rng& rng) {
  TeleportedOutcome out;
  out.bell = generate_bell(link, params, rng);
  out.control_cz_success = sample_cz(params, rng).success;
  out.target_cz_success = sample_cz(params, rng).success;
  out.success = out.control_cz_success && out.target_cz_success;
  out.failed = static_cast<FailedSide>((out.control_cz_success ? 0 : 1) |
                                       (out.target_cz_success ? 0 : 2));
  out.duration = out.bell.generation_time + 2.0 * params.t_cz;
  return out;
}

}  // namespace hcnot
