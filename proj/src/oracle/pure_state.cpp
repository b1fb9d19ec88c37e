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

#include "hcnot/oracle/pure_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hcnot/error.hpp"

namespace hcnot::oracle {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kNormTolerance = 1e-10;

void check_qubit(const PureState& s, int q) {
  if (q < 0 || q >= s.num_qubits()) {
    throw UsageError("qubit index " + std::to_string(q) + " out of range for a " +
                     std::to_string(s.num_qubits()) + "-qubit register");
  }
}

// Inserts bit `value` at position `q` of a (num_qubits-1)-bit index.
std::uint64_t insert_bit(std::uint64_t index, int q, std::uint64_t value) {
  const std::uint64_t low = index & ((std::uint64_t{1} << q) - 1);
  const std::uint64_t high = index >> q;
  return low | (value << q) | (high << (q + 1));
}

// Basis vector components <0|v>, <1|v> for the measured outcome.
std::pair<Amplitude, Amplitude> basis_vector(BasisKind basis, int outcome) {
  if (basis == BasisKind::QubitBasis) {
    return outcome == 0 ? std::pair<Amplitude, Amplitude>{1.0, 0.0}
                        : std::pair<Amplitude, Amplitude>{0.0, 1.0};
  }
  return outcome == 0 ? std::pair<Amplitude, Amplitude>{kInvSqrt2, kInvSqrt2}
                      : std::pair<Amplitude, Amplitude>{kInvSqrt2, -kInvSqrt2};
}

void apply_single(std::vector<Amplitude>& amps, int q, Amplitude m00, Amplitude m01,
                  Amplitude m10, Amplitude m11) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const Amplitude v0 = amps[i];
    const Amplitude v1 = amps[i | bit];
    amps[i] = m00 * v0 + m01 * v1;
    amps[i | bit] = m10 * v0 + m11 * v1;
  }
}

}  // namespace

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw UsageError("register size must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                     std::to_string(num_qubits));
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

PureState::PureState(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

PureState PureState::empty_register() { return PureState(0, {Amplitude{1.0, 0.0}}); }

PureState PureState::from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw UsageError("register size out of range: " + std::to_string(num_qubits));
  }
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw UsageError("amplitude vector length must be 2^num_qubits");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) throw UsageError("amplitudes must be normalized");
  return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::basis_state(int num_qubits, std::uint64_t bits) {
  PureState s(num_qubits);
  if (bits >= s.amplitudes_.size()) throw UsageError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[bits] = 1.0;
  return s;
}

double PureState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

PureState apply_gate(PureState state, const Gate& gate, std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity()) {
    throw UsageError("gate expects " + std::to_string(gate.arity()) + " target(s), got " +
                     std::to_string(targets.size()));
  }
  for (int q : targets) check_qubit(state, q);
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw UsageError("two-qubit gate targets must be distinct");
  }

  auto& amps = state.mutable_amplitudes();
  const int q0 = targets[0];
  switch (gate.kind) {
    case GateKind::H:
      apply_single(amps, q0, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
      break;
    case GateKind::X:
      apply_single(amps, q0, 0.0, 1.0, 1.0, 0.0);
      break;
    case GateKind::Z:
      apply_single(amps, q0, 1.0, 0.0, 0.0, -1.0);
      break;
    case GateKind::UPsi: {
      const double norm = std::norm(gate.a) + std::norm(gate.b);
      if (std::abs(norm - 1.0) > kNormTolerance) {
        throw UsageError("U_psi requires |a|^2 + |b|^2 = 1");
      }
      apply_single(amps, q0, gate.a, gate.b, gate.b, gate.a);
      break;
    }
    case GateKind::CZ: {
      const std::uint64_t mask = (std::uint64_t{1} << q0) | (std::uint64_t{1} << targets[1]);
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
      }
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t control = std::uint64_t{1} << q0;
      const std::uint64_t target = std::uint64_t{1} << targets[1];
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & control) && !(i & target)) std::swap(amps[i], amps[i | target]);
      }
      break;
    }
  }
  return state;
}

PureState apply_gate(PureState state, const Gate& gate, std::initializer_list<int> targets) {
  return apply_gate(std::move(state), gate, std::span<const int>(targets.begin(), targets.size()));
}

PureState make_ghz(int n) {
  if (n < 1 || n > kMaxQubits) throw UsageError("make_ghz: n must be in [1, 14]");
  // (|+>^n + |->^n)/sqrt(2) is the uniform superposition of even-parity strings.
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::sqrt(2.0 / static_cast<double>(dim));
  std::vector<Amplitude> amps(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::popcount(i) % 2 == 0) amps[i] = amp;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState make_logical(int n, Amplitude a, Amplitude b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kNormTolerance) {
    throw UsageError("make_logical requires |a|^2 + |b|^2 = 1");
  }
  return apply_gate(make_ghz(n), Gate::u_psi(a, b), {0});
}

PureState logical_superposition(int n, Amplitude a, Amplitude b) {
  if (n < 1 || n > kMaxQubits) throw UsageError("logical_superposition: n out of range");
  // |1^n> = (|+>^n - |->^n)/sqrt(2) covers the odd-parity strings.
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::sqrt(2.0 / static_cast<double>(dim));
  std::vector<Amplitude> amps(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    amps[i] = (std::popcount(i) % 2 == 0 ? a : b) * amp;
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

PureState tensor(const PureState& low, const PureState& high) {
  const int n = low.num_qubits() + high.num_qubits();
  if (n > kMaxQubits) throw UsageError("tensor product exceeds the register cap");
  const auto lo = low.amplitudes();
  const auto hi = high.amplitudes();
  std::vector<Amplitude> amps(lo.size() * hi.size());
  for (std::size_t h = 0; h < hi.size(); ++h) {
    for (std::size_t l = 0; l < lo.size(); ++l) amps[h * lo.size() + l] = lo[l] * hi[h];
  }
  return PureState::from_amplitudes(n, std::move(amps));
}

std::pair<double, PureState> project_out(const PureState& state, int qubit, BasisKind basis,
                                         int outcome) {
  check_qubit(state, qubit);
  const auto [v0, v1] = basis_vector(basis, outcome);
  const int remaining = state.num_qubits() - 1;
  const auto src = state.amplitudes();
  std::vector<Amplitude> amps(std::size_t{1} << remaining);
  double prob = 0.0;
  for (std::uint64_t j = 0; j < amps.size(); ++j) {
    amps[j] = std::conj(v0) * src[insert_bit(j, qubit, 0)] +
              std::conj(v1) * src[insert_bit(j, qubit, 1)];
    prob += std::norm(amps[j]);
  }
  if (prob > 0.0) {
    const double scale = 1.0 / std::sqrt(prob);
    for (auto& a : amps) a *= scale;
  }
  // An impossible outcome leaves the zero vector, which from_amplitudes rejects.
  PureState rest = remaining == 0 ? PureState::empty_register() : PureState(remaining);
  rest.mutable_amplitudes() = std::move(amps);
  return {prob, std::move(rest)};
}

double outcome_probability(const PureState& state, int qubit, BasisKind basis, int outcome) {
  return project_out(state, qubit, basis, outcome).first;
}

std::pair<MeasurementRecord, PureState> measure(const PureState& state, int qubit,
                                                BasisKind basis, Rng& rng) {
  check_qubit(state, qubit);
  auto [p0, post0] = project_out(state, qubit, basis, 0);
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  MeasurementRecord record{qubit, basis, outcome};
  if (outcome == 0) return {record, std::move(post0)};
  return {record, project_out(state, qubit, basis, 1).second};
}

std::pair<double, PureState> dephase_to(const PureState& state, int qubit, int outcome) {
  check_qubit(state, qubit);
  PureState out = state;
  auto& amps = out.mutable_amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double prob = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const bool set = (i & bit) != 0;
    if (set != (outcome == 1)) {
      amps[i] = 0.0;
    } else {
      prob += std::norm(amps[i]);
    }
  }
  if (prob > 0.0) {
    const double scale = 1.0 / std::sqrt(prob);
    for (auto& a : amps) a *= scale;
  }
  return {prob, std::move(out)};
}

PureState dephase(const PureState& state, int qubit, Rng& rng) {
  auto [p0, post0] = dephase_to(state, qubit, 0);
  if (rng.uniform() < p0) return std::move(post0);
  return dephase_to(state, qubit, 1).second;
}

double fidelity(const PureState& s1, const PureState& s2) {
  if (s1.num_qubits() != s2.num_qubits()) {
    throw UsageError("fidelity: register sizes differ");
  }
  Amplitude overlap{0.0, 0.0};
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::min(1.0, std::norm(overlap));
}

}  // namespace hcnot::oracle
