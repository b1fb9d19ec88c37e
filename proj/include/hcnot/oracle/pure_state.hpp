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

// Exact state-vector simulator for small registers. This is the ground truth
// the bookkeeping modules are checked against, so it favours clarity over
// speed: every operation is value-in/value-out.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hcnot/random.hpp"

namespace hcnot::oracle {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 14;

/// Qubit basis {|0>, |1>} or rotated basis {|+>, |->}.
enum class BasisKind { QubitBasis, RotatedBasis };

struct MeasurementRecord {
  int qubit = 0;
  BasisKind basis = BasisKind::QubitBasis;
  int outcome = 0;  // 0 -> |0> or |+>, 1 -> |1> or |->
};

enum class GateKind { H, X, Z, CZ, CNOT, UPsi };

struct Gate {
  GateKind kind = GateKind::H;
  Amplitude a{1.0, 0.0};  // UPsi only
  Amplitude b{0.0, 0.0};

  static Gate h() { return {GateKind::H}; }
  static Gate x() { return {GateKind::X}; }
  static Gate z() { return {GateKind::Z}; }
  static Gate cz() { return {GateKind::CZ}; }
  static Gate cnot() { return {GateKind::CNOT}; }
  /// a*I + b*sigma_x on one qubit. Requires |a|^2 + |b|^2 = 1.
  static Gate u_psi(Amplitude a, Amplitude b) { return {GateKind::UPsi, a, b}; }

  int arity() const { return (kind == GateKind::CZ || kind == GateKind::CNOT) ? 2 : 1; }
};

/// Qubit k is bit k of the basis-state index.
class PureState {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit PureState(int num_qubits);

  /// The zero-qubit register left behind after the last qubit is measured.
  static PureState empty_register();

  static PureState from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

  /// |bits> as a computational basis state.
  static PureState basis_state(int num_qubits, std::uint64_t bits);

  int num_qubits() const { return num_qubits_; }
  bool empty() const { return num_qubits_ == 0; }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }
  double norm_squared() const;

  // Raw mutation for the gate kernels; callers keep the state normalized.
  std::vector<Amplitude>& mutable_amplitudes() { return amplitudes_; }

 private:
  PureState(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Applies `gate` to `targets` (control first for CNOT/CZ).
PureState apply_gate(PureState state, const Gate& gate, std::span<const int> targets);
PureState apply_gate(PureState state, const Gate& gate, std::initializer_list<int> targets);

/// |0^n> = (|+>^n + |->^n)/sqrt(2).
PureState make_ghz(int n);

/// a|0^n> + b|1^n>, built by applying U_psi(a, b) to one qubit of make_ghz(n).
PureState make_logical(int n, Amplitude a, Amplitude b);

/// a|0^n> + b|1^n> written down directly from the parity definition. Used to
/// cross-check make_logical.
PureState logical_superposition(int n, Amplitude a, Amplitude b);

/// Tensor product; `low` occupies qubits [0, low.num_qubits()).
PureState tensor(const PureState& low, const PureState& high);

/// Projects `qubit` onto the given outcome and removes it from the register.
/// Returns the Born probability of that outcome and the renormalized rest.
/// When the probability is zero the returned state is left unnormalized.
std::pair<double, PureState> project_out(const PureState& state, int qubit, BasisKind basis,
                                         int outcome);

/// Born-rule measurement; the measured qubit leaves the register. Measuring
/// the final qubit yields empty_register().
std::pair<MeasurementRecord, PureState> measure(const PureState& state, int qubit,
                                                BasisKind basis, Rng& rng);

/// Probability of `outcome` when measuring `qubit` in `basis`.
double outcome_probability(const PureState& state, int qubit, BasisKind basis, int outcome);

/// Qubit-basis projection with the outcome forced; the qubit stays in the
/// register. Returns the probability of that branch.
std::pair<double, PureState> dephase_to(const PureState& state, int qubit, int outcome);

/// Environment-induced qubit-basis projection with a sampled, unread outcome.
PureState dephase(const PureState& state, int qubit, Rng& rng);

/// |<s1|s2>|^2 (global phase ignored).
double fidelity(const PureState& s1, const PureState& s2);

}  // namespace hcnot::oracle
