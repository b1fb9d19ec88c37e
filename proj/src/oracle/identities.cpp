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

#include "hcnot/oracle/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "hcnot/oracle/labeled_register.hpp"
#include "hcnot/oracle/pure_state.hpp"
#include "hcnot/random.hpp"
#include "hcnot/sequence.hpp"

namespace hcnot::oracle {
namespace {

using Labels = std::vector<std::string>;
constexpr double kImpossible = 1e-12;

Labels names(const std::string& prefix, int n) {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Labels concat(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct Coeffs {
  Amplitude a;
  Amplitude b;
};

Coeffs random_coeffs(Rng& rng) {
  std::normal_distribution<double> g;
  const Amplitude a{g(rng), g(rng)};
  const Amplitude b{g(rng), g(rng)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

// Logical basis states first, then random superpositions.
std::vector<Coeffs> test_inputs(Rng& rng, int random_count) {
  std::vector<Coeffs> out{{1.0, 0.0}, {0.0, 1.0}};
  for (int i = 0; i < random_count; ++i) out.push_back(random_coeffs(rng));
  return out;
}

// Forced measurement outcomes, enumerated as the bits of `pattern`.
class Circuit {
 public:
  explicit Circuit(std::uint64_t pattern) : pattern_(pattern) {}

  LabeledRegister reg;

  int measure(const std::string& label, BasisKind basis) {
    const int outcome = next();
    note(reg.project_out(label, basis, outcome));
    return outcome;
  }

  // Environment projection in the qubit basis; the qubit stays.
  int dephase(const std::string& label) {
    const int outcome = next();
    note(reg.dephase_to(label, outcome));
    return outcome;
  }

  void effective_cnot(const std::string& control, const std::string& target) {
    reg.apply(Gate::h(), {target});
    reg.apply(Gate::cz(), {control, target});
    reg.apply(Gate::h(), {target});
  }

  bool possible() const { return possible_; }
  int used() const { return used_; }
  double probability() const { return probability_; }

 private:
  int next() { return static_cast<int>((pattern_ >> used_++) & 1U); }
  void note(double p) {
    probability_ *= p;
    if (p < kImpossible) possible_ = false;
  }

  std::uint64_t pattern_;
  int used_ = 0;
  bool possible_ = true;
  double probability_ = 1.0;
};

// Runs `body` over every measurement branch. `body` returns the deviation of
// a branch, or a negative value when the branch was impossible.
struct Accumulator {
  long cases = 0;
  double max_dev = 0.0;
  void add(double dev) {
    ++cases;
    max_dev = std::max(max_dev, dev);
  }
};

void for_each_branch(Accumulator& acc, const std::function<double(Circuit&)>& body) {
  Circuit probe(0);
  body(probe);
  const int k = probe.used();
  double total_probability = 0.0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k); ++pattern) {
    Circuit c(pattern);
    const double dev = body(c);
    if (c.used() != k) throw std::logic_error("circuit measurement count depends on outcomes");
    if (!c.possible()) continue;
    total_probability += c.probability();
    acc.add(dev);
  }
  // The branches must exhaust the probability mass.
  acc.add(std::abs(total_probability - 1.0));
}

IdentityResult finish(std::string name, const Accumulator& acc) {
  return {std::move(name), acc.cases, acc.max_dev, acc.max_dev <= kIdentityTolerance};
}

// Recovery after losing one member: sigma_x on any remaining member undoes the
// relabeling a|1> + b|0> caused by a |1> outcome.
void correct_block(Circuit& c, const Labels& block, int outcome, const FaultInjection& faults) {
  if (outcome == 0 || block.empty()) return;
  c.reg.apply(faults.wrong_recovery_correction ? Gate::z() : Gate::x(), {block.front()});
}

void remove_label(Labels& block, const std::string& label) {
  block.erase(std::find(block.begin(), block.end(), label));
}

double deviation(const Circuit& c, const Labels& order, const PureState& expected) {
  return 1.0 - fidelity(c.reg.state_in_order(order), expected);
}

PureState encoded(int n, int bit) {
  return logical_superposition(n, bit == 0 ? 1.0 : 0.0, bit == 0 ? 0.0 : 1.0);
}

// sum_xy coeff[x][y] |x_L>_(na) |y_L>_(nb)
PureState encoded_pair(int na, int nb, const std::array<std::array<Amplitude, 2>, 2>& coeff) {
  const std::size_t dim = std::size_t{1} << (na + nb);
  std::vector<Amplitude> amps(dim, 0.0);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto term = tensor(encoded(na, x), encoded(nb, y));
      const auto src = term.amplitudes();
      for (std::size_t i = 0; i < dim; ++i) amps[i] += coeff[x][y] * src[i];
    }
  }
  return PureState::from_amplitudes(na + nb, std::move(amps));
}

// A product of blocks, skipping empty ones.
PureState product(const std::vector<PureState>& blocks) {
  PureState out = PureState::empty_register();
  for (const auto& b : blocks) out = out.empty() ? b : tensor(out, b);
  return out;
}

// Physical CNOT q1 -> q2 routed through a fresh auxiliary. On return the
// auxiliary holds q2's role and q2 is gone.
void aux_unit(Circuit& c, const std::string& q1, const std::string& q2, const std::string& aux,
              bool teleport_stage2 = false, const std::string& bell_tag = "") {
  c.reg.append_zero(aux);
  c.effective_cnot(q2, aux);
  if (teleport_stage2) {
    // Standard gate teleportation through a Bell pair (e1 near q1, e2 near aux).
    const std::string e1 = "E" + bell_tag + "a";
    const std::string e2 = "E" + bell_tag + "b";
    c.reg.append_zero(e1);
    c.reg.append_zero(e2);
    c.reg.apply(Gate::h(), {e1});
    c.reg.apply(Gate::cnot(), {e1, e2});
    c.effective_cnot(q1, e1);
    if (c.measure(e1, BasisKind::QubitBasis)) c.reg.apply(Gate::x(), {e2});
    c.effective_cnot(e2, aux);
    if (c.measure(e2, BasisKind::RotatedBasis)) c.reg.apply(Gate::z(), {q1});
  } else {
    c.effective_cnot(q1, aux);
  }
  if (c.measure(q2, BasisKind::RotatedBasis)) {
    c.reg.apply(Gate::z(), {aux});
    c.reg.apply(Gate::z(), {q1});
  }
}

void replace_front(Labels& block, const std::string& aux) {
  block.erase(block.begin());
  block.push_back(aux);
}

// Full logical CNOT psi -> phi per kLogicalCnotSequence; psi ends in `res`.
void logical_cnot(Circuit& c, Labels& psi, Labels& res, Labels& phi, bool network) {
  const std::string p1 = psi.front();
  int unit_index = 0;
  for (const auto& unit : kLogicalCnotSequence) {
    if (unit.control != BlockRole::Psi) throw std::logic_error("units must be controlled by psi");
    Labels& target = unit.target == BlockRole::Resource ? res : phi;
    const std::string aux = "A" + std::to_string(unit_index);
    aux_unit(c, p1, target.front(), aux, network, std::to_string(unit_index));
    replace_front(target, aux);
    ++unit_index;
  }
  if (c.measure(p1, BasisKind::RotatedBasis)) {
    for (const auto& q : res) c.reg.apply(Gate::z(), {q});
  }
  psi.erase(psi.begin());
  int parity = 0;
  for (const auto& q : psi) parity ^= c.measure(q, BasisKind::QubitBasis);
  psi.clear();
  if (parity) {
    c.reg.apply(Gate::x(), {res.front()});
    c.reg.apply(Gate::x(), {phi.front()});
  }
}

std::array<std::array<Amplitude, 2>, 2> cnot_output(const Coeffs& psi, const Coeffs& phi) {
  const Amplitude in[2][2] = {{psi.a * phi.a, psi.a * phi.b}, {psi.b * phi.a, psi.b * phi.b}};
  std::array<std::array<Amplitude, 2>, 2> out{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) out[x][x ^ y] = in[x][y];
  }
  return out;
}

double run_logical_cnot(const Coeffs& psi_in, const Coeffs& phi_in, int np, int nr, int nf,
                        bool network, Accumulator& acc) {
  for_each_branch(acc, [&](Circuit& c) {
    Labels psi = names("P", np);
    Labels res = names("R", nr);
    Labels phi = names("F", nf);
    c.reg.append(make_logical(np, psi_in.a, psi_in.b), psi);
    c.reg.append(make_ghz(nr), res);
    c.reg.append(make_logical(nf, phi_in.a, phi_in.b), phi);
    logical_cnot(c, psi, res, phi, network);
    if (!c.possible()) return -1.0;
    return deviation(c, concat(res, phi), encoded_pair(nr, nf, cnot_output(psi_in, phi_in)));
  });
  return acc.max_dev;
}

}  // namespace

IdentityResult check_hadamard_involution(const SuiteOptions& opts) {
  Rng rng(opts.seed);
  Accumulator acc;
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r < opts.random_states; ++r) {
      std::normal_distribution<double> g;
      std::vector<Amplitude> amps(std::size_t{1} << n);
      double norm = 0.0;
      for (auto& a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
      }
      for (auto& a : amps) a /= std::sqrt(norm);
      const auto psi = PureState::from_amplitudes(n, amps);
      for (int q = 0; q < n; ++q) {
        const auto twice = apply_gate(apply_gate(psi, Gate::h(), {q}), Gate::h(), {q});
        acc.add(1.0 - fidelity(psi, twice));
        acc.add(std::abs(twice.norm_squared() - 1.0));
      }
    }
  }
  return finish("hadamard_involution", acc);
}

IdentityResult check_hczh_is_cnot(const SuiteOptions& opts) {
  Rng rng(opts.seed + 1);
  Accumulator acc;
  auto check = [&](const PureState& in) {
    auto viaCz = apply_gate(in, Gate::h(), {1});
    viaCz = apply_gate(std::move(viaCz), Gate::cz(), {0, 1});
    viaCz = apply_gate(std::move(viaCz), Gate::h(), {1});
    const auto direct = apply_gate(in, Gate::cnot(), {0, 1});
    acc.add(1.0 - fidelity(viaCz, direct));
    // Amplitude-level equality, not just overlap: no stray phase per basis state.
    for (std::size_t i = 0; i < 4; ++i) {
      acc.add(std::abs(viaCz.amplitude(i) - direct.amplitude(i)));
    }
  };
  for (std::uint64_t bits = 0; bits < 4; ++bits) check(PureState::basis_state(2, bits));
  std::normal_distribution<double> g;
  for (int r = 0; r < opts.random_states; ++r) {
    std::vector<Amplitude> amps(4);
    double norm = 0.0;
    for (auto& a : amps) {
      a = {g(rng), g(rng)};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    check(PureState::from_amplitudes(2, amps));
  }
  return finish("hczh_equals_cnot", acc);
}

IdentityResult check_ghz_definition(const SuiteOptions&) {
  Accumulator acc;
  const auto plus = apply_gate(PureState(1), Gate::h(), {0});
  const auto minus = apply_gate(apply_gate(PureState(1), Gate::x(), {0}), Gate::h(), {0});
  for (int n = 1; n <= 10; ++n) {
    PureState all_plus = plus;
    PureState all_minus = minus;
    for (int k = 1; k < n; ++k) {
      all_plus = tensor(all_plus, plus);
      all_minus = tensor(all_minus, minus);
    }
    std::vector<Amplitude> amps(all_plus.amplitudes().size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      amps[i] = (all_plus.amplitude(i) + all_minus.amplitude(i)) / std::sqrt(2.0);
    }
    const auto ghz = make_ghz(n);
    acc.add(1.0 - fidelity(ghz, PureState::from_amplitudes(n, amps)));
    acc.add(std::abs(ghz.norm_squared() - 1.0));

    // Symmetries: sigma_z on every qubit, sigma_x on any pair.
    PureState zs = ghz;
    for (int q = 0; q < n; ++q) zs = apply_gate(std::move(zs), Gate::z(), {q});
    acc.add(1.0 - fidelity(ghz, zs));
    for (int i = 0; i + 1 < n; ++i) {
      auto xx = apply_gate(apply_gate(ghz, Gate::x(), {i}), Gate::x(), {i + 1});
      acc.add(1.0 - fidelity(ghz, xx));
    }
    // sigma_x on every qubit flips the logical value when n is odd.
    PureState xs = ghz;
    for (int q = 0; q < n; ++q) xs = apply_gate(std::move(xs), Gate::x(), {q});
    const auto expected_x = n % 2 == 0 ? ghz : encoded(n, 1);
    acc.add(1.0 - fidelity(expected_x, xs));
  }
  return finish("ghz_definition_and_symmetry", acc);
}

IdentityResult check_ghz_measurements(const SuiteOptions&) {
  Accumulator acc;
  for (int n = 2; n <= 8; ++n) {
    const auto ghz = make_ghz(n);
    for (int k = 0; k < n; ++k) {
      // Qubit basis: either outcome leaves a GHZ state (after sigma_x on a |1>).
      for (int outcome = 0; outcome < 2; ++outcome) {
        auto [p, rest] = project_out(ghz, k, BasisKind::QubitBasis, outcome);
        acc.add(std::abs(p - 0.5));
        if (outcome == 1) rest = apply_gate(std::move(rest), Gate::x(), {0});
        acc.add(1.0 - fidelity(rest, make_ghz(n - 1)));
      }
      // Rotated basis: the register collapses to |+>^(n-1) or |->^(n-1).
      for (int outcome = 0; outcome < 2; ++outcome) {
        auto [p, rest] = project_out(ghz, k, BasisKind::RotatedBasis, outcome);
        acc.add(std::abs(p - 0.5));
        PureState bare(n - 1);
        for (int q = 0; q < n - 1; ++q) {
          if (outcome == 1) bare = apply_gate(std::move(bare), Gate::x(), {q});
          bare = apply_gate(std::move(bare), Gate::h(), {q});
        }
        acc.add(1.0 - fidelity(rest, bare));
      }
    }
  }
  return finish("ghz_measurements", acc);
}

IdentityResult check_logical_preparation(const SuiteOptions& opts) {
  Rng rng(opts.seed + 2);
  Accumulator acc;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& in : test_inputs(rng, opts.random_states)) {
      const auto via_u = make_logical(n, in.a, in.b);
      acc.add(1.0 - fidelity(via_u, logical_superposition(n, in.a, in.b)));
      acc.add(std::abs(via_u.norm_squared() - 1.0));
    }
  }
  return finish("logical_preparation", acc);
}

IdentityResult check_parity_recovery(const SuiteOptions& opts) {
  Rng rng(opts.seed + 3);
  Accumulator acc;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& in : test_inputs(rng, opts.random_states)) {
      for (int k = 0; k < n; ++k) {
        for (int outcome = 0; outcome < 2; ++outcome) {
          Circuit c(0);
          Labels block = names("Q", n);
          c.reg.append(make_logical(n, in.a, in.b), block);
          const double p = c.reg.dephase_to(block[k], outcome);
          // The environment's projection is equally likely either way.
          acc.add(std::abs(p - 0.5));
          const double pm = c.reg.project_out(block[k], BasisKind::QubitBasis, outcome);
          acc.add(std::abs(pm - 1.0));
          remove_label(block, "Q" + std::to_string(k));
          correct_block(c, block, outcome, opts.faults);
          acc.add(deviation(c, block, logical_superposition(n - 1, in.a, in.b)));
        }
      }
    }
  }
  return finish("parity_recovery", acc);
}

IdentityResult check_fusion(const SuiteOptions& opts) {
  Rng rng(opts.seed + 4);
  Accumulator acc;
  for (int n = 1; n <= 9; ++n) {
    for (int m = 1; n + m <= 10; ++m) {
      // The first block may carry logical information; the second is a GHZ resource.
      for (const auto& in : test_inputs(rng, 2)) {
        // Success: CNOT from the consumed qubit onto the kept one, then read the
        // consumed qubit in the rotated basis.
        for_each_branch(acc, [&](Circuit& c) {
          Labels a = names("A", n);
          Labels b = names("B", m);
          c.reg.append(make_logical(n, in.a, in.b), a);
          c.reg.append(make_ghz(m), b);
          const std::string consumed = b.front();
          c.reg.apply(Gate::cnot(), {consumed, a.front()});
          const int s = c.measure(consumed, BasisKind::RotatedBasis);
          b.erase(b.begin());
          if (s) {
            for (const auto& q : b) c.reg.apply(Gate::z(), {q});
          }
          if (!c.possible()) return -1.0;
          return deviation(c, concat(a, b), logical_superposition(n + m - 1, in.a, in.b));
        });
        // Failure: both participants projected in the qubit basis, measured out,
        // and each block recovered on its own.
        for_each_branch(acc, [&](Circuit& c) {
          Labels a = names("A", n);
          Labels b = names("B", m);
          c.reg.append(make_logical(n, in.a, in.b), a);
          c.reg.append(make_ghz(m), b);
          const std::string qa = a.front();
          const std::string qb = b.front();
          const int oa = c.measure(qa, BasisKind::QubitBasis);
          const int ob = c.measure(qb, BasisKind::QubitBasis);
          a.erase(a.begin());
          b.erase(b.begin());
          correct_block(c, a, oa, opts.faults);
          correct_block(c, b, ob, opts.faults);
          if (!c.possible()) return -1.0;
          std::vector<PureState> parts;
          if (n > 1) parts.push_back(logical_superposition(n - 1, in.a, in.b));
          if (m > 1) parts.push_back(make_ghz(m - 1));
          if (parts.empty()) return 0.0;
          return deviation(c, concat(a, b), product(parts));
        });
      }
    }
  }
  return finish("fusion", acc);
}

IdentityResult check_attach(const SuiteOptions& opts) {
  Rng rng(opts.seed + 5);
  Accumulator acc;
  for (int k = 1; k <= 9; ++k) {
    for (const auto& in : test_inputs(rng, 3)) {
      // Success: a fresh |+> controls a CNOT onto a member and joins the block.
      {
        Circuit c(0);
        Labels a = names("A", k);
        c.reg.append(make_logical(k, in.a, in.b), a);
        c.reg.append_plus("fresh");
        c.reg.apply(Gate::cnot(), {"fresh", a.front()});
        a.push_back("fresh");
        acc.add(deviation(c, a, logical_superposition(k + 1, in.a, in.b)));
      }
      if (k == 1) continue;
      // Failure: the member is measured out and the fresh qubit discarded.
      for_each_branch(acc, [&](Circuit& c) {
        Labels a = names("A", k);
        c.reg.append(make_logical(k, in.a, in.b), a);
        c.reg.append_plus("fresh");
        const std::string q = a.front();
        const int o = c.measure(q, BasisKind::QubitBasis);
        c.measure("fresh", BasisKind::QubitBasis);
        a.erase(a.begin());
        correct_block(c, a, o, opts.faults);
        if (!c.possible()) return -1.0;
        return deviation(c, a, logical_superposition(k - 1, in.a, in.b));
      });
    }
  }
  return finish("ghz_attach", acc);
}

IdentityResult check_aux_unit(const SuiteOptions& opts) {
  Rng rng(opts.seed + 6);
  Accumulator acc;
  for (int nc = 1; nc <= 3; ++nc) {
    for (int nt = 1; nt <= 3; ++nt) {
      const auto inputs = test_inputs(rng, 3);
      for (const auto& ci : inputs) {
        for (const auto& ti : inputs) {
          // Reference: direct physical CNOT q1 -> q2, with q2 renamed to the aux.
          Circuit ref(0);
          Labels cl = names("C", nc);
          Labels tl = names("T", nt);
          ref.reg.append(make_logical(nc, ci.a, ci.b), cl);
          ref.reg.append(make_logical(nt, ti.a, ti.b), tl);
          ref.reg.apply(Gate::cnot(), {cl.front(), tl.front()});
          const auto expected = ref.reg.state_in_order(concat(cl, tl));

          for_each_branch(acc, [&](Circuit& c) {
            Labels cb = names("C", nc);
            Labels tb = names("T", nt);
            c.reg.append(make_logical(nc, ci.a, ci.b), cb);
            c.reg.append(make_logical(nt, ti.a, ti.b), tb);
            aux_unit(c, cb.front(), tb.front(), "aux");
            tb.front() = "aux";
            if (!c.possible()) return -1.0;
            return deviation(c, concat(cb, tb), expected);
          });
        }
      }
    }
  }
  return finish("aux_mediated_unit", acc);
}

IdentityResult check_aux_unit_failures(const SuiteOptions& opts) {
  Rng rng(opts.seed + 7);
  Accumulator acc;
  for (int nc = 2; nc <= 3; ++nc) {
    for (int nt = 2; nt <= 3; ++nt) {
      const auto inputs = test_inputs(rng, 3);
      for (const auto& ci : inputs) {
        for (const auto& ti : inputs) {
          const auto intact_control = make_logical(nc, ci.a, ci.b);
          // Stage-1 failure: q2 and aux projected; only the target block shrinks.
          for_each_branch(acc, [&](Circuit& c) {
            Labels cb = names("C", nc);
            Labels tb = names("T", nt);
            c.reg.append(intact_control, cb);
            c.reg.append(make_logical(nt, ti.a, ti.b), tb);
            c.reg.append_zero("aux");
            c.reg.apply(Gate::h(), {"aux"});
            const std::string q2 = tb.front();
            const int o2 = c.measure(q2, BasisKind::QubitBasis);
            c.measure("aux", BasisKind::QubitBasis);
            tb.erase(tb.begin());
            correct_block(c, tb, o2, opts.faults);
            if (!c.possible()) return -1.0;
            return deviation(c, concat(cb, tb),
                             tensor(intact_control, logical_superposition(nt - 1, ti.a, ti.b)));
          });
          // Stage-2 failure: q1, q2 and aux all measured; both blocks shrink by one.
          for_each_branch(acc, [&](Circuit& c) {
            Labels cb = names("C", nc);
            Labels tb = names("T", nt);
            c.reg.append(intact_control, cb);
            c.reg.append(make_logical(nt, ti.a, ti.b), tb);
            c.reg.append_zero("aux");
            const std::string q1 = cb.front();
            const std::string q2 = tb.front();
            c.effective_cnot(q2, "aux");
            c.reg.apply(Gate::h(), {"aux"});
            const int o1 = c.measure(q1, BasisKind::QubitBasis);
            c.measure("aux", BasisKind::QubitBasis);
            const int o2 = c.measure(q2, BasisKind::QubitBasis);
            cb.erase(cb.begin());
            tb.erase(tb.begin());
            correct_block(c, cb, o1, opts.faults);
            correct_block(c, tb, o2, opts.faults);
            if (!c.possible()) return -1.0;
            return deviation(c, concat(cb, tb),
                             tensor(logical_superposition(nc - 1, ci.a, ci.b),
                                    logical_superposition(nt - 1, ti.a, ti.b)));
          });
        }
      }
    }
  }
  return finish("aux_unit_failure_recovery", acc);
}

IdentityResult check_unit_undo(const SuiteOptions& opts) {
  Rng rng(opts.seed + 8);
  Accumulator acc;
  for (int np = 2; np <= 3; ++np) {
    for (int nr = 1; nr <= 3; ++nr) {
      for (int nf = 2; nf <= 3; ++nf) {
        const auto inputs = test_inputs(rng, 2);
        for (const auto& pi : inputs) {
          for (const auto& fi : inputs) {
            // Unit 1 completes, unit 2 fails at stage 2: p1 is projected in the
            // qubit basis, which returns the resource to |0_L>.
            for_each_branch(acc, [&](Circuit& c) {
              Labels psi = names("P", np);
              Labels res = names("R", nr);
              Labels phi = names("F", nf);
              c.reg.append(make_logical(np, pi.a, pi.b), psi);
              c.reg.append(make_ghz(nr), res);
              c.reg.append(make_logical(nf, fi.a, fi.b), phi);
              const std::string p1 = psi.front();
              aux_unit(c, p1, res.front(), "A0");
              replace_front(res, "A0");

              const std::string f1 = phi.front();
              c.reg.append_zero("A1");
              c.effective_cnot(f1, "A1");
              c.reg.apply(Gate::h(), {"A1"});
              const int o1 = c.measure(p1, BasisKind::QubitBasis);
              c.measure("A1", BasisKind::QubitBasis);
              const int of = c.measure(f1, BasisKind::QubitBasis);
              psi.erase(psi.begin());
              phi.erase(phi.begin());
              correct_block(c, psi, o1, opts.faults);
              correct_block(c, res, o1, opts.faults);
              correct_block(c, phi, of, opts.faults);
              if (!c.possible()) return -1.0;
              return deviation(c, concat(concat(psi, res), phi),
                               product({logical_superposition(np - 1, pi.a, pi.b), make_ghz(nr),
                                        logical_superposition(nf - 1, fi.a, fi.b)}));
            });
          }
        }
      }
    }
  }
  return finish("unit_undo_after_stage2_failure", acc);
}

IdentityResult check_reencode_fusion(const SuiteOptions& opts) {
  Rng rng(opts.seed + 9);
  Accumulator acc;
  for (int k = 1; k <= 4; ++k) {
    for (int s = 1; s <= 5; ++s) {
      for (const auto& in : test_inputs(rng, 2)) {
        // Success: aux-mediated CNOT from the resource's fusion qubit onto the
        // block, then the fusion qubit is read in the rotated basis.
        for_each_branch(acc, [&](Circuit& c) {
          Labels blk = names("K", k);
          Labels res = names("S", s);
          c.reg.append(make_logical(k, in.a, in.b), blk);
          c.reg.append(make_ghz(s), res);
          const std::string b = res.front();
          aux_unit(c, b, blk.front(), "aux");
          replace_front(blk, "aux");
          const int sign = c.measure(b, BasisKind::RotatedBasis);
          res.erase(res.begin());
          if (sign) {
            for (const auto& q : res) c.reg.apply(Gate::z(), {q});
          }
          if (!c.possible()) return -1.0;
          return deviation(c, concat(blk, res), logical_superposition(k + s - 1, in.a, in.b));
        });
        if (k == 1) continue;
        // Stage-2 failure: block and resource each lose their participant.
        for_each_branch(acc, [&](Circuit& c) {
          Labels blk = names("K", k);
          Labels res = names("S", s);
          c.reg.append(make_logical(k, in.a, in.b), blk);
          c.reg.append(make_ghz(s), res);
          const std::string a = blk.front();
          const std::string b = res.front();
          c.reg.append_zero("aux");
          c.effective_cnot(a, "aux");
          c.reg.apply(Gate::h(), {"aux"});
          const int ob = c.measure(b, BasisKind::QubitBasis);
          c.measure("aux", BasisKind::QubitBasis);
          const int oa = c.measure(a, BasisKind::QubitBasis);
          blk.erase(blk.begin());
          res.erase(res.begin());
          correct_block(c, blk, oa, opts.faults);
          correct_block(c, res, ob, opts.faults);
          if (!c.possible()) return -1.0;
          std::vector<PureState> parts{logical_superposition(k - 1, in.a, in.b)};
          if (s > 1) parts.push_back(make_ghz(s - 1));
          return deviation(c, concat(blk, res), product(parts));
        });
      }
    }
  }
  return finish("reencode_fusion", acc);
}

IdentityResult check_gate_teleportation(const SuiteOptions& opts) {
  Rng rng(opts.seed + 10);
  Accumulator acc;
  std::normal_distribution<double> g;
  std::vector<PureState> inputs;
  for (std::uint64_t bits = 0; bits < 4; ++bits) inputs.push_back(PureState::basis_state(2, bits));
  for (int r = 0; r < opts.random_states; ++r) {
    std::vector<Amplitude> amps(4);
    double norm = 0.0;
    for (auto& a : amps) {
      a = {g(rng), g(rng)};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    inputs.push_back(PureState::from_amplitudes(2, amps));
  }
  for (const auto& in : inputs) {
    const auto expected = apply_gate(in, Gate::cnot(), {0, 1});
    for_each_branch(acc, [&](Circuit& c) {
      c.reg.append(in, {"c", "t"});
      c.reg.append_zero("e1");
      c.reg.append_zero("e2");
      c.reg.apply(Gate::h(), {"e1"});
      c.reg.apply(Gate::cnot(), {"e1", "e2"});
      c.effective_cnot("c", "e1");  // heralded CZ at node A
      if (c.measure("e1", BasisKind::QubitBasis)) c.reg.apply(Gate::x(), {"e2"});
      c.effective_cnot("e2", "t");  // heralded CZ at node B
      if (c.measure("e2", BasisKind::RotatedBasis)) c.reg.apply(Gate::z(), {"c"});
      if (!c.possible()) return -1.0;
      return deviation(c, {"c", "t"}, expected);
    });
  }
  return finish("gate_teleportation", acc);
}

IdentityResult check_logical_cnot_local(const SuiteOptions& opts) {
  Rng rng(opts.seed + 11);
  Accumulator acc;
  const auto inputs = test_inputs(rng, 3);
  // Unencoded: a single effective CNOT.
  for (const auto& pi : inputs) {
    for (const auto& fi : inputs) {
      Circuit c(0);
      c.reg.append(make_logical(1, pi.a, pi.b), {"p"});
      c.reg.append(make_logical(1, fi.a, fi.b), {"f"});
      c.effective_cnot("p", "f");
      acc.add(deviation(c, {"p", "f"}, encoded_pair(1, 1, cnot_output(pi, fi))));
    }
  }
  for (int np = 1; np <= 3; ++np) {
    for (int nr = 1; nr <= 3; ++nr) {
      for (int nf = 1; nf <= 3; ++nf) {
        for (const auto& pi : inputs) {
          for (const auto& fi : inputs) run_logical_cnot(pi, fi, np, nr, nf, false, acc);
        }
      }
    }
  }
  return finish("logical_cnot_local", acc);
}

IdentityResult check_logical_cnot_network(const SuiteOptions& opts) {
  Rng rng(opts.seed + 12);
  Accumulator acc;
  const auto inputs = test_inputs(rng, 2);
  for (const auto& pi : inputs) {
    for (const auto& fi : inputs) run_logical_cnot(pi, fi, 2, 2, 2, true, acc);
  }
  return finish("logical_cnot_network", acc);
}

std::vector<IdentityResult> run_identity_suite(const SuiteOptions& opts) {
  return {
      check_hadamard_involution(opts), check_hczh_is_cnot(opts),
      check_ghz_definition(opts),      check_ghz_measurements(opts),
      check_logical_preparation(opts), check_parity_recovery(opts),
      check_fusion(opts),              check_attach(opts),
      check_aux_unit(opts),            check_aux_unit_failures(opts),
      check_unit_undo(opts),           check_reencode_fusion(opts),
      check_gate_teleportation(opts),  check_logical_cnot_local(opts),
      check_logical_cnot_network(opts),
  };
}

}  // namespace hcnot::oracle
