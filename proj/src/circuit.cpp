// Copyright 2026 The coherentsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherentsim/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace coherentsim {

namespace {

using cd = std::complex<double>;

// 2^24 amplitudes (256 MiB) is already far past the documented practical
// ceiling of ~12 qubits for this simulator.
constexpr int kMaxQubits = 24;

void check_qubit(int qubit, int n_qubits, const char* what) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range(std::string(what) + " qubit index " +
                            std::to_string(qubit) + " out of range for " +
                            std::to_string(n_qubits) + " qubits");
  }
}

// In-place 2x2 update on the target qubit, restricted to indices where every
// bit of control_mask is set (control_mask = 0 for uncontrolled gates).
void apply_two_by_two(Statevector& state, int target, std::size_t control_mask,
                      cd u00, cd u01, cd u10, cd u11) {
  const std::size_t dim = state.dim();
  const std::size_t target_mask = std::size_t{1}
                                  << (state.n_qubits - 1 - target);
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & target_mask) != 0) continue;
    if ((base & control_mask) != control_mask) continue;
    const std::size_t upper = base | target_mask;
    const cd a0 = state.amplitudes[base];
    const cd a1 = state.amplitudes[upper];
    state.amplitudes[base] = u00 * a0 + u01 * a1;
    state.amplitudes[upper] = u10 * a0 + u11 * a1;
  }
}

void apply_pauli_exp(Statevector& state, const Gate& gate) {
  if (static_cast<int>(gate.pauli.size()) != state.n_qubits) {
    throw std::invalid_argument(
        "apply_gate: PAULI_EXP string width does not match qubit count");
  }
  const double c = std::cos(gate.angle);
  const double s = std::sin(gate.angle);
  const cd minus_i_s{0.0, -s};
  const std::size_t dim = state.dim();
  const std::size_t flips = pauli_flip_mask(gate.pauli);
  if (flips == 0) {
    // Diagonal string: exp(-i theta P) multiplies each amplitude by
    // cos(theta) - i sin(theta) * (+/-1).
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const cd phase = pauli_column_phase(gate.pauli, idx);
      state.amplitudes[idx] *= c + minus_i_s * phase;
    }
    return;
  }
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const std::size_t partner = idx ^ flips;
    if (partner < idx) continue;
    const cd a0 = state.amplitudes[idx];
    const cd a1 = state.amplitudes[partner];
    // (P psi)[idx] picks column partner of P, whose only entry sits at row
    // idx with value pauli_column_phase(partner).
    state.amplitudes[idx] =
        c * a0 + minus_i_s * pauli_column_phase(gate.pauli, partner) * a1;
    state.amplitudes[partner] =
        c * a1 + minus_i_s * pauli_column_phase(gate.pauli, idx) * a0;
  }
}

}  // namespace

Gate rx(int target, double angle) {
  return Gate{GateKind::RX, target, -1, angle, {}};
}

Gate ry(int target, double angle) {
  return Gate{GateKind::RY, target, -1, angle, {}};
}

Gate rz(int target, double angle) {
  return Gate{GateKind::RZ, target, -1, angle, {}};
}

Gate cnot(int control, int target) {
  return Gate{GateKind::CNOT, target, control, 0.0, {}};
}

Gate cry(int control, int target, double angle) {
  return Gate{GateKind::CRY, target, control, angle, {}};
}

Gate pauli_exp(double angle, std::vector<PauliAxis> axes) {
  return Gate{GateKind::PauliExp, 0, -1, angle, std::move(axes)};
}

Statevector Statevector::vacuum(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Statevector: qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  Statevector state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(std::size_t{1} << n_qubits, cd{0.0, 0.0});
  state.amplitudes[0] = cd{1.0, 0.0};
  return state;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const cd& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  const int n = state.n_qubits;
  switch (gate.kind) {
    case GateKind::RX: {
      check_qubit(gate.target, n, "target");
      const double h = 0.5 * gate.angle;
      apply_two_by_two(state, gate.target, 0, std::cos(h), cd{0.0, -std::sin(h)},
                       cd{0.0, -std::sin(h)}, std::cos(h));
      break;
    }
    case GateKind::RY: {
      check_qubit(gate.target, n, "target");
      const double h = 0.5 * gate.angle;
      apply_two_by_two(state, gate.target, 0, std::cos(h), -std::sin(h),
                       std::sin(h), std::cos(h));
      break;
    }
    case GateKind::RZ: {
      check_qubit(gate.target, n, "target");
      const double h = 0.5 * gate.angle;
      apply_two_by_two(state, gate.target, 0, std::polar(1.0, -h), cd{0.0, 0.0},
                       cd{0.0, 0.0}, std::polar(1.0, h));
      break;
    }
    case GateKind::CNOT:
    case GateKind::CRY: {
      check_qubit(gate.target, n, "target");
      check_qubit(gate.control, n, "control");
      if (gate.control == gate.target) {
        throw std::out_of_range("apply_gate: control equals target");
      }
      const std::size_t control_mask = std::size_t{1}
                                       << (n - 1 - gate.control);
      if (gate.kind == GateKind::CNOT) {
        apply_two_by_two(state, gate.target, control_mask, cd{0.0, 0.0},
                         cd{1.0, 0.0}, cd{1.0, 0.0}, cd{0.0, 0.0});
      } else {
        const double h = 0.5 * gate.angle;
        apply_two_by_two(state, gate.target, control_mask, std::cos(h),
                         -std::sin(h), std::sin(h), std::cos(h));
      }
      break;
    }
    case GateKind::PauliExp:
      apply_pauli_exp(state, gate);
      break;
  }
  return state;
}

Statevector run(const Circuit& circuit, Statevector initial) {
  if (circuit.n_qubits != initial.n_qubits) {
    throw std::invalid_argument("run: circuit and state qubit counts differ");
  }
  for (const Gate& gate : circuit.gates) {
    initial = apply_gate(std::move(initial), gate);
  }
  return initial;
}

GateCount gate_count(const Circuit& circuit) {
  GateCount count;
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        ++count.single_qubit;
        break;
      case GateKind::CNOT:
        ++count.cnot;
        break;
      case GateKind::CRY:
        count.single_qubit += 2;
        count.cnot += 2;
        break;
      case GateKind::PauliExp:
        throw std::invalid_argument(
            "gate_count: PAULI_EXP is outside the counted gate set");
    }
  }
  return count;
}

}  // namespace coherentsim
