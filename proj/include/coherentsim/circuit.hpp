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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "coherentsim/pauli.hpp"

namespace coherentsim {

/// Rotation gates follow R_a(theta) = exp(-i theta sigma_a / 2). PAULI_EXP
/// carries the full angle: it applies exp(-i theta P) for a unit-coefficient
/// Pauli string P.
enum class GateKind { RX, RY, RZ, CNOT, CRY, PauliExp };

struct Gate {
  GateKind kind = GateKind::RX;
  int target = 0;
  int control = -1;             // CNOT and CRY only
  double angle = 0.0;           // rotation kinds and PauliExp
  std::vector<PauliAxis> pauli; // PauliExp only; pauli[q] acts on qubit q
};

Gate rx(int target, double angle);
Gate ry(int target, double angle);
Gate rz(int target, double angle);
Gate cnot(int control, int target);
Gate cry(int control, int target, double angle);
Gate pauli_exp(double angle, std::vector<PauliAxis> axes);

/// Immutable once built; safe to share across threads.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

/// Dense amplitudes over 2^N basis states. Bit N-1-q of the basis index
/// carries qubit q, so qubit 0 is most significant and the basis index reads
/// directly as a Fock occupation number.
struct Statevector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static Statevector vacuum(int n_qubits);
  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

/// Applies one gate and returns the new state. The input is taken by value so
/// callers may move it in; the update happens in that uniquely-owned buffer.
Statevector apply_gate(Statevector state, const Gate& gate);

/// Left-fold of apply_gate over the circuit's gates.
Statevector run(const Circuit& circuit, Statevector initial);

struct GateCount {
  long long single_qubit = 0;
  long long cnot = 0;
};

/// RX/RY/RZ count one single-qubit gate each; CNOT counts one cnot; CRY
/// counts two single-qubit plus two cnot (the standard two-CNOT controlled
/// rotation decomposition). PAULI_EXP is not part of the counted gate set.
GateCount gate_count(const Circuit& circuit);

}  // namespace coherentsim
