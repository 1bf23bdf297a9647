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
#include <vector>

#include "coherentsim/circuit.hpp"
#include "coherentsim/fock.hpp"

namespace coherentsim {

/// Trotterized displacement D(alpha) = exp(alpha a^dag - alpha* a) on an
/// N-qubit Fock register, split into trotter_steps first-order steps.
struct DisplacementPlan {
  std::complex<double> alpha;
  FockDim dim;
  int trotter_steps = 1;
};

/// One first-order step factors as exp(-i a Z1 / M) exp(-i b Z2 / M) for
/// alpha = a + ib, with each factor expanded string-by-string into PAULI_EXP
/// gates in ladder_strings order. The real-part block precedes the
/// imaginary-part block within every step.
Circuit build_displacement_circuit(const DisplacementPlan& plan);

/// run(build_displacement_circuit(plan), vacuum).
Statevector prepare(const DisplacementPlan& plan);

/// Fidelity |<psi_f|psi_tar>|^2 where psi_tar is the coherent state over the
/// full, untruncated Fock ladder. A register state overlaps only the first
/// 2^N target amplitudes, so this equals the unit-norm truncated-target
/// overlap scaled by Gamma(2^N, |alpha|^2) / Gamma(2^N), the Poisson mass
/// that fits in the register. The scale is exactly 1 at alpha = 0 and decays
/// as |alpha|^2 approaches the cutoff.
double fidelity(const Statevector& state, const CoherentTarget& target);

struct SweepRow {
  int m = 0;
  double fidelity = 0.0;
};

/// Fidelity of the prepared state against the coherent-state target for each
/// requested Trotter step count. Rows are independent and may be computed in
/// parallel; output order follows m_values.
std::vector<SweepRow> trotter_sweep(std::complex<double> alpha,
                                    const FockDim& dim,
                                    const std::vector<int>& m_values);

/// |amplitude_n|^2 indexed by Fock number n.
std::vector<double> fock_distribution(const Statevector& state);

}  // namespace coherentsim
