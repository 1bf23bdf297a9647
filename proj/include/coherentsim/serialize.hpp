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
#include <string>
#include <vector>

#include "coherentsim/circuit.hpp"
#include "coherentsim/displacement.hpp"
#include "coherentsim/pauli.hpp"
#include "coherentsim/vqa.hpp"

namespace coherentsim {

/// All emitters are deterministic: identical inputs yield byte-identical
/// strings. CSV cells use '.' decimals and 15 significant digits; JSON uses
/// the shortest round-trip double form. Files end with a trailing newline.

/// 15-significant-digit, locale-independent decimal form for CSV cells.
std::string format_csv_double(double value);

std::string decomposition_json(const PauliDecomposition& decomp);

std::string circuit_json(const Circuit& circuit);

std::string prepare_json(std::complex<double> alpha, int n_qubits,
                         int trotter_steps, double fidelity,
                         const Statevector& state);

std::string train_json(const AnsatzSpec& spec,
                       const OptimizationReport& report);

// CSV schemas, one header line each:
//   sweep:     m,fidelity
//   dist:      fock_number,probability,poisson_reference
//   layers:    layers,fidelity,iterations
//   gatecount: scheme,qubits,layers,params,single_qubit,cnot
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string dist_csv(const std::vector<double>& probabilities,
                     std::complex<double> alpha, const FockDim& dim);

std::string layers_csv(const std::vector<LayerSweepRow>& rows);

struct GateCountRow {
  Scheme scheme = Scheme::A;
  int qubits = 0;
  int layers = 0;
  ResourceReport report;
};

std::string gatecount_csv(const std::vector<GateCountRow>& rows);

}  // namespace coherentsim
