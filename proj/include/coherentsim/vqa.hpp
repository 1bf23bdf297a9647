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

#include <vector>

#include "coherentsim/circuit.hpp"
#include "coherentsim/fock.hpp"

namespace coherentsim {

/// A: layered hardware-efficient ansatz, RX,RZ,RX per qubit then a ring of
///    controlled-RY gates, all angles free (4N parameters per layer).
/// B: one fixed RX,RZ,RX column, then layers of [CNOT chain + RY per qubit]
///    ((3+M_l)N parameters total).
/// C: checkerboard of 5-parameter two-qubit blocks on neighboring pairs
///    (5(N-1) parameters per layer).
enum class Scheme { A, B, C };

char scheme_char(Scheme scheme);
Scheme scheme_from_char(char c);

struct AnsatzSpec {
  Scheme scheme = Scheme::A;
  int n_qubits = 0;
  int layers = 0;
};

int param_count(const AnsatzSpec& spec);

Circuit build_ansatz(const AnsatzSpec& spec, const std::vector<double>& params);

/// 1 - fidelity(run(build_ansatz(spec, params), vacuum), target), clamped
/// into [0,1] against roundoff.
double cost(const AnsatzSpec& spec, const std::vector<double>& params,
            const CoherentTarget& target);

/// Central finite differences with step 1e-6 per coordinate. Coordinates are
/// evaluated independently (possibly in parallel) into fixed slots.
std::vector<double> gradient(const AnsatzSpec& spec,
                             const std::vector<double>& params,
                             const CoherentTarget& target);

struct TrainConfig {
  int max_iterations = 10000;
  double cost_tolerance = 1e-5;
  std::vector<double> initial_params;  // empty selects the all-ones start
};

struct OptimizationReport {
  int iterations = 0;
  std::vector<double> cost_trace;  // initial cost, then one entry per step
  double final_fidelity = 0.0;
  std::vector<double> final_params;
  bool converged = false;
};

/// Deterministic quasi-Newton minimization of the cost from the configured
/// start. Non-convergence is reported, not thrown.
OptimizationReport train(const AnsatzSpec& spec, const CoherentTarget& target,
                         const TrainConfig& config = {});

struct LayerSweepRow {
  int layers = 0;
  double fidelity = 0.0;
  int iterations = 0;
};

/// Independent train runs per layer count, identical configuration, rows in
/// layer_values order.
std::vector<LayerSweepRow> layer_sweep(Scheme scheme, int n_qubits,
                                       const CoherentTarget& target,
                                       const std::vector<int>& layer_values,
                                       const TrainConfig& config = {});

struct ResourceReport {
  long long params = 0;
  long long single_qubit = 0;
  long long cnot = 0;
};

/// Closed-form counts; equal to gate_count(build_ansatz(spec, ...)) by
/// construction: A -> (5N M_l, 2N M_l), B -> ((3+M_l)N, (N-1)M_l),
/// C -> (5(N-1)M_l, 2(N-1)M_l).
ResourceReport resource_report(const AnsatzSpec& spec);

}  // namespace coherentsim
