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

#include "coherentsim/vqa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coherentsim/displacement.hpp"
#include "coherentsim/optimize.hpp"
#include "coherentsim/parallel.hpp"

namespace coherentsim {

namespace {

constexpr double kGradientStep = 1e-6;

void validate_spec(const AnsatzSpec& spec) {
  if (spec.n_qubits < 1) {
    throw std::invalid_argument("vqa: n_qubits must be at least 1");
  }
  if (spec.layers < 1) {
    throw std::invalid_argument("vqa: layers must be at least 1");
  }
  if (spec.scheme == Scheme::A && spec.n_qubits < 2) {
    throw std::invalid_argument(
        "vqa: scheme A's entangling ring needs at least 2 qubits");
  }
}

}  // namespace

char scheme_char(Scheme scheme) {
  switch (scheme) {
    case Scheme::A: return 'a';
    case Scheme::B: return 'b';
    case Scheme::C: return 'c';
  }
  return '?';
}

Scheme scheme_from_char(char c) {
  switch (c) {
    case 'a': case 'A': return Scheme::A;
    case 'b': case 'B': return Scheme::B;
    case 'c': case 'C': return Scheme::C;
    default:
      throw std::invalid_argument(std::string("unknown scheme '") + c + "'");
  }
}

int param_count(const AnsatzSpec& spec) {
  validate_spec(spec);
  const int n = spec.n_qubits;
  const int m = spec.layers;
  switch (spec.scheme) {
    case Scheme::A: return 4 * n * m;
    case Scheme::B: return (3 + m) * n;
    case Scheme::C: return 5 * (n - 1) * m;
  }
  return 0;
}

Circuit build_ansatz(const AnsatzSpec& spec,
                     const std::vector<double>& params) {
  const int expected = param_count(spec);
  if (static_cast<int>(params.size()) != expected) {
    throw std::domain_error("build_ansatz: expected " +
                            std::to_string(expected) + " parameters, got " +
                            std::to_string(params.size()));
  }

  const int n = spec.n_qubits;
  Circuit circuit;
  circuit.n_qubits = n;
  std::size_t p = 0;
  auto next = [&params, &p] { return params[p++]; };

  switch (spec.scheme) {
    case Scheme::A:
      for (int layer = 0; layer < spec.layers; ++layer) {
        for (int q = 0; q < n; ++q) {
          circuit.gates.push_back(rx(q, next()));
          circuit.gates.push_back(rz(q, next()));
          circuit.gates.push_back(rx(q, next()));
        }
        for (int q = 0; q + 1 < n; ++q) {
          circuit.gates.push_back(cry(q, q + 1, next()));
        }
        circuit.gates.push_back(cry(n - 1, 0, next()));
      }
      break;
    case Scheme::B:
      for (int q = 0; q < n; ++q) {
        circuit.gates.push_back(rx(q, next()));
        circuit.gates.push_back(rz(q, next()));
        circuit.gates.push_back(rx(q, next()));
      }
      for (int layer = 0; layer < spec.layers; ++layer) {
        for (int q = 0; q + 1 < n; ++q) {
          circuit.gates.push_back(cnot(q, q + 1));
        }
        for (int q = 0; q < n; ++q) {
          circuit.gates.push_back(ry(q, next()));
        }
      }
      break;
    case Scheme::C:
      for (int layer = 0; layer < spec.layers; ++layer) {
        for (int q = 0; q + 1 < n; ++q) {
          circuit.gates.push_back(rz(q, next()));
          circuit.gates.push_back(rx(q, next()));
          circuit.gates.push_back(rz(q + 1, next()));
          circuit.gates.push_back(rx(q + 1, next()));
          circuit.gates.push_back(cnot(q, q + 1));
          circuit.gates.push_back(rz(q + 1, next()));
          circuit.gates.push_back(cnot(q, q + 1));
        }
      }
      break;
  }
  return circuit;
}

double cost(const AnsatzSpec& spec, const std::vector<double>& params,
            const CoherentTarget& target) {
  const Statevector final_state =
      run(build_ansatz(spec, params), Statevector::vacuum(spec.n_qubits));
  return std::clamp(1.0 - fidelity(final_state, target), 0.0, 1.0);
}

std::vector<double> gradient(const AnsatzSpec& spec,
                             const std::vector<double>& params,
                             const CoherentTarget& target) {
  std::vector<double> grad(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    std::vector<double> shifted = params;
    shifted[i] = params[i] + kGradientStep;
    const double plus = cost(spec, shifted, target);
    shifted[i] = params[i] - kGradientStep;
    const double minus = cost(spec, shifted, target);
    grad[i] = (plus - minus) / (2.0 * kGradientStep);
  });
  return grad;
}

OptimizationReport train(const AnsatzSpec& spec, const CoherentTarget& target,
                         const TrainConfig& config) {
  const int n_params = param_count(spec);
  std::vector<double> initial = config.initial_params;
  if (initial.empty()) {
    initial.assign(static_cast<std::size_t>(n_params), 1.0);
  } else if (static_cast<int>(initial.size()) != n_params) {
    throw std::domain_error("train: initial_params length mismatch");
  }

  OptimizationReport report;
  if (n_params == 0) {
    // Parameter-free circuit (e.g. scheme C on one qubit): nothing to train.
    const double c = cost(spec, initial, target);
    report.cost_trace.push_back(c);
    report.final_fidelity = 1.0 - c;
    report.converged = c < config.cost_tolerance;
    return report;
  }

  OptimizeConfig opt;
  opt.max_iterations = config.max_iterations;
  opt.cost_tolerance = config.cost_tolerance;
  const OptimizeResult result = minimize_bfgs(
      [&](const std::vector<double>& x) { return cost(spec, x, target); },
      [&](const std::vector<double>& x) { return gradient(spec, x, target); },
      std::move(initial), opt);

  report.iterations = result.iterations;
  report.cost_trace = result.cost_trace;
  report.final_fidelity = 1.0 - result.cost;
  report.final_params = result.params;
  report.converged = result.converged;
  return report;
}

std::vector<LayerSweepRow> layer_sweep(Scheme scheme, int n_qubits,
                                       const CoherentTarget& target,
                                       const std::vector<int>& layer_values,
                                       const TrainConfig& config) {
  if (layer_values.empty()) {
    throw std::invalid_argument("layer_sweep: layer_values must be nonempty");
  }
  std::vector<LayerSweepRow> rows(layer_values.size());
  parallel_for(layer_values.size(), [&](std::size_t i) {
    const AnsatzSpec spec{scheme, n_qubits, layer_values[i]};
    const OptimizationReport report = train(spec, target, config);
    rows[i] = LayerSweepRow{layer_values[i], report.final_fidelity,
                            report.iterations};
  });
  return rows;
}

ResourceReport resource_report(const AnsatzSpec& spec) {
  const long long n = spec.n_qubits;
  const long long m = spec.layers;
  ResourceReport report;
  report.params = param_count(spec);
  switch (spec.scheme) {
    case Scheme::A:
      report.single_qubit = 5 * n * m;
      report.cnot = 2 * n * m;
      break;
    case Scheme::B:
      report.single_qubit = (3 + m) * n;
      report.cnot = (n - 1) * m;
      break;
    case Scheme::C:
      report.single_qubit = 5 * (n - 1) * m;
      report.cnot = 2 * (n - 1) * m;
      break;
  }
  return report;
}

}  // namespace coherentsim
