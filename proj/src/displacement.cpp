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

#include "coherentsim/displacement.hpp"

#include <cmath>
#include <stdexcept>

#include "coherentsim/parallel.hpp"
#include "coherentsim/pauli.hpp"

namespace coherentsim {

namespace {

void validate(const DisplacementPlan& plan) {
  if (plan.trotter_steps < 1) {
    throw std::invalid_argument(
        "displacement: trotter_steps must be at least 1");
  }
  if (!std::isfinite(plan.alpha.real()) || !std::isfinite(plan.alpha.imag())) {
    throw std::domain_error("displacement: alpha must be finite");
  }
}

}  // namespace

Circuit build_displacement_circuit(const DisplacementPlan& plan) {
  validate(plan);
  const int n = plan.dim.n_qubits;
  const PauliDecomposition z1 = ladder_strings(1, n);
  const PauliDecomposition z2 = ladder_strings(2, n);
  const double a = plan.alpha.real();
  const double b = plan.alpha.imag();
  const double inv_m = 1.0 / static_cast<double>(plan.trotter_steps);

  Circuit circuit;
  circuit.n_qubits = n;
  circuit.gates.reserve(static_cast<std::size_t>(plan.trotter_steps) *
                        (z1.terms.size() + z2.terms.size()));
  for (int step = 0; step < plan.trotter_steps; ++step) {
    for (const PauliTerm& term : z1.terms) {
      circuit.gates.push_back(pauli_exp(a * term.coefficient * inv_m,
                                        term.axes));
    }
    for (const PauliTerm& term : z2.terms) {
      circuit.gates.push_back(pauli_exp(b * term.coefficient * inv_m,
                                        term.axes));
    }
  }
  return circuit;
}

Statevector prepare(const DisplacementPlan& plan) {
  return run(build_displacement_circuit(plan),
             Statevector::vacuum(plan.dim.n_qubits));
}

double fidelity(const Statevector& state, const CoherentTarget& target) {
  if (state.dim() != target.amplitudes.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t k = 0; k < state.dim(); ++k) {
    overlap += std::conj(state.amplitudes[k]) * target.amplitudes[k];
  }
  // The target of record is the coherent state over the full Fock ladder; a
  // register state only reaches its first 2^N amplitudes, so the unit-norm
  // truncated overlap is scaled back by the in-register Poisson mass
  // Gamma(2^N, |alpha|^2) / Gamma(2^N).
  const double weight = regularized_upper_gamma(
      static_cast<int>(target.dim.dim), std::norm(target.alpha));
  return weight * std::norm(overlap);
}

std::vector<SweepRow> trotter_sweep(std::complex<double> alpha,
                                    const FockDim& dim,
                                    const std::vector<int>& m_values) {
  if (m_values.empty()) {
    throw std::invalid_argument("trotter_sweep: m_values must be nonempty");
  }
  for (int m : m_values) {
    if (m < 1) {
      throw std::invalid_argument(
          "trotter_sweep: every step count must be at least 1");
    }
  }
  const CoherentTarget target = coherent_target(alpha, dim);
  std::vector<SweepRow> rows(m_values.size());
  parallel_for(m_values.size(), [&](std::size_t i) {
    const DisplacementPlan plan{alpha, dim, m_values[i]};
    rows[i] = SweepRow{m_values[i], fidelity(prepare(plan), target)};
  });
  return rows;
}

std::vector<double> fock_distribution(const Statevector& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t n = 0; n < state.dim(); ++n) {
    probs[n] = std::norm(state.amplitudes[n]);
  }
  return probs;
}

}  // namespace coherentsim
