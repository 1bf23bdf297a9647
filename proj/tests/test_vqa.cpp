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

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "coherentsim/displacement.hpp"
#include "coherentsim/vqa.hpp"

using namespace coherentsim;
using cd = std::complex<double>;

TEST_SUITE("vqa") {

TEST_CASE("scheme letters round-trip") {
  for (Scheme s : {Scheme::A, Scheme::B, Scheme::C}) {
    CHECK(scheme_from_char(scheme_char(s)) == s);
  }
  CHECK(scheme_from_char('B') == Scheme::B);
  CHECK_THROWS_AS(scheme_from_char('x'), std::invalid_argument);
}

TEST_CASE("parameter counts follow the closed forms") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m <= 6; ++m) {
      CHECK(param_count({Scheme::A, n, m}) == 4 * n * m);
      CHECK(param_count({Scheme::B, n, m}) == (3 + m) * n);
      CHECK(param_count({Scheme::C, n, m}) == 5 * (n - 1) * m);
    }
  }
  CHECK(param_count({Scheme::B, 1, 3}) == 6);
  CHECK(param_count({Scheme::C, 1, 3}) == 0);
  CHECK_THROWS_AS(param_count({Scheme::A, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(param_count({Scheme::B, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(param_count({Scheme::B, 2, 0}), std::invalid_argument);
}

TEST_CASE("scheme A layers rotations then a controlled-RY ring") {
  const AnsatzSpec spec{Scheme::A, 2, 1};
  std::vector<double> params(8);
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] = 0.1 * static_cast<double>(i + 1);
  }
  const Circuit circuit = build_ansatz(spec, params);
  REQUIRE(circuit.gates.size() == 8);

  const std::vector<GateKind> kinds = {GateKind::RX, GateKind::RZ, GateKind::RX,
                                       GateKind::RX, GateKind::RZ, GateKind::RX,
                                       GateKind::CRY, GateKind::CRY};
  const std::vector<int> targets = {0, 0, 0, 1, 1, 1, 1, 0};
  for (std::size_t g = 0; g < 8; ++g) {
    CHECK(circuit.gates[g].kind == kinds[g]);
    CHECK(circuit.gates[g].target == targets[g]);
    CHECK(circuit.gates[g].angle == params[g]);
  }
  CHECK(circuit.gates[6].control == 0);
  CHECK(circuit.gates[7].control == 1);
}

TEST_CASE("scheme B fixes one rotation column and layers CNOT chains") {
  const AnsatzSpec spec{Scheme::B, 3, 2};
  const std::vector<double> params(15, 0.25);
  const Circuit circuit = build_ansatz(spec, params);
  REQUIRE(circuit.gates.size() == 19);

  for (int g = 0; g < 9; ++g) {
    const GateKind expected =
        (g % 3 == 1) ? GateKind::RZ : GateKind::RX;
    CHECK(circuit.gates[static_cast<std::size_t>(g)].kind == expected);
    CHECK(circuit.gates[static_cast<std::size_t>(g)].target == g / 3);
  }
  for (int layer = 0; layer < 2; ++layer) {
    const std::size_t base = 9 + static_cast<std::size_t>(layer) * 5;
    CHECK(circuit.gates[base].kind == GateKind::CNOT);
    CHECK(circuit.gates[base].control == 0);
    CHECK(circuit.gates[base].target == 1);
    CHECK(circuit.gates[base + 1].kind == GateKind::CNOT);
    CHECK(circuit.gates[base + 1].control == 1);
    CHECK(circuit.gates[base + 1].target == 2);
    for (int q = 0; q < 3; ++q) {
      CHECK(circuit.gates[base + 2 + static_cast<std::size_t>(q)].kind ==
            GateKind::RY);
      CHECK(circuit.gates[base + 2 + static_cast<std::size_t>(q)].target == q);
    }
  }

  // A single qubit has no chain at all.
  const Circuit lone =
      build_ansatz({Scheme::B, 1, 3}, std::vector<double>(6, 0.0));
  CHECK(lone.gates.size() == 6);
  for (const Gate& gate : lone.gates) CHECK(gate.kind != GateKind::CNOT);
}

TEST_CASE("scheme C tiles five-parameter two-qubit blocks") {
  const AnsatzSpec spec{Scheme::C, 4, 1};
  CHECK(param_count(spec) == 15);
  const std::vector<double> params(15, 0.5);
  const Circuit circuit = build_ansatz(spec, params);
  REQUIRE(circuit.gates.size() == 21);

  for (int pair = 0; pair < 3; ++pair) {
    const std::size_t base = static_cast<std::size_t>(pair) * 7;
    CHECK(circuit.gates[base].kind == GateKind::RZ);
    CHECK(circuit.gates[base].target == pair);
    CHECK(circuit.gates[base + 1].kind == GateKind::RX);
    CHECK(circuit.gates[base + 1].target == pair);
    CHECK(circuit.gates[base + 2].kind == GateKind::RZ);
    CHECK(circuit.gates[base + 2].target == pair + 1);
    CHECK(circuit.gates[base + 3].kind == GateKind::RX);
    CHECK(circuit.gates[base + 3].target == pair + 1);
    CHECK(circuit.gates[base + 4].kind == GateKind::CNOT);
    CHECK(circuit.gates[base + 5].kind == GateKind::RZ);
    CHECK(circuit.gates[base + 5].target == pair + 1);
    CHECK(circuit.gates[base + 6].kind == GateKind::CNOT);
  }

  // No neighboring pair exists on one qubit; the circuit is empty.
  const Circuit empty = build_ansatz({Scheme::C, 1, 2}, {});
  CHECK(empty.gates.empty());
}

TEST_CASE("build_ansatz rejects a wrong parameter count") {
  CHECK_THROWS_AS(build_ansatz({Scheme::A, 2, 1}, std::vector<double>(7, 0.0)),
                  std::domain_error);
}

TEST_CASE("closed-form resources equal the structural count") {
  for (Scheme scheme : {Scheme::A, Scheme::B, Scheme::C}) {
    for (int n = 2; n <= 5; ++n) {
      for (int m = 1; m <= 6; ++m) {
        const AnsatzSpec spec{scheme, n, m};
        const ResourceReport report = resource_report(spec);
        const std::vector<double> params(
            static_cast<std::size_t>(param_count(spec)), 0.3);
        const GateCount counted = gate_count(build_ansatz(spec, params));
        CAPTURE(scheme_char(scheme));
        CAPTURE(n);
        CAPTURE(m);
        CHECK(report.single_qubit == counted.single_qubit);
        CHECK(report.cnot == counted.cnot);
        CHECK(report.params == param_count(spec));
      }
    }
  }
}

TEST_CASE("zero angles leave the vacuum, so cost is one minus the base weight") {
  const FockDim dim(3);
  const CoherentTarget target = coherent_target(cd(1, 1), dim);
  const AnsatzSpec spec{Scheme::A, 3, 1};
  const std::vector<double> zeros(static_cast<std::size_t>(param_count(spec)),
                                  0.0);
  const double expected = 1.0 - poisson_prob(0, cd(1, 1));
  CHECK(cost(spec, zeros, target) == doctest::Approx(expected).epsilon(1e-12));

  const CoherentTarget vacuum_target = coherent_target(cd(0, 0), dim);
  CHECK(cost(spec, zeros, vacuum_target) == 0.0);
}

TEST_CASE("cost stays within the unit interval") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(1, 1), dim);
  const AnsatzSpec spec{Scheme::C, 2, 2};
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> params(static_cast<std::size_t>(param_count(spec)));
    for (double& p : params) p = dist(rng);
    const double c = cost(spec, params, target);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("a leading phase rotation on the vacuum has zero gradient") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(1, 1), dim);
  const AnsatzSpec spec{Scheme::C, 2, 1};
  const std::vector<double> params(5, 0.8);
  const std::vector<double> grad = gradient(spec, params, target);
  REQUIRE(grad.size() == 5);
  // Parameters 0 and 2 are RZ gates acting on a computational basis state;
  // they only move the global phase.
  CHECK(std::abs(grad[0]) < 1e-6);
  CHECK(std::abs(grad[2]) < 1e-6);
  CHECK(std::abs(grad[1]) > 1e-3);
}

TEST_CASE("two finite-difference step sizes agree") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(0.7, -0.2), dim);
  const AnsatzSpec spec{Scheme::B, 2, 1};
  std::vector<double> params(8);
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] = 0.3 + 0.2 * static_cast<double>(i);
  }

  const std::vector<double> fine = gradient(spec, params, target);
  const double coarse_h = 1e-4;
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::vector<double> shifted = params;
    shifted[i] = params[i] + coarse_h;
    const double plus = cost(spec, shifted, target);
    shifted[i] = params[i] - coarse_h;
    const double minus = cost(spec, shifted, target);
    const double coarse = (plus - minus) / (2.0 * coarse_h);
    CHECK(std::abs(fine[i] - coarse) < 1e-4);
  }
}

TEST_CASE("training against the vacuum converges tightly") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(0, 0), dim);
  const AnsatzSpec spec{Scheme::B, 2, 1};
  TrainConfig config;
  config.cost_tolerance = 1e-9;
  const OptimizationReport report = train(spec, target, config);

  CHECK(report.converged);
  CHECK(report.final_fidelity > 1.0 - 1e-9);
  REQUIRE(!report.cost_trace.empty());
  CHECK(report.cost_trace.front() ==
        cost(spec, std::vector<double>(8, 1.0), target));
  CHECK(report.final_fidelity ==
        doctest::Approx(1.0 - report.cost_trace.back()).epsilon(1e-12));
  CHECK(static_cast<int>(report.cost_trace.size()) == report.iterations + 1);

  const std::vector<double> grad = gradient(spec, report.final_params, target);
  double sup = 0.0;
  for (double g : grad) sup = std::max(sup, std::abs(g));
  CHECK(sup < 1e-3);
}

TEST_CASE("training twice gives bit-identical reports") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(0.5, 0.5), dim);
  const AnsatzSpec spec{Scheme::C, 2, 2};
  const OptimizationReport first = train(spec, target);
  const OptimizationReport second = train(spec, target);
  CHECK(first.final_fidelity == second.final_fidelity);
  CHECK(first.iterations == second.iterations);
  CHECK(first.final_params == second.final_params);
  CHECK(first.cost_trace == second.cost_trace);
}

TEST_CASE("a small realistic target is learned with defaults") {
  // Three qubits leave the truncation tail near 1e-9 for this alpha, far
  // below the fidelity threshold and the cost tolerance.
  const FockDim dim(3);
  const CoherentTarget target = coherent_target(cd(0.5, 0.5), dim);
  const OptimizationReport report = train({Scheme::B, 3, 3}, target);
  CHECK(report.converged);
  CHECK(report.final_fidelity > 0.9999);
}

TEST_CASE("train validates explicit starts and handles empty circuits") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(0.5, 0.0), dim);
  TrainConfig config;
  config.initial_params = {1.0, 2.0};
  CHECK_THROWS_AS(train({Scheme::B, 2, 1}, target, config), std::domain_error);

  // Scheme C on one qubit has zero parameters; training degenerates to a
  // single cost evaluation.
  const FockDim lone(1);
  const OptimizationReport report =
      train({Scheme::C, 1, 1}, coherent_target(cd(0, 0), lone));
  CHECK(report.converged);
  CHECK(report.final_fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(report.iterations == 0);
  REQUIRE(report.cost_trace.size() == 1);
}

TEST_CASE("layer sweep rows match independent runs in input order") {
  const FockDim dim(2);
  const CoherentTarget target = coherent_target(cd(0.5, 0.5), dim);
  const std::vector<int> layer_values = {3, 1, 2};
  const std::vector<LayerSweepRow> rows =
      layer_sweep(Scheme::C, 2, target, layer_values);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].layers == layer_values[i]);
    const OptimizationReport lone =
        train({Scheme::C, 2, layer_values[i]}, target);
    CHECK(rows[i].fidelity == lone.final_fidelity);
    CHECK(rows[i].iterations == lone.iterations);
  }
  CHECK_THROWS_AS(layer_sweep(Scheme::C, 2, target, {}),
                  std::invalid_argument);
}

}  // TEST_SUITE
