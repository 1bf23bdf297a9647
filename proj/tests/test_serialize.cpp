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

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "coherentsim/serialize.hpp"
#include "coherentsim/svg.hpp"

using namespace coherentsim;
using cd = std::complex<double>;

TEST_SUITE("serialize") {

TEST_CASE("CSV doubles use 15 significant digits and '.' decimals") {
  CHECK(format_csv_double(1.0) == "1");
  CHECK(format_csv_double(0.5) == "0.5");
  CHECK(format_csv_double(-2.0) == "-2");
  CHECK(format_csv_double(0.9986) == "0.9986");
  CHECK(format_csv_double(1.0 / 3.0) == "0.333333333333333");

  // The fixed precision is lossy in the last couple of bits but must stay
  // within 15 significant digits of the value.
  for (double value : {0.1 + 0.2, 123456.789012345, 9.87654321e-13,
                       -3.14159265358979, 1e17}) {
    const std::string text = format_csv_double(value);
    double back = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), back);
    REQUIRE(ec == std::errc{});
    REQUIRE(ptr == text.data() + text.size());
    CHECK(std::abs(back - value) <= 1e-14 * std::abs(value));
    CHECK(text.find(',') == std::string::npos);
  }
}

TEST_CASE("decomposition JSON golden") {
  const std::string text = decomposition_json(ladder_strings(1, 1));
  const std::string expected =
      "{\n"
      "  \"n_qubits\": 1,\n"
      "  \"terms\": [\n"
      "    {\n"
      "      \"axes\": \"Y\",\n"
      "      \"coeff\": 1.0\n"
      "    }\n"
      "  ]\n"
      "}\n";
  CHECK(text == expected);
}

TEST_CASE("circuit JSON carries per-kind fields") {
  Circuit circuit;
  circuit.n_qubits = 2;
  circuit.gates = {rx(0, 0.5), cnot(0, 1), cry(1, 0, 0.25),
                   pauli_exp(0.125, {PauliAxis::X, PauliAxis::Y})};
  const std::string text = circuit_json(circuit);
  const nlohmann::json doc = nlohmann::json::parse(text);

  CHECK(doc["n_qubits"] == 2);
  REQUIRE(doc["gates"].size() == 4);
  CHECK(doc["gates"][0]["kind"] == "rx");
  CHECK(doc["gates"][0]["target"] == 0);
  CHECK(doc["gates"][0]["angle"] == 0.5);
  CHECK(!doc["gates"][0].contains("control"));
  CHECK(doc["gates"][1]["kind"] == "cnot");
  CHECK(doc["gates"][1]["control"] == 0);
  CHECK(doc["gates"][1]["target"] == 1);
  CHECK(!doc["gates"][1].contains("angle"));
  CHECK(doc["gates"][2]["kind"] == "cry");
  CHECK(doc["gates"][2]["control"] == 1);
  CHECK(doc["gates"][2]["target"] == 0);
  CHECK(doc["gates"][2]["angle"] == 0.25);
  CHECK(doc["gates"][3]["kind"] == "pauli_exp");
  CHECK(doc["gates"][3]["axes"] == "XY");
  CHECK(doc["gates"][3]["angle"] == 0.125);
}

TEST_CASE("prepare JSON carries alpha, fidelity and amplitude pairs") {
  const Statevector state = Statevector::vacuum(1);
  const std::string text = prepare_json(cd(1.0, -0.5), 1, 7, 0.75, state);
  const nlohmann::json doc = nlohmann::json::parse(text);

  CHECK(doc["alpha"]["re"] == 1.0);
  CHECK(doc["alpha"]["im"] == -0.5);
  CHECK(doc["n_qubits"] == 1);
  CHECK(doc["trotter_steps"] == 7);
  CHECK(doc["fidelity"] == 0.75);
  REQUIRE(doc["amplitudes"].size() == 2);
  CHECK(doc["amplitudes"][0][0] == 1.0);
  CHECK(doc["amplitudes"][0][1] == 0.0);
  CHECK(doc["amplitudes"][1][0] == 0.0);
  CHECK(text.back() == '\n');
}

TEST_CASE("train JSON mirrors the optimization report") {
  OptimizationReport report;
  report.iterations = 2;
  report.cost_trace = {0.5, 0.25, 0.1};
  report.final_fidelity = 0.9;
  report.converged = false;
  const std::string text = train_json({Scheme::B, 3, 4}, report);
  const nlohmann::json doc = nlohmann::json::parse(text);

  CHECK(doc["scheme"] == "b");
  CHECK(doc["n_qubits"] == 3);
  CHECK(doc["layers"] == 4);
  CHECK(doc["iterations"] == 2);
  CHECK(doc["final_fidelity"] == 0.9);
  CHECK(doc["converged"] == false);
  CHECK(doc["cost_trace"] == nlohmann::json({0.5, 0.25, 0.1}));
}

TEST_CASE("sweep CSV golden") {
  const std::vector<SweepRow> rows = {{5, 0.5}, {10, 1.0}};
  CHECK(sweep_csv(rows) == "m,fidelity\n5,0.5\n10,1\n");
}

TEST_CASE("dist CSV golden and validation") {
  const FockDim dim(1);
  const std::vector<double> probs = {1.0, 0.0};
  CHECK(dist_csv(probs, cd(0, 0), dim) ==
        "fock_number,probability,poisson_reference\n"
        "0,1,1\n"
        "1,0,0\n");
  CHECK_THROWS_AS(dist_csv({1.0, 0.0, 0.0}, cd(0, 0), dim),
                  std::invalid_argument);
}

TEST_CASE("layers CSV golden") {
  const std::vector<LayerSweepRow> rows = {{1, 0.25, 7}, {2, 0.5, 12}};
  CHECK(layers_csv(rows) ==
        "layers,fidelity,iterations\n"
        "1,0.25,7\n"
        "2,0.5,12\n");
}

TEST_CASE("gatecount CSV golden") {
  const AnsatzSpec spec{Scheme::B, 4, 6};
  const std::vector<GateCountRow> rows = {{Scheme::B, 4, 6,
                                           resource_report(spec)}};
  CHECK(gatecount_csv(rows) ==
        "scheme,qubits,layers,params,single_qubit,cnot\n"
        "b,4,6,36,36,18\n");
}

TEST_CASE("emitters are deterministic") {
  const PauliDecomposition decomp = ladder_strings(2, 3);
  CHECK(decomposition_json(decomp) == decomposition_json(decomp));

  const std::vector<SweepRow> rows = {{5, 0.123456789012345}};
  CHECK(sweep_csv(rows) == sweep_csv(rows));
}

TEST_CASE("charts are valid SVG without timestamps") {
  ChartSeries series;
  series.label = "fidelity";
  series.points = {{6.0, 0.95}, {18.0, 0.9991}, {30.0, 0.99997}};
  const std::string svg = line_chart_svg("Trotter sweep", "M", "F",
                                         {series});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("Trotter sweep") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("date") == std::string::npos);
  CHECK(svg == line_chart_svg("Trotter sweep", "M", "F", {series}));

  const std::vector<double> heights = {0.1, 0.4, 0.3, 0.2};
  const std::vector<double> reference = {0.12, 0.38, 0.31, 0.19};
  const std::string bars =
      bar_chart_svg("Fock distribution", "n", "p", heights, reference);
  CHECK(bars.rfind("<svg", 0) == 0);
  CHECK(bars.find("<rect") != std::string::npos);
  CHECK(bars == bar_chart_svg("Fock distribution", "n", "p", heights,
                              reference));
}

TEST_CASE("chart text is XML-escaped") {
  ChartSeries series;
  series.label = "a<b&c";
  series.points = {{0.0, 0.0}, {1.0, 1.0}};
  const std::string svg = line_chart_svg("x<y>&\"z\"", "t", "v", {series});
  CHECK(svg.find("x<y") == std::string::npos);
  CHECK(svg.find("&lt;") != std::string::npos);
  CHECK(svg.find("&amp;") != std::string::npos);
}

}  // TEST_SUITE
