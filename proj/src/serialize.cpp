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

#include "coherentsim/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "coherentsim/fock.hpp"

namespace coherentsim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cnot";
    case GateKind::CRY: return "cry";
    case GateKind::PauliExp: return "pauli_exp";
  }
  return "?";
}

}  // namespace

std::string format_csv_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, 15);
  if (ec != std::errc{}) throw std::runtime_error("format_csv_double failed");
  return std::string(buffer, ptr);
}

std::string decomposition_json(const PauliDecomposition& decomp) {
  ordered_json doc;
  doc["n_qubits"] = decomp.n_qubits;
  doc["terms"] = ordered_json::array();
  for (const PauliTerm& term : decomp.terms) {
    ordered_json entry;
    entry["axes"] = term.axes_string();
    entry["coeff"] = term.coefficient;
    doc["terms"].push_back(std::move(entry));
  }
  return dump(doc);
}

std::string circuit_json(const Circuit& circuit) {
  ordered_json doc;
  doc["n_qubits"] = circuit.n_qubits;
  doc["gates"] = ordered_json::array();
  for (const Gate& gate : circuit.gates) {
    ordered_json entry;
    entry["kind"] = gate_kind_name(gate.kind);
    switch (gate.kind) {
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        entry["target"] = gate.target;
        entry["angle"] = gate.angle;
        break;
      case GateKind::CNOT:
        entry["control"] = gate.control;
        entry["target"] = gate.target;
        break;
      case GateKind::CRY:
        entry["control"] = gate.control;
        entry["target"] = gate.target;
        entry["angle"] = gate.angle;
        break;
      case GateKind::PauliExp: {
        std::string axes;
        axes.reserve(gate.pauli.size());
        for (PauliAxis a : gate.pauli) axes.push_back(axis_char(a));
        entry["axes"] = axes;
        entry["angle"] = gate.angle;
        break;
      }
    }
    doc["gates"].push_back(std::move(entry));
  }
  return dump(doc);
}

std::string prepare_json(std::complex<double> alpha, int n_qubits,
                         int trotter_steps, double fidelity,
                         const Statevector& state) {
  ordered_json doc;
  doc["alpha"] = {{"re", alpha.real()}, {"im", alpha.imag()}};
  doc["n_qubits"] = n_qubits;
  doc["trotter_steps"] = trotter_steps;
  doc["fidelity"] = fidelity;
  doc["amplitudes"] = ordered_json::array();
  for (const std::complex<double>& amp : state.amplitudes) {
    doc["amplitudes"].push_back({amp.real(), amp.imag()});
  }
  return dump(doc);
}

std::string train_json(const AnsatzSpec& spec,
                       const OptimizationReport& report) {
  ordered_json doc;
  doc["scheme"] = std::string(1, scheme_char(spec.scheme));
  doc["n_qubits"] = spec.n_qubits;
  doc["layers"] = spec.layers;
  doc["iterations"] = report.iterations;
  doc["final_fidelity"] = report.final_fidelity;
  doc["converged"] = report.converged;
  doc["cost_trace"] = report.cost_trace;
  return dump(doc);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "m,fidelity\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.m);
    out += ',';
    out += format_csv_double(row.fidelity);
    out += '\n';
  }
  return out;
}

std::string dist_csv(const std::vector<double>& probabilities,
                     std::complex<double> alpha, const FockDim& dim) {
  if (probabilities.size() != dim.dim) {
    throw std::invalid_argument("dist_csv: probability vector length differs "
                                "from the Fock dimension");
  }
  std::string out = "fock_number,probability,poisson_reference\n";
  for (std::size_t n = 0; n < probabilities.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_csv_double(probabilities[n]);
    out += ',';
    out += format_csv_double(truncated_prob(static_cast<int>(n), alpha, dim));
    out += '\n';
  }
  return out;
}

std::string layers_csv(const std::vector<LayerSweepRow>& rows) {
  std::string out = "layers,fidelity,iterations\n";
  for (const LayerSweepRow& row : rows) {
    out += std::to_string(row.layers);
    out += ',';
    out += format_csv_double(row.fidelity);
    out += ',';
    out += std::to_string(row.iterations);
    out += '\n';
  }
  return out;
}

std::string gatecount_csv(const std::vector<GateCountRow>& rows) {
  std::string out = "scheme,qubits,layers,params,single_qubit,cnot\n";
  for (const GateCountRow& row : rows) {
    out += scheme_char(row.scheme);
    out += ',';
    out += std::to_string(row.qubits);
    out += ',';
    out += std::to_string(row.layers);
    out += ',';
    out += std::to_string(row.report.params);
    out += ',';
    out += std::to_string(row.report.single_qubit);
    out += ',';
    out += std::to_string(row.report.cnot);
    out += '\n';
  }
  return out;
}

}  // namespace coherentsim
