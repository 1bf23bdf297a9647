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

#include <complex>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coherentsim/displacement.hpp"
#include "coherentsim/fock.hpp"
#include "coherentsim/parse.hpp"
#include "coherentsim/pauli.hpp"
#include "coherentsim/serialize.hpp"
#include "coherentsim/svg.hpp"
#include "coherentsim/vqa.hpp"

namespace {

using namespace coherentsim;

constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\"");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

void warn_if_heavy(std::complex<double> alpha, const FockDim& dim) {
  if (heavy_truncation(alpha, dim)) {
    std::cerr << "warning: |alpha|^2 = " << std::norm(alpha)
              << " exceeds half the truncated dimension " << dim.dim
              << "; the target leaks past the cutoff\n";
  }
}

struct DecomposeOpts {
  int qubits = 1;
  std::string matrix = "z1";
  std::string out = "-";
};

struct PrepareOpts {
  std::string alpha;
  int qubits = 1;
  int steps = 1;
  std::string out = "-";
  std::string circuit_out;
};

struct SweepOpts {
  std::string alpha;
  int qubits = 1;
  std::string steps;
  std::string out = "-";
  std::string plot;
};

struct DistOpts {
  std::string alpha;
  int qubits = 1;
  int steps = 1;
  std::string out = "-";
  std::string plot;
};

struct TrainOpts {
  std::string alpha;
  int qubits = 1;
  std::string scheme = "a";
  int layers = 1;
  int max_iterations = 10000;
  double tolerance = 1e-5;
  bool require_converged = false;
  std::string out = "-";
};

struct LayersOpts {
  std::string alpha;
  int qubits = 1;
  std::string scheme = "a";
  std::string layers;
  int max_iterations = 10000;
  double tolerance = 1e-5;
  bool require_converged = false;
  std::string out = "-";
  std::string plot;
};

struct GateCountOpts {
  std::string scheme = "a";
  int qubits = 1;
  std::string layers;
  std::string out = "-";
  std::string plot;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent-state preparation on a qubit register: Trotterized "
               "displacement circuits and variational circuit learning"};
  app.require_subcommand(1);
  int exit_code = 0;

  DecomposeOpts dec;
  auto* cmd_dec = app.add_subcommand(
      "decompose", "Pauli-string decomposition of a quadrature matrix (JSON)");
  cmd_dec->add_option("--qubits", dec.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_dec->add_option("--matrix", dec.matrix, "Which quadrature: z1 or z2")
      ->required()
      ->check(CLI::IsMember({"z1", "z2"}));
  cmd_dec->add_option("-o,--out", dec.out, "Output path ('-' for stdout)");
  cmd_dec->callback([&] {
    const int k = dec.matrix == "z1" ? 1 : 2;
    write_output(dec.out, decomposition_json(ladder_strings(k, dec.qubits)));
  });

  PrepareOpts prep;
  auto* cmd_prep = app.add_subcommand(
      "prepare", "Run the Trotterized displacement circuit (JSON)");
  cmd_prep->add_option("--alpha", prep.alpha, "Displacement, e.g. 1+1i")
      ->required();
  cmd_prep->add_option("--qubits", prep.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_prep->add_option("--steps", prep.steps, "Trotter steps M")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_prep->add_option("-o,--out", prep.out, "Output path ('-' for stdout)");
  cmd_prep->add_option("--circuit", prep.circuit_out,
                       "Also dump the compiled circuit as JSON to this path");
  cmd_prep->callback([&] {
    const FockDim dim(prep.qubits);
    const std::complex<double> alpha = parse_alpha(prep.alpha);
    warn_if_heavy(alpha, dim);
    const DisplacementPlan plan{alpha, dim, prep.steps};
    const Statevector state = prepare(plan);
    const double f = fidelity(state, coherent_target(alpha, dim));
    write_output(prep.out,
                 prepare_json(alpha, prep.qubits, prep.steps, f, state));
    if (!prep.circuit_out.empty()) {
      write_output(prep.circuit_out,
                   circuit_json(build_displacement_circuit(plan)));
    }
  });

  SweepOpts sweep;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Fidelity vs Trotter step count (CSV)");
  cmd_sweep->add_option("--alpha", sweep.alpha, "Displacement, e.g. 1+1i")
      ->required();
  cmd_sweep->add_option("--qubits", sweep.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_sweep
      ->add_option("--steps", sweep.steps,
                   "Step counts: lo:hi, lo:hi:stride, or a single value")
      ->required();
  cmd_sweep->add_option("-o,--out", sweep.out, "Output path ('-' for stdout)");
  cmd_sweep->add_option("--plot", sweep.plot, "Also write an SVG line chart");
  cmd_sweep->callback([&] {
    const FockDim dim(sweep.qubits);
    const std::complex<double> alpha = parse_alpha(sweep.alpha);
    warn_if_heavy(alpha, dim);
    const std::vector<SweepRow> rows =
        trotter_sweep(alpha, dim, parse_int_range(sweep.steps));
    write_output(sweep.out, sweep_csv(rows));
    if (!sweep.plot.empty()) {
      ChartSeries series;
      series.label = "fidelity";
      for (const SweepRow& row : rows) {
        series.points.emplace_back(row.m, row.fidelity);
      }
      write_output(sweep.plot,
                   line_chart_svg("fidelity vs Trotter steps, alpha=" +
                                      sweep.alpha + ", N=" +
                                      std::to_string(sweep.qubits),
                                  "Trotter steps M", "fidelity", {series}));
    }
  });

  DistOpts dist;
  auto* cmd_dist = app.add_subcommand(
      "dist", "Fock distribution of the prepared state (CSV)");
  cmd_dist->add_option("--alpha", dist.alpha, "Displacement, e.g. 1+1i")
      ->required();
  cmd_dist->add_option("--qubits", dist.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_dist->add_option("--steps", dist.steps, "Trotter steps M")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_dist->add_option("-o,--out", dist.out, "Output path ('-' for stdout)");
  cmd_dist->add_option("--plot", dist.plot, "Also write an SVG bar chart");
  cmd_dist->callback([&] {
    const FockDim dim(dist.qubits);
    const std::complex<double> alpha = parse_alpha(dist.alpha);
    warn_if_heavy(alpha, dim);
    const std::vector<double> probs =
        fock_distribution(prepare(DisplacementPlan{alpha, dim, dist.steps}));
    write_output(dist.out, dist_csv(probs, alpha, dim));
    if (!dist.plot.empty()) {
      std::vector<double> reference(probs.size());
      for (std::size_t n = 0; n < probs.size(); ++n) {
        reference[n] = truncated_prob(static_cast<int>(n), alpha, dim);
      }
      write_output(dist.plot,
                   bar_chart_svg("Fock distribution, alpha=" + dist.alpha +
                                     ", N=" + std::to_string(dist.qubits) +
                                     ", M=" + std::to_string(dist.steps),
                                 "Fock number", "probability", probs,
                                 reference));
    }
  });

  TrainOpts train_opts;
  auto* cmd_train = app.add_subcommand(
      "train", "Variationally learn the target state (JSON report)");
  cmd_train->add_option("--alpha", train_opts.alpha, "Displacement, e.g. 1+1i")
      ->required();
  cmd_train->add_option("--qubits", train_opts.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_train->add_option("--scheme", train_opts.scheme, "Ansatz: a, b, or c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  cmd_train->add_option("--layers", train_opts.layers, "Layer count")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_train->add_option("--max-iterations", train_opts.max_iterations,
                        "Optimizer iteration cap")
      ->check(CLI::PositiveNumber);
  cmd_train->add_option("--tolerance", train_opts.tolerance,
                        "Stop once the cost drops below this");
  cmd_train->add_flag("--require-converged", train_opts.require_converged,
                      "Exit with code 3 if the run does not converge");
  cmd_train->add_option("-o,--out", train_opts.out,
                        "Output path ('-' for stdout)");
  cmd_train->callback([&] {
    const FockDim dim(train_opts.qubits);
    const std::complex<double> alpha = parse_alpha(train_opts.alpha);
    warn_if_heavy(alpha, dim);
    const AnsatzSpec spec{scheme_from_char(train_opts.scheme[0]),
                          train_opts.qubits, train_opts.layers};
    TrainConfig config;
    config.max_iterations = train_opts.max_iterations;
    config.cost_tolerance = train_opts.tolerance;
    const OptimizationReport report =
        train(spec, coherent_target(alpha, dim), config);
    write_output(train_opts.out, train_json(spec, report));
    if (train_opts.require_converged && !report.converged) {
      exit_code = kExitNotConverged;
    }
  });

  LayersOpts layers_opts;
  auto* cmd_layers = app.add_subcommand(
      "layers", "Trained fidelity vs layer count (CSV)");
  cmd_layers
      ->add_option("--alpha", layers_opts.alpha, "Displacement, e.g. 1+1i")
      ->required();
  cmd_layers->add_option("--qubits", layers_opts.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_layers->add_option("--scheme", layers_opts.scheme, "Ansatz: a, b, or c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  cmd_layers
      ->add_option("--layers", layers_opts.layers,
                   "Layer counts: lo:hi, lo:hi:stride, or a single value")
      ->required();
  cmd_layers->add_option("--max-iterations", layers_opts.max_iterations,
                         "Optimizer iteration cap")
      ->check(CLI::PositiveNumber);
  cmd_layers->add_option("--tolerance", layers_opts.tolerance,
                         "Stop once the cost drops below this");
  cmd_layers->add_flag("--require-converged", layers_opts.require_converged,
                       "Exit with code 3 if any run does not converge");
  cmd_layers->add_option("-o,--out", layers_opts.out,
                         "Output path ('-' for stdout)");
  cmd_layers->add_option("--plot", layers_opts.plot,
                         "Also write an SVG line chart");
  cmd_layers->callback([&] {
    const FockDim dim(layers_opts.qubits);
    const std::complex<double> alpha = parse_alpha(layers_opts.alpha);
    warn_if_heavy(alpha, dim);
    const Scheme scheme = scheme_from_char(layers_opts.scheme[0]);
    TrainConfig config;
    config.max_iterations = layers_opts.max_iterations;
    config.cost_tolerance = layers_opts.tolerance;
    const std::vector<LayerSweepRow> rows =
        layer_sweep(scheme, layers_opts.qubits, coherent_target(alpha, dim),
                    parse_int_range(layers_opts.layers), config);
    write_output(layers_opts.out, layers_csv(rows));
    if (!layers_opts.plot.empty()) {
      ChartSeries series;
      series.label = "fidelity";
      for (const LayerSweepRow& row : rows) {
        series.points.emplace_back(row.layers, row.fidelity);
      }
      write_output(layers_opts.plot,
                   line_chart_svg("trained fidelity vs layers, scheme " +
                                      layers_opts.scheme + ", alpha=" +
                                      layers_opts.alpha + ", N=" +
                                      std::to_string(layers_opts.qubits),
                                  "layers", "fidelity", {series}));
    }
    if (layers_opts.require_converged) {
      for (const LayerSweepRow& row : rows) {
        if (row.fidelity < 1.0 - config.cost_tolerance) {
          exit_code = kExitNotConverged;
          break;
        }
      }
    }
  });

  GateCountOpts gc;
  auto* cmd_gc = app.add_subcommand(
      "gatecount", "Closed-form gate and parameter counts (CSV)");
  cmd_gc->add_option("--scheme", gc.scheme, "Ansatz: a, b, or c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  cmd_gc->add_option("--qubits", gc.qubits, "Qubit count N")
      ->required()
      ->check(CLI::Range(1, 64));
  cmd_gc
      ->add_option("--layers", gc.layers,
                   "Layer counts: lo:hi, lo:hi:stride, or a single value")
      ->required();
  cmd_gc->add_option("-o,--out", gc.out, "Output path ('-' for stdout)");
  cmd_gc->add_option("--plot", gc.plot, "Also write an SVG line chart");
  cmd_gc->callback([&] {
    const Scheme scheme = scheme_from_char(gc.scheme[0]);
    std::vector<GateCountRow> rows;
    for (int layers : parse_int_range(gc.layers)) {
      const AnsatzSpec spec{scheme, gc.qubits, layers};
      rows.push_back(GateCountRow{scheme, gc.qubits, layers,
                                  resource_report(spec)});
    }
    write_output(gc.out, gatecount_csv(rows));
    if (!gc.plot.empty()) {
      ChartSeries single, cnots;
      single.label = "single-qubit";
      cnots.label = "cnot";
      for (const GateCountRow& row : rows) {
        single.points.emplace_back(row.layers, row.report.single_qubit);
        cnots.points.emplace_back(row.layers, row.report.cnot);
      }
      write_output(gc.plot,
                   line_chart_svg("gate counts, scheme " + gc.scheme + ", N=" +
                                      std::to_string(gc.qubits),
                                  "layers", "gates", {single, cnots}));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests carry exit code 0; everything else is usage.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
