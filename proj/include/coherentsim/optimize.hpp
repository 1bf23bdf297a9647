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

#include <functional>
#include <vector>

namespace coherentsim {

using CostFn = std::function<double(const std::vector<double>&)>;
using GradFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct OptimizeConfig {
  int max_iterations = 10000;
  double cost_tolerance = 1e-5;   // stop once cost drops below this
  double gradient_tolerance = 1e-5;  // stationarity stop on the sup norm
  double armijo_c1 = 1e-4;
  int max_backtracks = 48;
};

struct OptimizeResult {
  std::vector<double> params;
  double cost = 0.0;
  int iterations = 0;  // accepted descent steps
  std::vector<double> cost_trace;  // initial cost, then one entry per step
  bool converged = false;  // cost_tolerance reached
};

/// Deterministic BFGS minimizer with Armijo backtracking. Every arithmetic
/// step is a fixed function of (cost, gradient, initial, config); there is no
/// randomness, so repeated runs are bit-identical. The line search only
/// accepts strict decrease, making the cost trace nonincreasing. Stops on
/// convergence, stationarity, line-search failure, or the iteration cap.
OptimizeResult minimize_bfgs(const CostFn& cost, const GradFn& gradient,
                             std::vector<double> initial,
                             const OptimizeConfig& config);

}  // namespace coherentsim
