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

#include "coherentsim/optimize.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include <Eigen/Dense>

namespace coherentsim {

namespace {

// Rebuilding H from the identity after a failed curvature check keeps the
// inverse-Hessian model positive definite without damped updates.
void bfgs_update(Eigen::MatrixXd& h_inv, const Eigen::VectorXd& s,
                 const Eigen::VectorXd& y) {
  const double sy = s.dot(y);
  if (!(sy > 1e-12 * s.norm() * y.norm())) {
    h_inv.setIdentity();
    return;
  }
  const double rho = 1.0 / sy;
  const Eigen::VectorXd hy = h_inv * y;
  const double yhy = y.dot(hy);
  h_inv.noalias() -= rho * (hy * s.transpose() + s * hy.transpose());
  h_inv.noalias() += rho * (1.0 + rho * yhy) * (s * s.transpose());
}

}  // namespace

OptimizeResult minimize_bfgs(const CostFn& cost, const GradFn& gradient,
                             std::vector<double> initial,
                             const OptimizeConfig& config) {
  if (config.max_iterations < 1) {
    throw std::invalid_argument("minimize_bfgs: max_iterations must be >= 1");
  }
  const auto n = static_cast<Eigen::Index>(initial.size());
  if (n == 0) {
    throw std::invalid_argument("minimize_bfgs: empty parameter vector");
  }

  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(initial.data(), n);
  double f = cost(initial);

  OptimizeResult result;
  result.cost_trace.push_back(f);

  auto to_vector = [n](const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + n);
  };

  if (f < config.cost_tolerance) {
    result.params = to_vector(x);
    result.cost = f;
    result.converged = true;
    return result;
  }

  Eigen::VectorXd g =
      Eigen::Map<const Eigen::VectorXd>(gradient(initial).data(), n);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() < config.gradient_tolerance) break;

    Eigen::VectorXd direction = -(h_inv * g);
    double slope = direction.dot(g);
    if (!(slope < 0.0)) {
      h_inv.setIdentity();
      direction = -g;
      slope = direction.dot(g);
    }

    // Backtracking Armijo search, halving from a unit step. Exhausting the
    // backtracks means no meaningful decrease exists along the search
    // direction at working precision, which terminates the optimization.
    double step = 1.0;
    double f_new = f;
    Eigen::VectorXd x_new = x;
    bool accepted = false;
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
      x_new = x + step * direction;
      f_new = cost(to_vector(x_new));
      if (f_new <= f + config.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    const Eigen::VectorXd g_new =
        Eigen::Map<const Eigen::VectorXd>(gradient(to_vector(x_new)).data(), n);
    bfgs_update(h_inv, x_new - x, g_new - g);

    x = x_new;
    f = f_new;
    g = g_new;
    result.cost_trace.push_back(f);
    result.iterations = iter;
    if (f < config.cost_tolerance) {
      result.converged = true;
      break;
    }
  }

  result.params = to_vector(x);
  result.cost = f;
  return result;
}

}  // namespace coherentsim
