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

#include "coherentsim/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coherentsim {

namespace {
constexpr int kMaxQubits = 30;  // keeps 2^N representable and allocations sane
}

FockDim::FockDim(int n) : n_qubits(n), dim(0) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("FockDim: n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " + std::to_string(n));
  }
  dim = std::size_t{1} << n;
}

Eigen::MatrixXcd ladder_matrix(LadderKind kind, const FockDim& dim) {
  const auto d = static_cast<Eigen::Index>(dim.dim);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j) {
    a(j, j + 1) = std::sqrt(static_cast<double>(j + 1));
  }
  if (kind == LadderKind::Creation) {
    return a.adjoint();
  }
  return a;
}

Eigen::MatrixXcd z_matrix(int k, const FockDim& dim) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("z_matrix: k must be 1 or 2, got " + std::to_string(k));
  }
  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::Annihilation, dim);
  const Eigen::MatrixXcd adag = a.adjoint();
  if (k == 1) {
    return std::complex<double>(0.0, 1.0) * (adag - a);
  }
  return -(a + adag);
}

bool heavy_truncation(std::complex<double> alpha, const FockDim& dim) {
  return std::norm(alpha) > static_cast<double>(dim.dim) / 2.0;
}

CoherentTarget coherent_target(std::complex<double> alpha, const FockDim& dim,
                               NormalizationMode mode) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw std::domain_error("coherent_target: alpha must be finite");
  }

  const std::size_t d = dim.dim;
  std::vector<std::complex<double>> amps(d, {0.0, 0.0});
  const double mag2 = std::norm(alpha);
  if (mag2 == 0.0) {
    amps[0] = 1.0;
    return CoherentTarget{alpha, dim, std::move(amps), mode};
  }

  // |c_k| = exp(-|alpha|^2/2 + k log|alpha| - lgamma(k+1)/2), phase k*arg(alpha).
  const double log_mag = 0.5 * std::log(mag2);
  const double arg = std::arg(alpha);
  for (std::size_t k = 0; k < d; ++k) {
    const double kk = static_cast<double>(k);
    const double log_abs = -0.5 * mag2 + kk * log_mag - 0.5 * std::lgamma(kk + 1.0);
    amps[k] = std::polar(std::exp(log_abs), kk * arg);
  }

  double inv_norm = 0.0;
  if (mode == NormalizationMode::RawTruncated) {
    double norm2 = 0.0;
    for (const auto& c : amps) norm2 += std::norm(c);
    inv_norm = 1.0 / std::sqrt(norm2);
  } else {
    inv_norm = 1.0 / std::sqrt(regularized_upper_gamma(static_cast<int>(d), mag2));
  }
  for (auto& c : amps) c *= inv_norm;
  return CoherentTarget{alpha, dim, std::move(amps), mode};
}

double poisson_prob(int m, std::complex<double> alpha) {
  if (m < 0) {
    throw std::invalid_argument("poisson_prob: m must be nonnegative");
  }
  const double mean = std::norm(alpha);
  if (mean == 0.0) {
    return m == 0 ? 1.0 : 0.0;
  }
  const double mm = static_cast<double>(m);
  return std::exp(-mean + mm * std::log(mean) - std::lgamma(mm + 1.0));
}

double regularized_upper_gamma(int k, double x) {
  if (k < 1) {
    throw std::invalid_argument("regularized_upper_gamma: k must be >= 1");
  }
  if (x < 0.0 || !std::isfinite(x)) {
    throw std::domain_error("regularized_upper_gamma: x must be finite and >= 0");
  }
  if (x == 0.0) {
    return 1.0;
  }
  // Q(k, x) = e^{-x} sum_{j<k} x^j/j!, summed in log space around the peak
  // term so neither x^j nor j! is ever formed directly.
  const double log_x = std::log(x);
  double log_peak = -x;  // j = 0 term
  const int j_peak = std::min(k - 1, static_cast<int>(x));
  for (int j : {j_peak, k - 1}) {
    const double jj = static_cast<double>(j);
    log_peak = std::max(log_peak, -x + jj * log_x - std::lgamma(jj + 1.0));
  }
  double scaled_sum = 0.0;
  for (int j = 0; j < k; ++j) {
    const double jj = static_cast<double>(j);
    scaled_sum += std::exp(-x + jj * log_x - std::lgamma(jj + 1.0) - log_peak);
  }
  return std::exp(log_peak) * scaled_sum;
}

double upper_incomplete_gamma(int k, double x) {
  if (k < 1) {
    throw std::invalid_argument("upper_incomplete_gamma: k must be >= 1");
  }
  return std::exp(std::lgamma(static_cast<double>(k))) * regularized_upper_gamma(k, x);
}

double truncated_prob(int m, std::complex<double> alpha, const FockDim& dim) {
  if (m < 0 || static_cast<std::size_t>(m) >= dim.dim) {
    throw std::domain_error("truncated_prob: m must satisfy 0 <= m < 2^N");
  }
  const double q = regularized_upper_gamma(static_cast<int>(dim.dim), std::norm(alpha));
  return poisson_prob(m, alpha) / q;
}

}  // namespace coherentsim
