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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace coherentsim {

/// Truncated Fock space carried by an N-qubit register: the number states
/// |0>,...,|2^N - 1> are identified with the computational basis states.
struct FockDim {
  int n_qubits;
  std::size_t dim;  // 2^n_qubits

  explicit FockDim(int n_qubits);
};

enum class LadderKind { Annihilation, Creation };

/// Hard-truncated ladder operator on a 2^N-dimensional space: the top-left
/// block of the infinite matrix, superdiagonal entries sqrt(1)..sqrt(2^N - 1)
/// for the annihilation operator, conjugate transpose for creation.
Eigen::MatrixXcd ladder_matrix(LadderKind kind, const FockDim& dim);

/// Quadrature-like Hermitian combinations of the truncated ladder matrices:
/// k = 1 gives i(a^dag - a), k = 2 gives -(a + a^dag).
Eigen::MatrixXcd z_matrix(int k, const FockDim& dim);

enum class NormalizationMode { RawTruncated, GammaRenormalized };

/// Coherent state restricted to the truncated space, amplitudes proportional
/// to alpha^k / sqrt(k!) and renormalized to unit norm. The two modes differ
/// only in how the normalization constant is computed (explicit vector norm
/// vs. the incomplete-gamma closed form); the resulting vectors agree to
/// floating precision.
struct CoherentTarget {
  std::complex<double> alpha;
  FockDim dim;
  std::vector<std::complex<double>> amplitudes;
  NormalizationMode normalization_mode;
};

CoherentTarget coherent_target(std::complex<double> alpha, const FockDim& dim,
                               NormalizationMode mode = NormalizationMode::RawTruncated);

/// True when |alpha|^2 > dim/2, i.e. the truncated register is too small to
/// hold the Poisson bulk comfortably. Callers may warn; construction still
/// succeeds.
bool heavy_truncation(std::complex<double> alpha, const FockDim& dim);

/// Poisson occupation probability e^{-|alpha|^2} |alpha|^{2m} / m!,
/// evaluated in log space so large m does not overflow.
double poisson_prob(int m, std::complex<double> alpha);

/// Occupation probability renormalized to the truncated space,
/// P'_m = Gamma(2^N) / Gamma(2^N, |alpha|^2) * P_m for m < 2^N.
double truncated_prob(int m, std::complex<double> alpha, const FockDim& dim);

/// Upper incomplete gamma function Gamma(k, x) for integer k >= 1, via the
/// closed form (k-1)! e^{-x} sum_{j<k} x^j / j!.
double upper_incomplete_gamma(int k, double x);

/// Regularized ratio Q(k, x) = Gamma(k, x) / Gamma(k), stable for large k.
double regularized_upper_gamma(int k, double x);

}  // namespace coherentsim
