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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace coherentsim {

enum class PauliAxis : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis axis);
PauliAxis axis_from_char(char c);

/// One weighted Pauli string. axes[0] acts on qubit 0, which is the most
/// significant bit of the basis index (so basis index == Fock number).
struct PauliTerm {
  std::vector<PauliAxis> axes;
  double coefficient = 0.0;

  int n_qubits() const { return static_cast<int>(axes.size()); }
  std::string axes_string() const;
};

PauliTerm make_term(const std::string& axes, double coefficient);

enum class YParity { Odd, Even };

/// A weighted sum of Pauli strings. For ladder decompositions the parity of
/// the Y count is uniform across terms (odd for the Hermitian i(a^dag - a),
/// even for the symmetric -(a + a^dag)) and is recorded here.
struct PauliDecomposition {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
  std::optional<YParity> parity;
};

/// Hilbert-Schmidt projection c_P = Tr(P M) / 2^N over all 4^N strings,
/// keeping coefficients with magnitude above 1e-12. The input must be square
/// with power-of-two dimension and Hermitian to 1e-10.
PauliDecomposition trace_project(const Eigen::MatrixXcd& matrix);

/// Closed-form decomposition of z_matrix(k, N) into N 2^{N-1} weighted Pauli
/// strings without ever forming the matrix. Strings have the shape
/// (diagonal prefix over {I,Z}) x (skew suffix over {X,Y}) with suffix length
/// m = 1..N; the weight of a string with prefix pattern p is
///   sign / 2^{N-1} * sum_k (-1)^{popcount(k & p)} sqrt(2^{m-1} (2k+1)),
/// summed over k = 0..2^{N-m}-1. The sign depends only on the placement of
/// the Y axes in the suffix, and k = 2 carries a global minus.
/// Terms are emitted with m ascending, then prefix, then suffix ascending.
PauliDecomposition ladder_strings(int k, int n_qubits);

/// Permutation-phase structure: column c of an unweighted Pauli string has a
/// single nonzero entry, at row c ^ pauli_flip_mask(axes), with value
/// pauli_column_phase(axes, c) (a power of i). Bit N-1-q of the basis index
/// carries qubit q.
std::size_t pauli_flip_mask(const std::vector<PauliAxis>& axes);
std::complex<double> pauli_column_phase(const std::vector<PauliAxis>& axes,
                                        std::size_t column);

/// Dense matrix of a single weighted string (Kronecker product times the
/// coefficient).
Eigen::MatrixXcd pauli_term_matrix(const PauliTerm& term);

/// Dense sum of all terms; the verification inverse of the decompositions.
Eigen::MatrixXcd reconstruct(const PauliDecomposition& decomp);

}  // namespace coherentsim
