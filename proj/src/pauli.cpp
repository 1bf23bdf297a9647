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

#include "coherentsim/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coherentsim {

namespace {

constexpr double kPruneThreshold = 1e-12;
constexpr double kHermitianTol = 1e-10;

using cd = std::complex<double>;

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  const auto u = static_cast<std::size_t>(dim);
  if (!std::has_single_bit(u)) return -1;
  return std::countr_zero(u);
}

}  // namespace

std::size_t pauli_flip_mask(const std::vector<PauliAxis>& axes) {
  const int n = static_cast<int>(axes.size());
  std::size_t mask = 0;
  for (int q = 0; q < n; ++q) {
    if (axes[q] == PauliAxis::X || axes[q] == PauliAxis::Y) {
      mask |= std::size_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

cd pauli_column_phase(const std::vector<PauliAxis>& axes, std::size_t column) {
  const int n = static_cast<int>(axes.size());
  cd phase{1.0, 0.0};
  for (int q = 0; q < n; ++q) {
    const int bit = static_cast<int>((column >> (n - 1 - q)) & 1u);
    switch (axes[q]) {
      case PauliAxis::I:
      case PauliAxis::X:
        break;
      case PauliAxis::Y:
        // sigma_y column 0 holds +i at row 1; column 1 holds -i at row 0.
        phase *= bit == 0 ? cd{0.0, 1.0} : cd{0.0, -1.0};
        break;
      case PauliAxis::Z:
        if (bit == 1) phase = -phase;
        break;
    }
  }
  return phase;
}

char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default:
      throw std::invalid_argument(std::string("unknown Pauli axis '") + c + "'");
  }
}

std::string PauliTerm::axes_string() const {
  std::string s;
  s.reserve(axes.size());
  for (PauliAxis a : axes) s.push_back(axis_char(a));
  return s;
}

PauliTerm make_term(const std::string& axes, double coefficient) {
  PauliTerm term;
  term.axes.reserve(axes.size());
  for (char c : axes) term.axes.push_back(axis_from_char(c));
  term.coefficient = coefficient;
  return term;
}

PauliDecomposition trace_project(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::domain_error("trace_project: matrix must be square");
  }
  const int n = qubits_for_dim(matrix.rows());
  if (n < 1) {
    throw std::domain_error("trace_project: dimension must be 2^N with N >= 1");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::domain_error("trace_project: matrix must be Hermitian");
  }

  const std::size_t dim = std::size_t{1} << n;
  const std::size_t n_strings = std::size_t{1} << (2 * n);

  PauliDecomposition decomp;
  decomp.n_qubits = n;

  std::vector<PauliAxis> axes(static_cast<std::size_t>(n));
  bool any_odd = false;
  bool any_even = false;
  for (std::size_t code = 0; code < n_strings; ++code) {
    int n_y = 0;
    for (int q = 0; q < n; ++q) {
      const auto digit = static_cast<unsigned>((code >> (2 * (n - 1 - q))) & 3u);
      axes[static_cast<std::size_t>(q)] = static_cast<PauliAxis>(digit);
      if (digit == 2u) ++n_y;
    }
    const std::size_t flips = pauli_flip_mask(axes);
    cd trace{0.0, 0.0};
    for (std::size_t c = 0; c < dim; ++c) {
      trace += pauli_column_phase(axes, c) *
               matrix(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ flips));
    }
    const double coeff = trace.real() / static_cast<double>(dim);
    if (std::abs(coeff) > kPruneThreshold) {
      decomp.terms.push_back(PauliTerm{axes, coeff});
      (n_y % 2 == 1 ? any_odd : any_even) = true;
    }
  }
  if (any_odd != any_even) {
    decomp.parity = any_odd ? YParity::Odd : YParity::Even;
  }
  return decomp;
}

PauliDecomposition ladder_strings(int k, int n_qubits) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("ladder_strings: k must be 1 or 2");
  }
  if (n_qubits < 1) {
    throw std::invalid_argument("ladder_strings: n_qubits must be >= 1");
  }

  const int n = n_qubits;
  const bool want_odd = (k == 1);
  const double scale = std::ldexp(1.0, -(n - 1));  // 1 / 2^{N-1}

  PauliDecomposition decomp;
  decomp.n_qubits = n;
  decomp.parity = want_odd ? YParity::Odd : YParity::Even;
  decomp.terms.reserve(static_cast<std::size_t>(n) << (n - 1));

  for (int m = 1; m <= n; ++m) {
    const std::size_t n_prefix = std::size_t{1} << (n - m);
    const std::size_t n_suffix = std::size_t{1} << m;
    const double step_scale = std::sqrt(std::ldexp(1.0, m - 1));  // sqrt(2^{m-1})

    for (std::size_t prefix = 0; prefix < n_prefix; ++prefix) {
      // Bit j of the summation index pairs with bit j of the prefix pattern,
      // so the alternating sign is just the parity of their AND.
      double surd_sum = 0.0;
      for (std::size_t kk = 0; kk < n_prefix; ++kk) {
        const double root = step_scale * std::sqrt(static_cast<double>(2 * kk + 1));
        surd_sum += (std::popcount(kk & prefix) % 2 == 0) ? root : -root;
      }

      for (std::size_t suffix = 0; suffix < n_suffix; ++suffix) {
        const int n_y = std::popcount(suffix);
        if ((n_y % 2 == 1) != want_odd) continue;

        // Count of Y among the m-1 rightmost skew positions; the leading
        // skew position is the suffix's most significant bit.
        const int tail_y = std::popcount(suffix & ((std::size_t{1} << (m - 1)) - 1));
        const int gamma = (n_y / 2 + tail_y) % 2;
        double coeff = scale * surd_sum;
        if (gamma == 1) coeff = -coeff;
        if (k == 2) coeff = -coeff;

        PauliTerm term;
        term.axes.resize(static_cast<std::size_t>(n));
        for (int q = 0; q < n - m; ++q) {
          const bool z = ((prefix >> (n - m - 1 - q)) & 1u) != 0;
          term.axes[static_cast<std::size_t>(q)] = z ? PauliAxis::Z : PauliAxis::I;
        }
        for (int t = 0; t < m; ++t) {
          const bool y = ((suffix >> (m - 1 - t)) & 1u) != 0;
          term.axes[static_cast<std::size_t>(n - m + t)] = y ? PauliAxis::Y : PauliAxis::X;
        }
        term.coefficient = coeff;
        decomp.terms.push_back(std::move(term));
      }
    }
  }
  return decomp;
}

Eigen::MatrixXcd pauli_term_matrix(const PauliTerm& term) {
  const int n = term.n_qubits();
  if (n < 1) {
    throw std::invalid_argument("pauli_term_matrix: term must cover at least one qubit");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const std::size_t flips = pauli_flip_mask(term.axes);
  for (std::size_t c = 0; c < static_cast<std::size_t>(dim); ++c) {
    out(static_cast<Eigen::Index>(c ^ flips), static_cast<Eigen::Index>(c)) =
        term.coefficient * pauli_column_phase(term.axes, c);
  }
  return out;
}

Eigen::MatrixXcd reconstruct(const PauliDecomposition& decomp) {
  if (decomp.n_qubits < 1) {
    throw std::invalid_argument("reconstruct: decomposition must declare n_qubits >= 1");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << decomp.n_qubits);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& term : decomp.terms) {
    if (term.n_qubits() != decomp.n_qubits) {
      throw std::invalid_argument("reconstruct: term width does not match n_qubits");
    }
    const std::size_t flips = pauli_flip_mask(term.axes);
    for (std::size_t c = 0; c < static_cast<std::size_t>(dim); ++c) {
      out(static_cast<Eigen::Index>(c ^ flips), static_cast<Eigen::Index>(c)) +=
          term.coefficient * pauli_column_phase(term.axes, c);
    }
  }
  return out;
}

}  // namespace coherentsim
