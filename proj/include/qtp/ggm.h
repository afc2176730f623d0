// Copyright 2026 The qtp Authors
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

#ifndef QTP_GGM_H_
#define QTP_GGM_H_

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qtp/covering_array.h"
#include "qtp/random.h"

namespace qtp {

using ComplexMatrix = Eigen::MatrixXcd;

enum class GgmKind { kIdentity, kSymmetric, kAntisymmetric, kDiagonal };

// One generalized Gell-Mann matrix for local dimension d. Indices follow the
// canonical order: 0 is the identity, then the d(d-1)/2 symmetric matrices
// with (j, k) lexicographic, then the antisymmetric ones in the same order,
// then the diagonal ones l = 1..d-1. j, k, l are 1-based ket labels.
struct GgmLabel {
  std::size_t d = 0;
  std::size_t index = 0;
  GgmKind kind = GgmKind::kIdentity;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  // Label for canonical index in [0, d^2 - 1]. Throws Error(kInvalidArgument).
  static GgmLabel FromIndex(std::size_t d, std::size_t index);
  // Parses "s:j:k", "a:j:k", "d:l" or "I"; "X", "Y", "Z" are accepted when
  // d == 2. Throws Error(kParseError).
  static GgmLabel Parse(std::size_t d, std::string_view text);

  // "s:j:k" / "a:j:k" / "d:l" / "I"; with pauli_names, qubit labels print as
  // I/X/Y/Z (ignored for d > 2).
  std::string Name(bool pauli_names = false) const;

  friend bool operator==(const GgmLabel& a, const GgmLabel& b) {
    return a.d == b.d && a.index == b.index;
  }
};

// The d^2 - 1 non-identity GGM matrices in canonical order (element i-1 is
// index i). Requires d >= 2.
std::vector<ComplexMatrix> GgmMatrices(std::size_t d);
// Single matrix by canonical index; index 0 is the d x d identity.
ComplexMatrix GgmMatrix(std::size_t d, std::size_t index);

struct MeasurementSetting {
  std::vector<GgmLabel> labels;  // one non-identity label per qudit
};

struct MeasurementScheme {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<MeasurementSetting> settings;
  std::string source;
};

// Reads each row of a verified CA(r; k, n, d^2 - 1) as a setting, mapping
// symbol s to canonical index s + 1 (X, Y, Z for qubits). Throws
// Error(kAlphabetMismatch) or Error(kInvalidArray).
MeasurementScheme SchemeFromArray(const CoveringArray& array, std::size_t d);

// Independent coverage check on the scheme itself: every k-subset of qudits
// sees every k-tuple of non-identity labels in some setting. Also rejects
// identity labels and ragged settings.
bool SchemeCoversAllMarginals(const MeasurementScheme& scheme);

// Hermitian, unit-trace d^n x d^n matrix.
class DensityMatrix {
 public:
  // Throws Error(kInvalidArgument) unless Hermitian and of unit trace within
  // `tolerance`.
  explicit DensityMatrix(ComplexMatrix matrix, double tolerance = 1e-12);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  // Random state A A^dagger / Tr(A A^dagger) with Gaussian complex A.
  static DensityMatrix Random(Eigen::Index dimension, Rng& rng);

 private:
  ComplexMatrix matrix_;
};

// Expansion coefficients keyed by the index tuple (i_1, ..., i_n), each in
// [0, d^2).
using CoefficientTable = std::map<std::vector<std::size_t>, double>;

// All (d^2)^n coefficients a = Tr(lambda_{i_1} x ... x lambda_{i_n} rho) /
// (d^(n-t) 2^t), t = number of nonzero indices. Desk scale only: throws
// Error(kScaleExceeded) for d > 4 or n > 3, Error(kDimensionMismatch) if rho
// is not d^n x d^n.
CoefficientTable Decompose(const ComplexMatrix& rho, std::size_t d,
                           std::size_t n);
inline CoefficientTable Decompose(const DensityMatrix& rho, std::size_t d,
                                  std::size_t n) {
  return Decompose(rho.matrix(), d, n);
}

// Sum of a_{i} lambda_{i_1} x ... x lambda_{i_n}. The result is Hermitian
// with trace d^n a_{0...0}; it is a density matrix only for a_{0...0} = d^-n.
// Throws Error(kMissingCoefficient) if any tuple is absent.
ComplexMatrix Reconstruct(const CoefficientTable& coefficients, std::size_t d,
                          std::size_t n);

// Kronecker product of GGM matrices for the index tuple.
ComplexMatrix GgmProduct(std::size_t d, const std::vector<std::size_t>& indices);

}  // namespace qtp

#endif  // QTP_GGM_H_
