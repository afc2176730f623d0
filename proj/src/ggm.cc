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

#include "qtp/ggm.h"

#include <cmath>
#include <functional>
#include <set>

#include "qtp/error.h"

namespace qtp {
namespace {

std::size_t PairCount(std::size_t d) { return d * (d - 1) / 2; }

// (j, k) of the p-th pair in lexicographic order, 1-based.
std::pair<std::size_t, std::size_t> PairAt(std::size_t d, std::size_t p) {
  for (std::size_t j = 1; j < d; ++j) {
    const std::size_t row = d - j;
    if (p < row) return {j, j + 1 + p};
    p -= row;
  }
  throw Error(ErrorCode::kInvalidArgument, "pair index out of range");
}

std::size_t PairIndex(std::size_t d, std::size_t j, std::size_t k) {
  std::size_t p = 0;
  for (std::size_t a = 1; a < j; ++a) p += d - a;
  return p + (k - j - 1);
}

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::size_t IntPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

GgmLabel GgmLabel::FromIndex(std::size_t d, std::size_t index) {
  if (d < 2 || index >= d * d) {
    throw Error(ErrorCode::kInvalidArgument,
                "GGM index " + std::to_string(index) + " invalid for d=" +
                    std::to_string(d));
  }
  GgmLabel label;
  label.d = d;
  label.index = index;
  if (index == 0) return label;
  const std::size_t pairs = PairCount(d);
  std::size_t offset = index - 1;
  if (offset < pairs) {
    label.kind = GgmKind::kSymmetric;
    std::tie(label.j, label.k) = PairAt(d, offset);
  } else if (offset < 2 * pairs) {
    label.kind = GgmKind::kAntisymmetric;
    std::tie(label.j, label.k) = PairAt(d, offset - pairs);
  } else {
    label.kind = GgmKind::kDiagonal;
    label.l = offset - 2 * pairs + 1;
  }
  return label;
}

GgmLabel GgmLabel::Parse(std::size_t d, std::string_view text) {
  auto fail = [&]() -> GgmLabel {
    throw Error(ErrorCode::kParseError, "bad GGM label '" + std::string(text) +
                                            "' for d=" + std::to_string(d));
  };
  if (d < 2) fail();
  if (text == "I") return FromIndex(d, 0);
  if (d == 2 && text.size() == 1) {
    if (text == "X") return FromIndex(2, 1);
    if (text == "Y") return FromIndex(2, 2);
    if (text == "Z") return FromIndex(2, 3);
  }
  std::vector<std::size_t> numbers;
  if (text.size() < 3 || text[1] != ':') fail();
  std::string_view rest = text.substr(2);
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const std::string_view part = rest.substr(0, colon);
    if (part.empty() || part.size() > 6) fail();
    std::size_t value = 0;
    for (char c : part) {
      if (c < '0' || c > '9') fail();
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    numbers.push_back(value);
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
    if (rest.empty()) fail();
  }
  const char kind = text[0];
  if ((kind == 's' || kind == 'a') && numbers.size() == 2) {
    const std::size_t j = numbers[0], k = numbers[1];
    if (j < 1 || j >= k || k > d) fail();
    const std::size_t base = kind == 's' ? 1 : 1 + PairCount(d);
    return FromIndex(d, base + PairIndex(d, j, k));
  }
  if (kind == 'd' && numbers.size() == 1) {
    const std::size_t l = numbers[0];
    if (l < 1 || l > d - 1) fail();
    return FromIndex(d, 1 + 2 * PairCount(d) + l - 1);
  }
  return fail();
}

std::string GgmLabel::Name(bool pauli_names) const {
  // For d == 2 the canonical order is exactly X, Y, Z.
  if (pauli_names && d == 2) return std::string(1, "IXYZ"[index]);
  switch (kind) {
    case GgmKind::kIdentity: return "I";
    case GgmKind::kSymmetric:
      return "s:" + std::to_string(j) + ":" + std::to_string(k);
    case GgmKind::kAntisymmetric:
      return "a:" + std::to_string(j) + ":" + std::to_string(k);
    case GgmKind::kDiagonal: return "d:" + std::to_string(l);
  }
  return "?";
}

ComplexMatrix GgmMatrix(std::size_t d, std::size_t index) {
  const GgmLabel label = GgmLabel::FromIndex(d, index);
  const auto dim = static_cast<Eigen::Index>(d);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const std::complex<double> i_unit(0.0, 1.0);
  // Ket |j> is row j - 1.
  const auto j = static_cast<Eigen::Index>(label.j) - 1;
  const auto k = static_cast<Eigen::Index>(label.k) - 1;
  switch (label.kind) {
    case GgmKind::kIdentity:
      m.setIdentity();
      break;
    case GgmKind::kSymmetric:
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      break;
    case GgmKind::kAntisymmetric:
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      break;
    case GgmKind::kDiagonal: {
      const auto l = static_cast<Eigen::Index>(label.l);
      const double scale =
          std::sqrt(2.0 / static_cast<double>(label.l * (label.l + 1)));
      for (Eigen::Index a = 0; a < l; ++a) m(a, a) = scale;
      m(l, l) = -static_cast<double>(label.l) * scale;
      break;
    }
  }
  return m;
}

std::vector<ComplexMatrix> GgmMatrices(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "GGM needs d >= 2");
  std::vector<ComplexMatrix> out;
  out.reserve(d * d - 1);
  for (std::size_t i = 1; i < d * d; ++i) out.push_back(GgmMatrix(d, i));
  return out;
}

ComplexMatrix GgmProduct(std::size_t d,
                         const std::vector<std::size_t>& indices) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t index : indices) out = Kron(out, GgmMatrix(d, index));
  return out;
}

MeasurementScheme SchemeFromArray(const CoveringArray& array, std::size_t d) {
  if (d < 2 || array.alphabet() != d * d - 1) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "array alphabet " + std::to_string(array.alphabet()) +
                    " != d^2 - 1 = " + std::to_string(d * d - 1));
  }
  if (!Verify(array).valid) {
    throw Error(ErrorCode::kInvalidArray,
                "array is not a covering array of strength " +
                    std::to_string(array.strength()));
  }
  MeasurementScheme scheme;
  scheme.d = d;
  scheme.n = array.columns();
  scheme.k = array.strength();
  scheme.source = array.provenance();
  scheme.settings.reserve(array.rows());
  for (std::size_t r = 0; r < array.rows(); ++r) {
    MeasurementSetting setting;
    for (Symbol s : array.row(r)) {
      setting.labels.push_back(GgmLabel::FromIndex(d, s + 1));
    }
    scheme.settings.push_back(std::move(setting));
  }
  return scheme;
}

bool SchemeCoversAllMarginals(const MeasurementScheme& scheme) {
  if (scheme.d < 2 || scheme.k < 1 || scheme.k > scheme.n) return false;
  for (const auto& setting : scheme.settings) {
    if (setting.labels.size() != scheme.n) return false;
    for (const auto& label : setting.labels) {
      if (label.index == 0 || label.index >= scheme.d * scheme.d) return false;
    }
  }
  const std::size_t needed = IntPow(scheme.d * scheme.d - 1, scheme.k);
  std::vector<std::size_t> positions;
  std::function<bool(std::size_t)> visit = [&](std::size_t start) -> bool {
    if (positions.size() == scheme.k) {
      std::set<std::vector<std::size_t>> seen;
      for (const auto& setting : scheme.settings) {
        std::vector<std::size_t> key;
        for (std::size_t p : positions) key.push_back(setting.labels[p].index);
        seen.insert(std::move(key));
      }
      return seen.size() == needed;
    }
    for (std::size_t p = start; p < scheme.n; ++p) {
      positions.push_back(p);
      const bool ok = visit(p + 1);
      positions.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return visit(0);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix must be square");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix not Hermitian");
  }
  if (std::abs(matrix_.trace() - 1.0) > tolerance) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix trace != 1");
  }
}

DensityMatrix DensityMatrix::Random(Eigen::Index dimension, Rng& rng) {
  auto gaussian = [&rng]() {
    // Box-Muller on the platform-independent uniform stream.
    const double u1 = 1.0 - Uniform01(rng);
    const double u2 = Uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  ComplexMatrix a(dimension, dimension);
  for (Eigen::Index i = 0; i < dimension; ++i) {
    for (Eigen::Index j = 0; j < dimension; ++j) {
      a(i, j) = {gaussian(), gaussian()};
    }
  }
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  // Remove rounding asymmetry so the strict constructor check holds.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

CoefficientTable Decompose(const ComplexMatrix& rho, std::size_t d,
                           std::size_t n) {
  if (d < 2 || n < 1 || d > 4 || n > 3) {
    throw Error(ErrorCode::kScaleExceeded,
                "decomposition limited to 2 <= d <= 4, 1 <= n <= 3");
  }
  const auto dim = static_cast<Eigen::Index>(IntPow(d, n));
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rho must be " + std::to_string(dim) + "x" +
                    std::to_string(dim));
  }
  const std::size_t basis = d * d;
  CoefficientTable table;
  std::vector<std::size_t> indices(n, 0);
  const std::size_t total = IntPow(basis, n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    std::size_t nonzero = 0;
    for (std::size_t p = n; p-- > 0;) {
      indices[p] = rest % basis;
      rest /= basis;
      if (indices[p] != 0) ++nonzero;
    }
    const ComplexMatrix op = GgmProduct(d, indices);
    // Tr(op * rho) without forming the product.
    const std::complex<double> trace = (op.transpose().array() * rho.array()).sum();
    const double scale =
        static_cast<double>(IntPow(d, n - nonzero)) * std::pow(2.0, nonzero);
    table[indices] = trace.real() / scale;
  }
  return table;
}

ComplexMatrix Reconstruct(const CoefficientTable& coefficients, std::size_t d,
                          std::size_t n) {
  if (d < 2 || n < 1 || d > 4 || n > 3) {
    throw Error(ErrorCode::kScaleExceeded,
                "reconstruction limited to 2 <= d <= 4, 1 <= n <= 3");
  }
  const std::size_t basis = d * d;
  const auto dim = static_cast<Eigen::Index>(IntPow(d, n));
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  std::vector<std::size_t> indices(n, 0);
  const std::size_t total = IntPow(basis, n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t p = n; p-- > 0;) {
      indices[p] = rest % basis;
      rest /= basis;
    }
    const auto it = coefficients.find(indices);
    if (it == coefficients.end()) {
      std::string key;
      for (std::size_t i : indices) key += (key.empty() ? "" : ",") + std::to_string(i);
      throw Error(ErrorCode::kMissingCoefficient, "no coefficient for (" + key + ")");
    }
    if (it->second != 0.0) rho += it->second * GgmProduct(d, indices);
  }
  return rho;
}

}  // namespace qtp
