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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qtp/error.h"
#include "qtp/fixtures.h"
#include "qtp/random.h"

namespace qtp {
namespace {

using cd = std::complex<double>;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kIOError;
}

ComplexMatrix Mat3(std::initializer_list<cd> entries) {
  ComplexMatrix m(3, 3);
  auto it = entries.begin();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = *it++;
  }
  return m;
}

TEST(Ggm, QubitMatricesArePauliExactly) {
  const auto m = GgmMatrices(2);
  ASSERT_EQ(m.size(), 3u);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cd(0, -1), cd(0, 1), 0;
  z << 1, 0, 0, -1;
  EXPECT_TRUE(m[0] == x);
  EXPECT_TRUE(m[1] == y);
  EXPECT_TRUE(m[2] == z);
  EXPECT_TRUE(GgmMatrix(2, 0) == ComplexMatrix::Identity(2, 2));
}

TEST(Ggm, QutritMatricesAreTheGellMannSet) {
  const cd i(0, 1);
  const double r3 = 1.0 / std::sqrt(3.0);
  // Textbook lambda_1 .. lambda_8.
  const ComplexMatrix l1 = Mat3({0, 1, 0, 1, 0, 0, 0, 0, 0});
  const ComplexMatrix l2 = Mat3({0, -i, 0, i, 0, 0, 0, 0, 0});
  const ComplexMatrix l3 = Mat3({1, 0, 0, 0, -1, 0, 0, 0, 0});
  const ComplexMatrix l4 = Mat3({0, 0, 1, 0, 0, 0, 1, 0, 0});
  const ComplexMatrix l5 = Mat3({0, 0, -i, 0, 0, 0, i, 0, 0});
  const ComplexMatrix l6 = Mat3({0, 0, 0, 0, 0, 1, 0, 1, 0});
  const ComplexMatrix l7 = Mat3({0, 0, 0, 0, 0, -i, 0, i, 0});
  const ComplexMatrix l8 = Mat3({r3, 0, 0, 0, r3, 0, 0, 0, -2 * r3});
  // Canonical order: symmetric, antisymmetric, diagonal.
  const ComplexMatrix expected[] = {l1, l4, l6, l2, l5, l7, l3, l8};
  const auto m = GgmMatrices(3);
  ASSERT_EQ(m.size(), 8u);
  for (std::size_t a = 0; a < 8; ++a) {
    EXPECT_LT((m[a] - expected[a]).cwiseAbs().maxCoeff(), 1e-15) << a;
  }
}

TEST(Ggm, OrthonormalHermitianTraceless) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto m = GgmMatrices(d);
    ASSERT_EQ(m.size(), d * d - 1);
    for (std::size_t a = 0; a < m.size(); ++a) {
      EXPECT_LT((m[a] - m[a].adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT(std::abs(m[a].trace()), 1e-12);
      for (std::size_t b = 0; b < m.size(); ++b) {
        const cd t = (m[a] * m[b]).trace();
        EXPECT_LT(std::abs(t - cd(a == b ? 2.0 : 0.0)), 1e-12) << d << " " << a << " " << b;
      }
    }
  }
  EXPECT_EQ(CodeOf([] { GgmMatrices(1); }), ErrorCode::kInvalidArgument);
}

TEST(GgmLabel, NamesRoundTripThroughParse) {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t i = 0; i < d * d; ++i) {
      const GgmLabel label = GgmLabel::FromIndex(d, i);
      EXPECT_EQ(GgmLabel::Parse(d, label.Name()), label) << d << " " << i;
      EXPECT_EQ(GgmLabel::Parse(d, label.Name(true)), label);
    }
  }
  EXPECT_EQ(GgmLabel::FromIndex(3, 1).Name(), "s:1:2");
  EXPECT_EQ(GgmLabel::FromIndex(3, 6).Name(), "a:2:3");
  EXPECT_EQ(GgmLabel::FromIndex(3, 8).Name(), "d:2");
  EXPECT_EQ(GgmLabel::FromIndex(3, 1).Name(true), "s:1:2");
  EXPECT_EQ(GgmLabel::FromIndex(2, 2).Name(true), "Y");
  EXPECT_EQ(GgmLabel::FromIndex(2, 2).Name(), "a:1:2");
}

TEST(GgmLabel, ParseRejectsMalformedText) {
  for (const char* bad : {"", "s", "s:", "s:1", "s:2:1", "s:1:4", "d:0", "d:3",
                          "q:1:2", "s:1:2:3", "s:a:2", "X", "s::2"}) {
    EXPECT_EQ(CodeOf([&] { GgmLabel::Parse(3, bad); }), ErrorCode::kParseError) << bad;
  }
  EXPECT_EQ(GgmLabel::Parse(2, "Z").index, 3u);
  EXPECT_EQ(CodeOf([] { GgmLabel::FromIndex(2, 4); }), ErrorCode::kInvalidArgument);
}

TEST(Scheme, FourQubitPairwiseSettings) {
  const MeasurementScheme scheme = SchemeFromArray(fixtures::FourQubitPairwise(), 2);
  EXPECT_EQ(scheme.n, 4u);
  EXPECT_EQ(scheme.k, 2u);
  std::vector<std::string> names;
  for (const auto& s : scheme.settings) {
    std::string word;
    for (const auto& l : s.labels) word += l.Name(true);
    names.push_back(word);
  }
  const std::vector<std::string> expected{"XXXX", "ZYYX", "YZZX", "YYXY", "XZYY",
                                          "ZXZY", "ZZXZ", "YXYZ", "XYZZ"};
  EXPECT_EQ(names, expected);
  EXPECT_TRUE(SchemeCoversAllMarginals(scheme));
}

TEST(Scheme, MarginalCheckCatchesGaps) {
  MeasurementScheme scheme = SchemeFromArray(fixtures::FourQubitPairwise(), 2);
  scheme.settings.pop_back();
  EXPECT_FALSE(SchemeCoversAllMarginals(scheme));
  scheme = SchemeFromArray(fixtures::FourQubitPairwise(), 2);
  scheme.settings[0].labels[0] = GgmLabel::FromIndex(2, 0);
  EXPECT_FALSE(SchemeCoversAllMarginals(scheme));
}

TEST(Scheme, QutritSchemeFromOctalSeed) {
  const MeasurementScheme scheme = SchemeFromArray(fixtures::QutritPairwiseSeed(), 3);
  EXPECT_EQ(scheme.settings.size(), 64u);
  EXPECT_TRUE(SchemeCoversAllMarginals(scheme));
}

TEST(Scheme, RejectsMismatchedOrInvalidArrays) {
  EXPECT_EQ(CodeOf([] { SchemeFromArray(fixtures::FourQubitPairwise(), 3); }),
            ErrorCode::kAlphabetMismatch);
  EXPECT_EQ(CodeOf([] { SchemeFromArray(fixtures::SchedulingBenchmark(), 2); }),
            ErrorCode::kInvalidArray);
}

TEST(DensityMatrix, ValidatesInput) {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_EQ(CodeOf([&] { DensityMatrix{m}; }), ErrorCode::kInvalidArgument);
  m << 1.0, 0.0, 0.0, 1.0;
  EXPECT_EQ(CodeOf([&] { DensityMatrix{m}; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { DensityMatrix{ComplexMatrix::Zero(2, 3)}; }),
            ErrorCode::kInvalidArgument);
}

TEST(DensityMatrix, RandomStatesArePositiveAndSeeded) {
  Rng a(3), b(3);
  const DensityMatrix x = DensityMatrix::Random(9, a);
  const DensityMatrix y = DensityMatrix::Random(9, b);
  EXPECT_TRUE(x.matrix() == y.matrix());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x.matrix());
  EXPECT_GT(solver.eigenvalues().minCoeff(), -1e-12);
  EXPECT_NEAR(x.matrix().trace().real(), 1.0, 1e-12);
}

TEST(Decompose, KnownQubitState) {
  ComplexMatrix zero(2, 2);
  zero << 1, 0, 0, 0;
  const CoefficientTable a = Decompose(zero, 2, 1);
  EXPECT_NEAR(a.at({0}), 0.5, 1e-15);
  EXPECT_NEAR(a.at({1}), 0.0, 1e-15);
  EXPECT_NEAR(a.at({2}), 0.0, 1e-15);
  EXPECT_NEAR(a.at({3}), 0.5, 1e-15);
}

TEST(Decompose, RoundTripsRandomStates) {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2},
                                                       {2, 3}, {4, 2}};
  Rng rng(17);
  for (auto [d, n] : cases) {
    std::size_t dim = 1;
    for (std::size_t q = 0; q < n; ++q) dim *= d;
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = DensityMatrix::Random(static_cast<Eigen::Index>(dim), rng);
      const CoefficientTable a = Decompose(rho, d, n);
      EXPECT_EQ(a.size(), dim * dim);
      EXPECT_NEAR(a.at(std::vector<std::size_t>(n, 0)), 1.0 / static_cast<double>(dim), 1e-14);
      const ComplexMatrix back = Reconstruct(a, d, n);
      EXPECT_LT((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-10) << d << " " << n;
    }
  }
}

TEST(Decompose, ScaleAndShapeErrors) {
  EXPECT_EQ(CodeOf([] { Decompose(ComplexMatrix::Identity(5, 5) / 5.0, 5, 1); }),
            ErrorCode::kScaleExceeded);
  EXPECT_EQ(CodeOf([] { Decompose(ComplexMatrix::Identity(16, 16) / 16.0, 2, 4); }),
            ErrorCode::kScaleExceeded);
  EXPECT_EQ(CodeOf([] { Decompose(ComplexMatrix::Identity(4, 4) / 4.0, 3, 1); }),
            ErrorCode::kDimensionMismatch);
  CoefficientTable partial = Decompose(ComplexMatrix::Identity(2, 2) / 2.0, 2, 1);
  partial.erase({2});
  EXPECT_EQ(CodeOf([&] { Reconstruct(partial, 2, 1); }), ErrorCode::kMissingCoefficient);
}

TEST(GgmProduct, MatchesKroneckerByHand) {
  const ComplexMatrix xz = GgmProduct(2, {1, 3});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1;
  expected(1, 3) = -1;
  expected(2, 0) = 1;
  expected(3, 1) = -1;
  EXPECT_TRUE(xz == expected);
  EXPECT_EQ(GgmProduct(3, {0, 4, 8}).rows(), 27);
}

}  // namespace
}  // namespace qtp
