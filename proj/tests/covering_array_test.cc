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

#include "qtp/covering_array.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.h"
#include "qtp/error.h"
#include "qtp/fixtures.h"
#include "qtp/random.h"

namespace qtp {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kIOError;
}

CoveringArray RandomArray(std::size_t rows, std::size_t k, std::size_t n,
                          std::size_t v, Rng& rng) {
  std::vector<Symbol> cells(rows * n);
  for (auto& c : cells) c = static_cast<Symbol>(UniformBelow(rng, v));
  return CoveringArray(k, n, v, std::move(cells));
}

TEST(CoveringArray, ConstructorValidates) {
  EXPECT_EQ(CodeOf([] { CoveringArray(0, 3, 2, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { CoveringArray(3, 2, 2, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { CoveringArray(2, 3, 1, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { CoveringArray(2, 3, 2, {0, 1, 0, 1}); }),
            ErrorCode::kDimensionMismatch);
  try {
    CoveringArray(2, 3, 2, {0, 1, 0, 1, 2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSymbolOutOfRange);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos) << e.what();
  }
}

TEST(CoveringArray, RowAccessAndModifiers) {
  const CoveringArray a = CoveringArray::FromRows(2, 3, {{0, 1, 2}, {2, 2, 1}}, "t");
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.at(1, 2), 1u);
  EXPECT_EQ(a.WithoutRow(0).rows(), 1u);
  const Row extra{1, 1, 1};
  EXPECT_EQ(a.WithAppendedRow(extra).at(2, 0), 1u);
  EXPECT_EQ(a.WithCell(0, 0, 2).at(0, 0), 2u);
  const std::vector<std::size_t> order{1, 0};
  EXPECT_EQ(a.WithRowOrder(order).at(0, 0), 2u);
  EXPECT_EQ(a.ColumnPrefix(2).columns(), 2u);
  EXPECT_EQ(a, a.WithProvenance("other"));
  EXPECT_FALSE(a == a.WithStrength(1));
  EXPECT_THROW(a.WithCell(0, 0, 3), Error);
}

TEST(Verify, FixturesAtTheirStrength) {
  EXPECT_TRUE(Verify(fixtures::QutritPairwiseSeed()).valid);
  EXPECT_TRUE(Verify(fixtures::FourQubitPairwise()).valid);
  EXPECT_TRUE(Verify(fixtures::ZeroSumNine()).valid);
}

TEST(Verify, SchedulingBenchmarkIsOnlyPairwise) {
  const CoveringArray bench = fixtures::SchedulingBenchmark();
  const CoverageReport report = Verify(bench);
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.missing.size(), 17u);
  EXPECT_EQ(report.missing.size(), oracle::CountMissing(bench.RowVectors(), 3, 3));
  EXPECT_EQ(report.missing.front().columns, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(report.missing.front().values, (std::vector<Symbol>{1, 2, 1}));
  EXPECT_TRUE(Verify(bench.WithStrength(2)).valid);
}

TEST(Verify, ListsMissingTuplesInOrder) {
  const CoveringArray a = fixtures::ZeroSumNine().WithoutRow(0);
  const CoverageReport report = Verify(a);
  ASSERT_FALSE(report.valid);
  ASSERT_EQ(report.missing.size(), 3u);
  EXPECT_EQ(report.missing[0], (MissingInteraction{{0, 1}, {0, 0}}));
  EXPECT_EQ(report.missing[1], (MissingInteraction{{0, 2}, {0, 0}}));
  EXPECT_EQ(report.missing[2], (MissingInteraction{{1, 2}, {0, 0}}));
  EXPECT_EQ(report.checked_subsets, 3u);
}

TEST(Verify, AgreesWithSetOracleOnRandomArrays) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t v = 2 + UniformBelow(rng, 3);
    const std::size_t k = 1 + UniformBelow(rng, 3);
    const std::size_t n = k + UniformBelow(rng, 4);
    const std::size_t rows = 1 + UniformBelow(rng, 40);
    const CoveringArray a = RandomArray(rows, k, n, v, rng);
    const CoverageReport report = Verify(a);
    const std::size_t expected = oracle::CountMissing(a.RowVectors(), k, v);
    EXPECT_EQ(report.missing.size(), expected);
    EXPECT_EQ(report.valid, expected == 0);
    EXPECT_EQ(report.checked_subsets, Binomial(n, k));
    EXPECT_TRUE(std::is_sorted(
        report.missing.begin(), report.missing.end(),
        [](const MissingInteraction& x, const MissingInteraction& y) {
          return std::tie(x.columns, x.values) < std::tie(y.columns, y.values);
        }));
  }
}

TEST(Verify, ThreadCountDoesNotChangeReport) {
  Rng rng(99);
  const CoveringArray a = RandomArray(30, 3, 12, 3, rng);
  const CoverageReport serial = Verify(a);
  for (unsigned t : {2u, 3u, 7u, 64u}) {
    EXPECT_EQ(Verify(a, {.threads = t}), serial) << t;
  }
}

TEST(Verify, ExactlyOnceDiagnostic) {
  EXPECT_TRUE(CoversExactlyOnce(fixtures::ZeroSumNine()));
  EXPECT_TRUE(CoversExactlyOnce(fixtures::QutritPairwiseSeed()));
  EXPECT_FALSE(CoversExactlyOnce(fixtures::SchedulingBenchmark().WithStrength(2)));
}

TEST(ConstantRows, CountsAndPresence) {
  EXPECT_EQ(CountConstantRows(fixtures::QutritPairwiseSeed()), 8u);
  EXPECT_TRUE(ContainsConstantRows(fixtures::QutritPairwiseSeed()));
  EXPECT_TRUE(ContainsConstantRows(fixtures::ZeroSumNine()));
  EXPECT_FALSE(ContainsConstantRows(fixtures::QutritPairwiseSeed().WithoutRow(3)));
}

TEST(PermutationEquivalent, DetectsShuffledCopies) {
  Rng rng(5);
  const CoveringArray base = fixtures::QutritPairwiseSeed();
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> rows(base.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> cols(base.columns());
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Row> shuffled;
    for (std::size_t r : rows) {
      Row row;
      for (std::size_t c : cols) row.push_back(base.at(r, c));
      shuffled.push_back(row);
    }
    const CoveringArray other = CoveringArray::FromRows(2, 8, shuffled);
    EXPECT_TRUE(PermutationEquivalent(base, other));
    EXPECT_TRUE(PermutationEquivalent(other, base));
    const Symbol s = other.at(10, 3);
    EXPECT_FALSE(PermutationEquivalent(base, other.WithCell(10, 3, (s + 1) % 8)));
  }
}

TEST(PermutationEquivalent, RefusesSymbolRelabeling) {
  // Swapping symbols 1 and 2 everywhere is not a row/column permutation.
  const CoveringArray a = CoveringArray::FromRows(1, 3, {{0, 1, 1}, {0, 2, 2}, {1, 1, 1}});
  const CoveringArray b = CoveringArray::FromRows(1, 3, {{0, 2, 2}, {0, 1, 1}, {2, 2, 2}});
  EXPECT_FALSE(PermutationEquivalent(a, b));
}

TEST(PermutationEquivalent, ShapeMismatchThrows) {
  EXPECT_EQ(CodeOf([] {
              PermutationEquivalent(fixtures::ZeroSumNine(),
                                    fixtures::FourQubitPairwise());
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(Arithmetic, BinomialAndCheckedPow) {
  EXPECT_EQ(Binomial(6, 3), 20u);
  EXPECT_EQ(Binomial(512, 2), 130816u);
  EXPECT_EQ(Binomial(5, 7), 0u);
  EXPECT_EQ(Binomial(62, 31), 465428353255261088ULL);
  EXPECT_EQ(CodeOf([] { Binomial(200, 100); }), ErrorCode::kOverflow);
  EXPECT_EQ(CheckedPow(8, 2), 64u);
  EXPECT_EQ(CodeOf([] { CheckedPow(3, 10, 1000); }), ErrorCode::kSizeOverflow);
  EXPECT_EQ(CodeOf([] { CheckedPow(2, 64); }), ErrorCode::kSizeOverflow);
}

}  // namespace
}  // namespace qtp
