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

#include "qtp/fixtures.h"

#include <string>

#include "qtp/error.h"

namespace qtp::fixtures {
namespace {

const std::vector<Row> kQutritSeedRows = {
    {0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2, 2, 2},
    {3, 3, 3, 3, 3, 3, 3, 3},
    {4, 4, 4, 4, 4, 4, 4, 4},
    {5, 5, 5, 5, 5, 5, 5, 5},
    {6, 6, 6, 6, 6, 6, 6, 6},
    {7, 7, 7, 7, 7, 7, 7, 7},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 3, 4, 5, 6, 7, 1},
    {0, 3, 4, 5, 6, 7, 1, 2},
    {0, 4, 5, 6, 7, 1, 2, 3},
    {0, 5, 6, 7, 1, 2, 3, 4},
    {0, 6, 7, 1, 2, 3, 4, 5},
    {0, 7, 1, 2, 3, 4, 5, 6},
    {1, 0, 4, 7, 2, 6, 5, 3},
    {1, 4, 7, 2, 6, 5, 3, 0},
    {1, 7, 2, 6, 5, 3, 0, 4},
    {1, 2, 6, 5, 3, 0, 4, 7},
    {1, 6, 5, 3, 0, 4, 7, 2},
    {1, 5, 3, 0, 4, 7, 2, 6},
    {1, 3, 0, 4, 7, 2, 6, 5},
    {2, 4, 0, 5, 1, 3, 7, 6},
    {2, 0, 5, 1, 3, 7, 6, 4},
    {2, 5, 1, 3, 7, 6, 4, 0},
    {2, 1, 3, 7, 6, 4, 0, 5},
    {2, 3, 7, 6, 4, 0, 5, 1},
    {2, 7, 6, 4, 0, 5, 1, 3},
    {2, 6, 4, 0, 5, 1, 3, 7},
    {3, 7, 5, 0, 6, 2, 4, 1},
    {3, 5, 0, 6, 2, 4, 1, 7},
    {3, 0, 6, 2, 4, 1, 7, 5},
    {3, 6, 2, 4, 1, 7, 5, 0},
    {3, 2, 4, 1, 7, 5, 0, 6},
    {3, 4, 1, 7, 5, 0, 6, 2},
    {3, 1, 7, 5, 0, 6, 2, 4},
    {4, 2, 1, 6, 0, 7, 3, 5},
    {4, 1, 6, 0, 7, 3, 5, 2},
    {4, 6, 0, 7, 3, 5, 2, 1},
    {4, 0, 7, 3, 5, 2, 1, 6},
    {4, 7, 3, 5, 2, 1, 6, 0},
    {4, 3, 5, 2, 1, 6, 0, 7},
    {4, 5, 2, 1, 6, 0, 7, 3},
    {5, 6, 3, 2, 7, 0, 1, 4},
    {5, 3, 2, 7, 0, 1, 4, 6},
    {5, 2, 7, 0, 1, 4, 6, 3},
    {5, 7, 0, 1, 4, 6, 3, 2},
    {5, 0, 1, 4, 6, 3, 2, 7},
    {5, 1, 4, 6, 3, 2, 7, 0},
    {5, 4, 6, 3, 2, 7, 0, 1},
    {6, 5, 7, 4, 3, 1, 0, 2},
    {6, 7, 4, 3, 1, 0, 2, 5},
    {6, 4, 3, 1, 0, 2, 5, 7},
    {6, 3, 1, 0, 2, 5, 7, 4},
    {6, 1, 0, 2, 5, 7, 4, 3},
    {6, 0, 2, 5, 7, 4, 3, 1},
    {6, 2, 5, 7, 4, 3, 1, 0},
    {7, 3, 6, 1, 5, 4, 2, 0},
    {7, 6, 1, 5, 4, 2, 0, 3},
    {7, 1, 5, 4, 2, 0, 3, 6},
    {7, 5, 4, 2, 0, 3, 6, 1},
    {7, 4, 2, 0, 3, 6, 1, 5},
    {7, 2, 0, 3, 6, 1, 5, 4},
    {7, 0, 3, 6, 1, 5, 4, 2},
};

const std::vector<Row> kFourQubitRows = {
    {0, 0, 0, 0},
    {2, 1, 1, 0},
    {1, 2, 2, 0},
    {1, 1, 0, 1},
    {0, 2, 1, 1},
    {2, 0, 2, 1},
    {2, 2, 0, 2},
    {1, 0, 1, 2},
    {0, 1, 2, 2},
};

const std::vector<Row> kZeroSumNineRows = {
    {0, 0, 0},
    {0, 1, 2},
    {0, 2, 1},
    {1, 0, 2},
    {1, 1, 1},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
    {2, 2, 2},
};

const std::vector<Row> kSchedulingRows = {
    {0, 1, 2, 2, 1, 0},
    {0, 1, 2, 0, 2, 1},
    {0, 2, 2, 1, 0, 1},
    {0, 0, 2, 1, 1, 2},
    {0, 1, 0, 1, 2, 2},
    {0, 1, 1, 2, 0, 2},
    {0, 0, 1, 2, 2, 1},
    {1, 0, 2, 2, 0, 1},
    {2, 1, 0, 2, 0, 1},
    {0, 2, 0, 2, 1, 1},
    {0, 2, 1, 0, 1, 2},
    {1, 0, 1, 0, 2, 2},
    {1, 0, 2, 1, 2, 0},
    {1, 1, 0, 2, 2, 0},
    {2, 1, 1, 0, 2, 0},
    {0, 2, 1, 1, 2, 0},
    {2, 2, 0, 1, 1, 0},
    {1, 2, 0, 1, 0, 2},
    {1, 0, 0, 2, 1, 2},
    {1, 0, 1, 1, 0, 2},
    {1, 1, 1, 1, 1, 1},
    {2, 2, 1, 0, 0, 1},
    {1, 2, 0, 0, 2, 1},
    {1, 2, 2, 0, 1, 0},
    {2, 0, 2, 0, 1, 1},
    {2, 1, 0, 0, 1, 2},
    {1, 1, 2, 0, 0, 2},
    {2, 1, 2, 1, 0, 0},
    {0, 1, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0},
    {2, 0, 0, 1, 2, 1},
    {2, 0, 1, 2, 1, 0},
    {2, 2, 2, 2, 2, 2},
};

constexpr std::size_t kSchedulingWorstOrder[] = {
    0, 19, 13, 21, 3, 22, 27, 11, 28, 24, 4,
    7, 14, 2, 18, 1, 16, 6, 26, 9, 12, 10,
    8, 15, 25, 5, 23, 30, 17, 31, 29, 20, 32,
};

constexpr BestKnownEntry kBestKnown[] = {
    {2, 2, 4, 9},
    {2, 3, 4, 27},
    {2, 4, 4, 81},
    {2, 2, 5, 11},
    {2, 3, 5, 33},
    {2, 4, 5, 81},
    {2, 5, 5, 243},
    {2, 2, 6, 12},
    {2, 3, 6, 33},
    {2, 4, 6, 111},
    {2, 5, 6, 243},
    {2, 6, 6, 729},
    {2, 2, 7, 12},
    {2, 3, 7, 39},
    {2, 4, 7, 123},
    {2, 5, 7, 351},
    {2, 6, 7, 729},
    {2, 2, 8, 13},
    {2, 3, 8, 42},
    {2, 4, 8, 135},
    {2, 5, 8, 405},
    {2, 6, 8, 1134},
    {2, 2, 9, 13},
    {2, 3, 9, 45},
    {2, 4, 9, 135},
    {2, 5, 9, 405},
    {2, 6, 9, 1377},
    {2, 2, 10, 14},
    {2, 3, 10, 45},
    {2, 4, 10, 159},
    {2, 5, 10, 405},
    {2, 6, 10, 1431},
    {2, 2, 11, 15},
    {2, 3, 11, 45},
    {2, 4, 11, 159},
    {2, 5, 11, 483},
    {2, 6, 11, 1431},
    {2, 2, 12, 15},
    {2, 3, 12, 45},
    {2, 4, 12, 189},
    {2, 5, 12, 483},
    {2, 6, 12, 1455},
    {2, 2, 13, 15},
    {2, 3, 13, 45},
    {2, 4, 13, 212},
    {2, 5, 13, 687},
    {2, 6, 13, 2181},
    {2, 2, 14, 15},
    {2, 3, 14, 45},
    {2, 4, 14, 231},
    {2, 5, 14, 805},
    {2, 6, 14, 2701},
    {2, 2, 15, 15},
    {2, 3, 15, 51},
    {2, 4, 15, 231},
    {2, 5, 15, 842},
    {2, 6, 15, 2901},
    {2, 2, 16, 15},
    {2, 3, 16, 51},
    {2, 4, 16, 237},
    {2, 5, 16, 920},
    {2, 6, 16, 3126},
    {2, 2, 17, 15},
    {2, 3, 17, 58},
    {2, 4, 17, 237},
    {2, 5, 17, 963},
    {2, 6, 17, 3633},
    {2, 2, 18, 15},
    {2, 3, 18, 59},
    {2, 4, 18, 271},
    {2, 5, 18, 1034},
    {2, 6, 18, 3839},
    {2, 2, 19, 15},
    {2, 3, 19, 59},
    {2, 4, 19, 271},
    {2, 5, 19, 1064},
    {2, 6, 19, 3961},
    {2, 2, 20, 15},
    {2, 3, 20, 59},
    {2, 4, 20, 271},
    {2, 5, 20, 1108},
    {2, 6, 20, 4006},
    {3, 2, 8, 64},
    {3, 3, 8, 512},
    {3, 4, 8, 4096},
    {3, 5, 8, 32768},
    {3, 6, 8, 262144},
    {3, 2, 9, 64},
    {3, 3, 9, 512},
    {3, 4, 9, 4096},
    {3, 5, 9, 32768},
    {3, 6, 9, 262144},
    {3, 2, 10, 76},
    {3, 3, 10, 512},
    {3, 4, 10, 6125},
    {3, 5, 10, 53681},
    {3, 6, 10, 450372},
    {3, 2, 11, 78},
    {3, 3, 11, 960},
    {3, 4, 11, 7680},
    {3, 5, 11, 61440},
    {3, 6, 11, 450372},
    {3, 2, 12, 84},
    {3, 3, 12, 960},
    {3, 4, 12, 7680},
    {3, 5, 12, 61440},
    {3, 6, 12, 491520},
    {3, 2, 13, 84},
    {3, 3, 13, 960},
    {3, 4, 13, 7680},
    {3, 5, 13, 61440},
    {3, 6, 13, 520192},
    {3, 2, 14, 96},
    {3, 3, 14, 960},
    {3, 4, 14, 7680},
    {3, 5, 14, 65024},
    {3, 6, 14, 753656},
    {3, 2, 15, 96},
    {3, 3, 15, 960},
    {3, 4, 15, 7680},
    {3, 5, 15, 65024},
    {3, 6, 15, 753656},
    {3, 2, 16, 102},
    {3, 3, 16, 960},
    {3, 4, 16, 8128},
    {3, 5, 16, 94200},
    {3, 6, 16, 753656},
    {3, 2, 17, 104},
    {3, 3, 17, 960},
    {3, 4, 17, 8128},
    {3, 5, 17, 94200},
    {3, 6, 17, 753656},
    {3, 2, 18, 104},
    {3, 3, 18, 960},
    {3, 4, 18, 8128},
    {3, 5, 18, 94200},
    {3, 6, 18, 782328},
    {3, 2, 19, 107},
    {3, 3, 19, 1016},
    {3, 4, 19, 8128},
    {3, 5, 19, 94200},
    {3, 6, 19, 983032},
    {3, 2, 20, 108},
    {3, 3, 20, 1016},
    {3, 4, 20, 8184},
    {3, 5, 20, 94200},
    {3, 6, 20, 983032},
};

constexpr FixtureInfo kFixtures[] = {
    {"appendix_a_ca64",
     "CA(64;2,8,8) with constant rows r0..r7 first; base-expansion seed"},
    {"eq3_ca9_2_4_3", "CA(9;2,4,3), four-qubit pairwise Pauli scheme"},
    {"eq7_ca9_2_3_3", "CA(9;2,3,3) from the zero-sum construction"},
    {"table2_ca33_3_6_3",
     "33x6 ternary scheduling benchmark (min-cost order, total 98)"},
    {"table1_best_known", "best known covering numbers, d=2 and d=3"},
};

}  // namespace

CoveringArray QutritPairwiseSeed() {
  return CoveringArray::FromRows(2, 8, kQutritSeedRows,
                                 "fixture:appendix_a_ca64");
}

CoveringArray FourQubitPairwise() {
  return CoveringArray::FromRows(2, 3, kFourQubitRows,
                                 "fixture:eq3_ca9_2_4_3");
}

CoveringArray ZeroSumNine() {
  return CoveringArray::FromRows(2, 3, kZeroSumNineRows,
                                 "fixture:eq7_ca9_2_3_3");
}

CoveringArray SchedulingBenchmark() {
  return CoveringArray::FromRows(3, 3, kSchedulingRows,
                                 "fixture:table2_ca33_3_6_3");
}

std::vector<std::size_t> SchedulingBenchmarkWorstOrder() {
  return {std::begin(kSchedulingWorstOrder), std::end(kSchedulingWorstOrder)};
}

std::span<const BestKnownEntry> BestKnownTable() { return kBestKnown; }

std::span<const FixtureInfo> List() { return kFixtures; }

CoveringArray ByName(std::string_view name) {
  if (name == "appendix_a_ca64") return QutritPairwiseSeed();
  if (name == "eq3_ca9_2_4_3") return FourQubitPairwise();
  if (name == "eq7_ca9_2_3_3") return ZeroSumNine();
  if (name == "table2_ca33_3_6_3") return SchedulingBenchmark();
  throw Error(ErrorCode::kInvalidArgument,
              "no covering-array fixture named '" + std::string(name) + "'");
}

}  // namespace qtp::fixtures
