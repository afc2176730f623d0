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

#ifndef QTP_FIXTURES_H_
#define QTP_FIXTURES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtp/covering_array.h"

namespace qtp::fixtures {

// CA(64; 2, 8, 8) with the eight constant rows first. The canonical seed for
// the 8-symbol base expansion.
CoveringArray QutritPairwiseSeed();

// CA(9; 2, 4, 3): the nine-setting four-qubit pairwise scheme with
// X -> 0, Y -> 1, Z -> 2.
CoveringArray FourQubitPairwise();

// CA(9; 2, 3, 3) in zero-sum row order.
CoveringArray ZeroSumNine();

// 33 six-column ternary settings used as the scheduling benchmark, listed in
// the order whose switching cost is 98. Tagged strength 3 as published; the
// rows cover every pair of columns but leave 17 triples uncovered.
CoveringArray SchedulingBenchmark();

// The same 33 rows in the published order of switching cost 185, as indices
// into SchedulingBenchmark().
std::vector<std::size_t> SchedulingBenchmarkWorstOrder();

struct BestKnownEntry {
  int d;
  int k;
  int n;
  long long value;
};

// Best known upper bounds on the minimum number of settings for
// d in {2, 3}, 2 <= k <= 6 and n in [4, 20] (d = 2) or [8, 20] (d = 3).
std::span<const BestKnownEntry> BestKnownTable();

struct FixtureInfo {
  std::string_view name;  // also the file stem under fixtures/
  std::string_view description;
};

std::span<const FixtureInfo> List();
// Array fixtures by name; throws Error(kInvalidArgument) for unknown names
// (including "table1_best_known", which is not an array).
CoveringArray ByName(std::string_view name);

}  // namespace qtp::fixtures

#endif  // QTP_FIXTURES_H_
