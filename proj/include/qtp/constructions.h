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

#ifndef QTP_CONSTRUCTIONS_H_
#define QTP_CONSTRUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qtp/covering_array.h"

namespace qtp {

inline constexpr std::uint64_t kDefaultRowCap = 10'000'000;

// kDefaultRowCap, or the value of QTP_ROW_CAP when that is a positive
// integer.
std::uint64_t DefaultRowCap();

// CA(v^k; k, k+1, v): rows (a_1, ..., a_k, -(a_1 + ... + a_k) mod v) for all
// k-tuples in lexicographic order. Throws Error(kSizeOverflow) if v^k exceeds
// row_cap.
CoveringArray ZeroSum(std::size_t k, std::size_t v,
                      std::uint64_t row_cap = DefaultRowCap());

// CA(v^k; k, v+1, v) for a prime power v > k. Row i evaluates the i-th
// polynomial f = a_0 + a_1 x + ... + a_{k-1} x^{k-1} of degree < k at every
// field element (label order), then appends a_{k-1}. Polynomials are
// enumerated with a_0 varying fastest: 0, 1, ..., v-1, x, 1+x, ...
// Throws Error(kNotAPrimePower) or Error(kHypothesisViolated) for v <= k.
CoveringArray Bush(std::size_t k, std::size_t v,
                   std::uint64_t row_cap = DefaultRowCap());

// Number of base-v digits needed for 0..n-1, i.e. ceil(log_v n) for n >= 2,
// computed with integers only.
std::size_t CeilLog(std::uint64_t n, std::uint64_t base);

// ceil(log_v n) x n digit matrix: column j holds the base-v digits of j, most
// significant digit in the first row.
std::vector<Row> BaseRepresentation(std::size_t n, std::size_t v);

// Strength-2 array on n columns from a CA(v^2; 2, v, v) seed that contains
// all v constant rows: the v constant rows of length n, then for every
// non-constant seed row (in seed order) the digit matrix of
// BaseRepresentation(n, v) with digit j replaced by the row's j-th entry.
// Result has v + v(v-1) ceil(log_v n) rows. Throws Error(kSeedInvalid).
CoveringArray BaseExpand(std::size_t n, const CoveringArray& seed,
                         std::uint64_t row_cap = DefaultRowCap());

struct GreedyOptions {
  // 0 selects 10 * v^k candidate rows per step.
  std::size_t candidates_per_step = 0;
  std::uint64_t row_cap = DefaultRowCap();
  // Candidate scoring workers; results do not depend on this.
  unsigned threads = 1;
};

// Greedy one-row-at-a-time generator for arbitrary (k, n, v). Each step
// samples candidate rows, each seeded with one still-uncovered interaction
// and filled uniformly at random elsewhere, and appends the candidate that
// covers the most uncovered interactions (lowest candidate index on ties).
// Deterministic in (k, n, v, seed, candidates_per_step).
CoveringArray GreedyGenerate(std::size_t k, std::size_t n, std::size_t v,
                             std::uint64_t seed, GreedyOptions options = {});

}  // namespace qtp

#endif  // QTP_CONSTRUCTIONS_H_
