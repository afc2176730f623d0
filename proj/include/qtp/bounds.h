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

#ifndef QTP_BOUNDS_H_
#define QTP_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>

namespace qtp {

// (d^2 - 1)^k, the trivial lower bound on the number of settings. Throws
// Error(kOverflow) beyond 2^63.
std::uint64_t LowerBound(std::uint64_t k, std::uint64_t d);

// Probabilistic upper bound, rounded up:
//   [ln C(n,k) + k ln(d^2-1) + ln ln(V/(V-1)) + 1] / ln(V/(V-1)),
// V = (d^2-1)^k, natural logarithms. Requires n >= k >= 2, d >= 2.
std::uint64_t DiscreteUpperBound(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t d);
// Unrounded value of the same expression.
double DiscreteUpperBoundValue(std::uint64_t n, std::uint64_t k,
                               std::uint64_t d);

// Asymptotic k ln n / ln(V/(V-1)) with the o(1) term dropped. An estimate,
// not a certified bound.
double SljEstimate(std::uint64_t n, std::uint64_t k, std::uint64_t d);

// 8 + 56 ceil(log_8 n) for n >= 2, integer arithmetic only.
std::uint64_t QutritPairwiseBound(std::uint64_t n);

// Entry of the embedded best-known table, if (k, n, d) is listed.
std::optional<std::uint64_t> BestKnown(std::uint64_t k, std::uint64_t n,
                                       std::uint64_t d);

struct BoundsReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t lower = 0;
  std::uint64_t discrete_upper = 0;
  double slj_estimate = 0.0;
  // Smallest row count among the explicit constructions that apply here.
  std::optional<std::uint64_t> construction_upper;
  std::string construction;
  std::optional<std::uint64_t> best_known;
  // Only for d = 3, k = 2.
  std::optional<std::uint64_t> qutrit_upper;
  std::string log_base = "natural";
};

BoundsReport ComputeBounds(std::uint64_t n, std::uint64_t k, std::uint64_t d);

}  // namespace qtp

#endif  // QTP_BOUNDS_H_
