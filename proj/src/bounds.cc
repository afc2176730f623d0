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

#include "qtp/bounds.h"

#include <cmath>

#include "qtp/constructions.h"
#include "qtp/error.h"
#include "qtp/finite_field.h"
#include "qtp/fixtures.h"

namespace qtp {
namespace {

void CheckBoundArgs(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  if (k < 2 || n < k || d < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "bounds need n >= k >= 2 and d >= 2");
  }
}

// ln(V / (V - 1)) for V = (d^2 - 1)^k, accurate for huge V.
long double LogRatio(std::uint64_t k, std::uint64_t d) {
  const long double v = std::pow(static_cast<long double>(d * d - 1),
                                 static_cast<long double>(k));
  return std::log1p(1.0L / (v - 1.0L));
}

}  // namespace

std::uint64_t LowerBound(std::uint64_t k, std::uint64_t d) {
  if (k < 1 || d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "lower bound needs k >= 1, d >= 2");
  }
  const std::uint64_t base = d * d - 1;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (result > (std::uint64_t{1} << 63) / base) {
      throw Error(ErrorCode::kOverflow, "(d^2-1)^k exceeds 2^63");
    }
    result *= base;
  }
  return result;
}

double DiscreteUpperBoundValue(std::uint64_t n, std::uint64_t k,
                               std::uint64_t d) {
  CheckBoundArgs(n, k, d);
  const long double q = LogRatio(k, d);
  const long double log_binom =
      std::lgamma(static_cast<long double>(n) + 1) -
      std::lgamma(static_cast<long double>(k) + 1) -
      std::lgamma(static_cast<long double>(n - k) + 1);
  const long double numerator =
      log_binom +
      static_cast<long double>(k) * std::log(static_cast<long double>(d * d - 1)) +
      std::log(q) + 1.0L;
  return static_cast<double>(numerator / q);
}

std::uint64_t DiscreteUpperBound(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t d) {
  return static_cast<std::uint64_t>(std::ceil(DiscreteUpperBoundValue(n, k, d)));
}

double SljEstimate(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  CheckBoundArgs(n, k, d);
  return static_cast<double>(static_cast<long double>(k) *
                             std::log(static_cast<long double>(n)) /
                             LogRatio(k, d));
}

std::uint64_t QutritPairwiseBound(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need n >= 2");
  return 8 + 56 * CeilLog(n, 8);
}

std::optional<std::uint64_t> BestKnown(std::uint64_t k, std::uint64_t n,
                                       std::uint64_t d) {
  for (const auto& e : fixtures::BestKnownTable()) {
    if (static_cast<std::uint64_t>(e.k) == k &&
        static_cast<std::uint64_t>(e.n) == n &&
        static_cast<std::uint64_t>(e.d) == d) {
      return static_cast<std::uint64_t>(e.value);
    }
  }
  return std::nullopt;
}

BoundsReport ComputeBounds(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  CheckBoundArgs(n, k, d);
  BoundsReport report;
  report.n = n;
  report.k = k;
  report.d = d;
  report.lower = LowerBound(k, d);
  report.discrete_upper = DiscreteUpperBound(n, k, d);
  report.slj_estimate = SljEstimate(n, k, d);
  report.best_known = BestKnown(k, n, d);
  if (d == 3 && k == 2) report.qutrit_upper = QutritPairwiseBound(n);

  const std::uint64_t v = d * d - 1;
  auto consider = [&](std::uint64_t rows, const char* name) {
    if (!report.construction_upper || rows < *report.construction_upper) {
      report.construction_upper = rows;
      report.construction = name;
    }
  };
  // Dropping columns keeps coverage, so a construction on more columns
  // serves any smaller n.
  if (n <= k + 1) consider(report.lower, "zero-sum");
  const bool prime_power = IsPrimePower(v) && v <= GaloisField::kMaxOrder;
  if (prime_power && v > k && n <= v + 1) consider(report.lower, "bush");
  if (k == 2 && prime_power) {
    consider(v + v * (v - 1) * CeilLog(n, v), "base-expand");
  }
  return report;
}

}  // namespace qtp
