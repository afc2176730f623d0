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

#include "qtp/constructions.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "qtp/error.h"
#include "qtp/finite_field.h"
#include "qtp/random.h"

namespace qtp {

std::uint64_t DefaultRowCap() {
  if (const char* env = std::getenv("QTP_ROW_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultRowCap;
}

CoveringArray ZeroSum(std::size_t k, std::size_t v, std::uint64_t row_cap) {
  if (k < 1 || v < 2) {
    throw Error(ErrorCode::kInvalidArgument, "zero-sum needs k >= 1, v >= 2");
  }
  const std::uint64_t rows = CheckedPow(v, k, row_cap);
  std::vector<Symbol> cells;
  cells.reserve(rows * (k + 1));
  std::vector<Symbol> tuple(k, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::size_t sum = 0;
    for (Symbol s : tuple) sum += s;
    cells.insert(cells.end(), tuple.begin(), tuple.end());
    cells.push_back(static_cast<Symbol>((v - sum % v) % v));
    for (std::size_t j = k; j-- > 0;) {
      if (++tuple[j] < v) break;
      tuple[j] = 0;
    }
  }
  return CoveringArray(k, k + 1, v, std::move(cells),
                       "zero-sum(k=" + std::to_string(k) +
                           ",v=" + std::to_string(v) + ")");
}

CoveringArray Bush(std::size_t k, std::size_t v, std::uint64_t row_cap) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "bush needs k >= 1");
  if (v > GaloisField::kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument, "bush needs v <= 256");
  }
  const GaloisField field(static_cast<std::uint32_t>(v));
  if (v <= k) {
    throw Error(ErrorCode::kHypothesisViolated,
                "bush needs v > k (v=" + std::to_string(v) +
                    ", k=" + std::to_string(k) + ")");
  }
  const std::uint64_t rows = CheckedPow(v, k, row_cap);
  std::vector<Symbol> cells;
  cells.reserve(rows * (v + 1));
  std::vector<FieldElement> coeffs(k, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t x = 0; x < v; ++x) {
      cells.push_back(field.EvalPoly(coeffs, static_cast<FieldElement>(x)));
    }
    cells.push_back(coeffs[k - 1]);
    for (std::size_t j = 0; j < k; ++j) {
      if (++coeffs[j] < v) break;
      coeffs[j] = 0;
    }
  }
  return CoveringArray(k, v + 1, v, std::move(cells),
                       "bush(k=" + std::to_string(k) +
                           ",v=" + std::to_string(v) + ")");
}

std::size_t CeilLog(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw Error(ErrorCode::kInvalidArgument, "log base below 2");
  std::size_t digits = 0;
  std::uint64_t reach = 1;
  while (reach < n) {
    reach = reach > UINT64_MAX / base ? UINT64_MAX : reach * base;
    ++digits;
  }
  return digits;
}

std::vector<Row> BaseRepresentation(std::size_t n, std::size_t v) {
  if (n < 2 || v < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "base representation needs n >= 2, v >= 2");
  }
  const std::size_t digits = CeilLog(n, v);
  std::vector<Row> matrix(digits, Row(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t rest = j;
    for (std::size_t d = digits; d-- > 0;) {
      matrix[d][j] = static_cast<Symbol>(rest % v);
      rest /= v;
    }
  }
  return matrix;
}

CoveringArray BaseExpand(std::size_t n, const CoveringArray& seed,
                         std::uint64_t row_cap) {
  const std::size_t v = seed.alphabet();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "base-expand needs n >= 2");
  if (seed.columns() != v || seed.rows() != v * v) {
    throw Error(ErrorCode::kSeedInvalid,
                "seed must be v^2 x v, got " + std::to_string(seed.rows()) +
                    "x" + std::to_string(seed.columns()) +
                    " with v=" + std::to_string(v));
  }
  if (!Verify(seed.WithStrength(2)).valid) {
    throw Error(ErrorCode::kSeedInvalid,
                "seed is not a strength-2 covering array");
  }
  if (!ContainsConstantRows(seed)) {
    throw Error(ErrorCode::kSeedInvalid, "seed lacks some constant row");
  }

  const auto digits = BaseRepresentation(n, v);
  const std::uint64_t rows = v + v * (v - 1) * digits.size();
  if (rows > row_cap) {
    throw Error(ErrorCode::kSizeOverflow,
                std::to_string(rows) + " rows exceed the row cap");
  }
  std::vector<Symbol> cells;
  cells.reserve(rows * n);
  for (std::size_t s = 0; s < v; ++s) {
    cells.insert(cells.end(), n, static_cast<Symbol>(s));
  }
  for (std::size_t r = 0; r < seed.rows(); ++r) {
    auto row = seed.row(r);
    if (std::all_of(row.begin(), row.end(),
                    [&](Symbol s) { return s == row.front(); })) {
      continue;
    }
    for (const Row& digit_row : digits) {
      for (Symbol d : digit_row) cells.push_back(row[d]);
    }
  }
  return CoveringArray(2, n, v, std::move(cells),
                       "base-expand(n=" + std::to_string(n) + ",seed=" +
                           seed.provenance() + ")");
}

namespace {

class GreedyState {
 public:
  GreedyState(std::size_t k, std::size_t n, std::size_t v)
      : k_(k), n_(n), v_(v), tuples_(CheckedPow(v, k, std::uint64_t{1} << 32)) {
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      subsets_.insert(subsets_.end(), subset.begin(), subset.end());
      // Advance to the lexicographic successor.
      std::size_t i = k;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (subset[i] < n - k + i) {
          ++subset[i];
          for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    } while (true);
    subset_count_ = subsets_.size() / k;
    covered_.assign(subset_count_ * tuples_, false);
    uncovered_in_.assign(subset_count_, tuples_);
    uncovered_total_ = subset_count_ * tuples_;
  }

  std::uint64_t uncovered_total() const { return uncovered_total_; }

  std::uint64_t TupleIndex(std::size_t subset, const Row& row) const {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < k_; ++j) {
      index = index * v_ + row[subsets_[subset * k_ + j]];
    }
    return index;
  }

  std::uint64_t Gain(const Row& row) const {
    std::uint64_t gain = 0;
    for (std::size_t s = 0; s < subset_count_; ++s) {
      if (uncovered_in_[s] == 0) continue;
      if (!covered_[s * tuples_ + TupleIndex(s, row)]) ++gain;
    }
    return gain;
  }

  void Commit(const Row& row) {
    for (std::size_t s = 0; s < subset_count_; ++s) {
      const std::uint64_t slot = s * tuples_ + TupleIndex(s, row);
      if (!covered_[slot]) {
        covered_[slot] = true;
        --uncovered_in_[s];
        --uncovered_total_;
      }
    }
  }

  // Random row that realizes one uncovered interaction. The interaction is
  // drawn by picking a uniformly random uncovered slot.
  Row Candidate(Rng& rng) const {
    Row row(n_);
    for (auto& cell : row) cell = static_cast<Symbol>(UniformBelow(rng, v_));
    std::uint64_t pick = UniformBelow(rng, uncovered_total_);
    std::size_t s = 0;
    while (pick >= uncovered_in_[s]) {
      pick -= uncovered_in_[s];
      ++s;
    }
    std::uint64_t index = 0;
    for (;; ++index) {
      if (!covered_[s * tuples_ + index]) {
        if (pick == 0) break;
        --pick;
      }
    }
    for (std::size_t j = k_; j-- > 0;) {
      row[subsets_[s * k_ + j]] = static_cast<Symbol>(index % v_);
      index /= v_;
    }
    return row;
  }

 private:
  std::size_t k_;
  std::size_t n_;
  std::size_t v_;
  std::uint64_t tuples_;
  std::vector<std::size_t> subsets_;
  std::size_t subset_count_ = 0;
  std::vector<bool> covered_;
  std::vector<std::uint64_t> uncovered_in_;
  std::uint64_t uncovered_total_ = 0;
};

}  // namespace

CoveringArray GreedyGenerate(std::size_t k, std::size_t n, std::size_t v,
                             std::uint64_t seed, GreedyOptions options) {
  if (k < 1 || n < k || v < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "greedy needs n >= k >= 1 and v >= 2");
  }
  const std::uint64_t min_rows = CheckedPow(v, k, options.row_cap);
  const std::size_t candidates =
      options.candidates_per_step != 0
          ? options.candidates_per_step
          : static_cast<std::size_t>(std::min<std::uint64_t>(
                10 * min_rows, 1'000'000));

  GreedyState state(k, n, v);
  Rng rng(DeriveSeed(seed, 0x67726565ULL));
  std::vector<Symbol> cells;
  std::uint64_t rows = 0;
  std::vector<Row> pool(candidates);
  std::vector<std::uint64_t> gains(candidates);
  while (state.uncovered_total() > 0) {
    if (rows >= options.row_cap) {
      throw Error(ErrorCode::kSizeOverflow, "greedy generator hit the row cap");
    }
    for (auto& candidate : pool) candidate = state.Candidate(rng);

    const unsigned workers = std::max(
        1u, std::min<unsigned>(options.threads,
                               static_cast<unsigned>(candidates)));
    if (workers == 1) {
      for (std::size_t c = 0; c < candidates; ++c) gains[c] = state.Gain(pool[c]);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          for (std::size_t c = w; c < candidates; c += workers) {
            gains[c] = state.Gain(pool[c]);
          }
        });
      }
      for (auto& t : threads) t.join();
    }
    const std::size_t best = static_cast<std::size_t>(
        std::max_element(gains.begin(), gains.end()) - gains.begin());
    state.Commit(pool[best]);
    cells.insert(cells.end(), pool[best].begin(), pool[best].end());
    ++rows;
  }
  return CoveringArray(k, n, v, std::move(cells),
                       "greedy(k=" + std::to_string(k) + ",n=" +
                           std::to_string(n) + ",v=" + std::to_string(v) +
                           ",seed=" + std::to_string(seed) + ")");
}

}  // namespace qtp
