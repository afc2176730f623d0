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

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "qtp/error.h"

namespace qtp {

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; cancel before multiplying.
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (result / g > UINT64_MAX / factor) {
      throw Error(ErrorCode::kOverflow, "binomial coefficient overflows");
    }
    result = result / g * factor;
  }
  return result;
}

std::uint64_t CheckedPow(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) {
      throw Error(ErrorCode::kSizeOverflow,
                  std::to_string(base) + "^" + std::to_string(exp) +
                      " exceeds " + std::to_string(cap));
    }
    result *= base;
  }
  return result;
}

CoveringArray::CoveringArray(std::size_t strength, std::size_t columns,
                             std::size_t alphabet, std::vector<Symbol> cells,
                             std::string provenance)
    : strength_(strength),
      columns_(columns),
      alphabet_(alphabet),
      cells_(std::move(cells)),
      provenance_(std::move(provenance)) {
  if (strength_ < 1 || columns_ < strength_ || alphabet_ < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "need k >= 1, n >= k, v >= 2 (got k=" +
                    std::to_string(strength_) + " n=" +
                    std::to_string(columns_) + " v=" +
                    std::to_string(alphabet_) + ")");
  }
  if (cells_.size() % columns_ != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(cells_.size()) +
                    " cells do not form rows of length " +
                    std::to_string(columns_));
  }
  rows_ = cells_.size() / columns_;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= alphabet_) {
      throw Error(ErrorCode::kSymbolOutOfRange,
                  "symbol " + std::to_string(cells_[i]) + " at (row " +
                      std::to_string(i / columns_) + ", column " +
                      std::to_string(i % columns_) + ") not in [0, " +
                      std::to_string(alphabet_) + ")");
    }
  }
}

CoveringArray CoveringArray::FromRows(std::size_t strength,
                                      std::size_t alphabet,
                                      const std::vector<Row>& rows,
                                      std::string provenance) {
  if (rows.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot infer column count from zero rows");
  }
  const std::size_t n = rows.front().size();
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(n));
    }
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return CoveringArray(strength, n, alphabet, std::move(cells),
                       std::move(provenance));
}

std::vector<Row> CoveringArray::RowVectors() const {
  std::vector<Row> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

CoveringArray CoveringArray::WithStrength(std::size_t strength) const {
  return CoveringArray(strength, columns_, alphabet_, cells_, provenance_);
}

CoveringArray CoveringArray::WithProvenance(std::string provenance) const {
  return CoveringArray(strength_, columns_, alphabet_, cells_,
                       std::move(provenance));
}

CoveringArray CoveringArray::WithRowOrder(
    std::span<const std::size_t> order) const {
  std::vector<Symbol> cells;
  cells.reserve(order.size() * columns_);
  for (std::size_t r : order) {
    if (r >= rows_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row index " + std::to_string(r) + " out of range");
    }
    auto span = row(r);
    cells.insert(cells.end(), span.begin(), span.end());
  }
  return CoveringArray(strength_, columns_, alphabet_, std::move(cells),
                       provenance_);
}

CoveringArray CoveringArray::WithoutRow(std::size_t r) const {
  if (r >= rows_) {
    throw Error(ErrorCode::kInvalidArgument,
                "row index " + std::to_string(r) + " out of range");
  }
  std::vector<Symbol> cells = cells_;
  cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(r * columns_),
              cells.begin() + static_cast<std::ptrdiff_t>((r + 1) * columns_));
  return CoveringArray(strength_, columns_, alphabet_, std::move(cells),
                       provenance_);
}

CoveringArray CoveringArray::WithAppendedRow(
    std::span<const Symbol> row) const {
  if (row.size() != columns_) {
    throw Error(ErrorCode::kDimensionMismatch, "appended row has wrong length");
  }
  std::vector<Symbol> cells = cells_;
  cells.insert(cells.end(), row.begin(), row.end());
  return CoveringArray(strength_, columns_, alphabet_, std::move(cells),
                       provenance_);
}

CoveringArray CoveringArray::WithCell(std::size_t r, std::size_t c,
                                      Symbol s) const {
  if (r >= rows_ || c >= columns_) {
    throw Error(ErrorCode::kInvalidArgument, "cell index out of range");
  }
  std::vector<Symbol> cells = cells_;
  cells[r * columns_ + c] = s;
  return CoveringArray(strength_, columns_, alphabet_, std::move(cells),
                       provenance_);
}

CoveringArray CoveringArray::ColumnPrefix(std::size_t count) const {
  if (count > columns_) {
    throw Error(ErrorCode::kInvalidArgument, "column prefix longer than row");
  }
  std::vector<Symbol> cells;
  cells.reserve(rows_ * count);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto span = row(r);
    cells.insert(cells.end(), span.begin(), span.begin() + count);
  }
  return CoveringArray(std::min(strength_, count), count, alphabet_,
                       std::move(cells), provenance_);
}

namespace {

// Advances a strictly increasing k-subset of [0, n) to its lexicographic
// successor. Returns false after the last subset.
bool NextSubset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Scans subsets [begin, end) in lexicographic rank order.
std::vector<MissingInteraction> ScanBlock(const CoveringArray& array,
                                          std::uint64_t begin,
                                          std::uint64_t end,
                                          std::uint64_t tuple_count) {
  const std::size_t k = array.strength();
  const std::size_t n = array.columns();
  const std::size_t v = array.alphabet();
  std::vector<MissingInteraction> missing;
  if (begin >= end) return missing;

  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  for (std::uint64_t i = 0; i < begin; ++i) NextSubset(subset, n);

  std::vector<std::uint64_t> seen((tuple_count + 63) / 64);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t covered = 0;
    for (std::size_t r = 0; r < array.rows() && covered < tuple_count; ++r) {
      std::uint64_t index = 0;
      for (std::size_t c : subset) index = index * v + array.at(r, c);
      const std::uint64_t bit = std::uint64_t{1} << (index % 64);
      if ((seen[index / 64] & bit) == 0) {
        seen[index / 64] |= bit;
        ++covered;
      }
    }
    if (covered < tuple_count) {
      for (std::uint64_t index = 0; index < tuple_count; ++index) {
        if (seen[index / 64] & (std::uint64_t{1} << (index % 64))) continue;
        MissingInteraction m;
        m.columns = subset;
        m.values.resize(k);
        std::uint64_t rest = index;
        for (std::size_t j = k; j-- > 0;) {
          m.values[j] = static_cast<Symbol>(rest % v);
          rest /= v;
        }
        missing.push_back(std::move(m));
      }
    }
    NextSubset(subset, n);
  }
  return missing;
}

}  // namespace

CoverageReport Verify(const CoveringArray& array, VerifyOptions options) {
  const std::uint64_t tuple_count =
      CheckedPow(array.alphabet(), array.strength(), std::uint64_t{1} << 32);
  for (std::size_t i = 0; i < array.cells().size(); ++i) {
    if (array.cells()[i] >= array.alphabet()) {
      throw Error(ErrorCode::kSymbolOutOfRange,
                  "symbol at (row " + std::to_string(i / array.columns()) +
                      ", column " + std::to_string(i % array.columns()) + ")");
    }
  }
  const std::uint64_t subsets = Binomial(array.columns(), array.strength());
  const unsigned workers = std::max(
      1u, static_cast<unsigned>(std::min<std::uint64_t>(options.threads,
                                                        subsets)));

  CoverageReport report;
  report.checked_subsets = subsets;
  if (workers == 1) {
    report.missing = ScanBlock(array, 0, subsets, tuple_count);
  } else {
    std::vector<std::vector<MissingInteraction>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = subsets * w / workers;
      const std::uint64_t end = subsets * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        parts[w] = ScanBlock(array, begin, end, tuple_count);
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) {
      report.missing.insert(report.missing.end(),
                            std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }
  }
  report.valid = report.missing.empty();
  return report;
}

bool CoversExactlyOnce(const CoveringArray& array) {
  const std::uint64_t tuple_count =
      CheckedPow(array.alphabet(), array.strength(), std::uint64_t{1} << 32);
  if (array.rows() != tuple_count) return false;
  return Verify(array).valid;
}

std::size_t CountConstantRows(const CoveringArray& array) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < array.rows(); ++r) {
    auto row = array.row(r);
    if (std::all_of(row.begin(), row.end(),
                    [&](Symbol s) { return s == row.front(); })) {
      ++count;
    }
  }
  return count;
}

bool ContainsConstantRows(const CoveringArray& array) {
  std::vector<bool> present(array.alphabet(), false);
  for (std::size_t r = 0; r < array.rows(); ++r) {
    auto row = array.row(r);
    if (std::all_of(row.begin(), row.end(),
                    [&](Symbol s) { return s == row.front(); })) {
      present[row.front()] = true;
    }
  }
  return std::all_of(present.begin(), present.end(), [](bool b) { return b; });
}

namespace {

class EquivalenceSearch {
 public:
  EquivalenceSearch(const CoveringArray& a, const CoveringArray& b)
      : a_(a), b_(b), used_(b.columns(), false) {
    const std::size_t v = a.alphabet();
    histogram_a_.assign(a.columns(), std::vector<std::size_t>(v, 0));
    histogram_b_.assign(b.columns(), std::vector<std::size_t>(v, 0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.columns(); ++c) {
        ++histogram_a_[c][a.at(r, c)];
        ++histogram_b_[c][b.at(r, c)];
      }
    }
  }

  bool Run() {
    std::vector<std::size_t> classes_a(a_.rows(), 0);
    std::vector<std::size_t> classes_b(b_.rows(), 0);
    return Extend(0, classes_a, classes_b);
  }

 private:
  // Rows of `a` restricted to columns 0..depth-1 and rows of `b` restricted
  // to the images of those columns are jointly labelled by prefix class; the
  // partial map is viable iff both sides have the same class counts.
  bool Extend(std::size_t depth, const std::vector<std::size_t>& classes_a,
              const std::vector<std::size_t>& classes_b) {
    if (depth == a_.columns()) return true;
    for (std::size_t target = 0; target < b_.columns(); ++target) {
      if (used_[target] || histogram_a_[depth] != histogram_b_[target]) {
        continue;
      }
      std::map<std::pair<std::size_t, Symbol>, std::size_t> ids;
      std::vector<std::size_t> next_a(a_.rows());
      std::vector<std::size_t> next_b(b_.rows());
      for (std::size_t r = 0; r < a_.rows(); ++r) {
        auto [it, inserted] =
            ids.try_emplace({classes_a[r], a_.at(r, depth)}, ids.size());
        next_a[r] = it->second;
      }
      for (std::size_t r = 0; r < b_.rows(); ++r) {
        auto [it, inserted] =
            ids.try_emplace({classes_b[r], b_.at(r, target)}, ids.size());
        next_b[r] = it->second;
      }
      std::vector<std::size_t> count(ids.size(), 0);
      for (std::size_t id : next_a) ++count[id];
      bool viable = true;
      for (std::size_t id : next_b) {
        if (count[id]-- == 0) {
          viable = false;
          break;
        }
      }
      if (!viable) continue;
      used_[target] = true;
      if (Extend(depth + 1, next_a, next_b)) return true;
      used_[target] = false;
    }
    return false;
  }

  const CoveringArray& a_;
  const CoveringArray& b_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> histogram_a_;
  std::vector<std::vector<std::size_t>> histogram_b_;
};

}  // namespace

bool PermutationEquivalent(const CoveringArray& a, const CoveringArray& b) {
  if (a.rows() != b.rows() || a.columns() != b.columns() ||
      a.alphabet() != b.alphabet() || a.strength() != b.strength()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "permutation equivalence needs equal (r, n, v, k)");
  }
  return EquivalenceSearch(a, b).Run();
}

}  // namespace qtp
