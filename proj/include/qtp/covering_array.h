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

#ifndef QTP_COVERING_ARRAY_H_
#define QTP_COVERING_ARRAY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qtp {

using Symbol = std::uint32_t;
using Row = std::vector<Symbol>;

// An r x n array over the alphabet [0, v), tagged with the strength k it is
// meant to have. Holding a CoveringArray says nothing about validity; call
// Verify for that. Immutable: the With* methods return modified copies.
class CoveringArray {
 public:
  // `cells` is row-major with rows * columns entries. Throws
  // Error(kInvalidArgument) for k < 1, n < k or v < 2,
  // Error(kDimensionMismatch) if cells.size() is not a multiple of n, and
  // Error(kSymbolOutOfRange) naming the first offending (row, column).
  CoveringArray(std::size_t strength, std::size_t columns,
                std::size_t alphabet, std::vector<Symbol> cells,
                std::string provenance = "");

  static CoveringArray FromRows(std::size_t strength, std::size_t alphabet,
                                const std::vector<Row>& rows,
                                std::string provenance = "");

  std::size_t strength() const { return strength_; }
  std::size_t columns() const { return columns_; }
  std::size_t alphabet() const { return alphabet_; }
  std::size_t rows() const { return rows_; }
  const std::string& provenance() const { return provenance_; }

  Symbol at(std::size_t r, std::size_t c) const {
    return cells_[r * columns_ + c];
  }
  std::span<const Symbol> row(std::size_t r) const {
    return {cells_.data() + r * columns_, columns_};
  }
  const std::vector<Symbol>& cells() const { return cells_; }
  std::vector<Row> RowVectors() const;

  CoveringArray WithStrength(std::size_t strength) const;
  CoveringArray WithProvenance(std::string provenance) const;
  // Copy with rows reordered: result row i is this->row(order[i]).
  CoveringArray WithRowOrder(std::span<const std::size_t> order) const;
  CoveringArray WithoutRow(std::size_t r) const;
  CoveringArray WithAppendedRow(std::span<const Symbol> row) const;
  CoveringArray WithCell(std::size_t r, std::size_t c, Symbol s) const;
  // First `count` columns only.
  CoveringArray ColumnPrefix(std::size_t count) const;

  // Equal shape, strength and cells. Provenance is ignored.
  friend bool operator==(const CoveringArray& a, const CoveringArray& b) {
    return a.strength_ == b.strength_ && a.columns_ == b.columns_ &&
           a.alphabet_ == b.alphabet_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t strength_;
  std::size_t columns_;
  std::size_t alphabet_;
  std::size_t rows_;
  std::vector<Symbol> cells_;
  std::string provenance_;
};

// One uncovered interaction: a strictly increasing column k-subset and the
// value k-tuple no row realizes on it.
struct MissingInteraction {
  std::vector<std::size_t> columns;
  std::vector<Symbol> values;

  friend bool operator==(const MissingInteraction&,
                         const MissingInteraction&) = default;
};

struct CoverageReport {
  bool valid = false;
  // Sorted lexicographically by column tuple, then by value tuple.
  std::vector<MissingInteraction> missing;
  std::uint64_t checked_subsets = 0;

  friend bool operator==(const CoverageReport&,
                         const CoverageReport&) = default;
};

struct VerifyOptions {
  // Column subsets are split into contiguous blocks, one per worker; the
  // merged report is identical to the serial one.
  unsigned threads = 1;
};

// Checks every column k-subset (k = array.strength()) for every value
// k-tuple. Cost is C(n, k) * r * k with O(v^k) scratch per worker.
CoverageReport Verify(const CoveringArray& array, VerifyOptions options = {});

// True iff every k-tuple appears exactly once in every k-subset (orthogonal
// array of index 1). Diagnostic only.
bool CoversExactlyOnce(const CoveringArray& array);

std::size_t CountConstantRows(const CoveringArray& array);
// True iff for every symbol s there is a row equal to (s, s, ..., s).
bool ContainsConstantRows(const CoveringArray& array);

// True iff a row permutation and a column permutation map `a` onto `b`
// exactly (no symbol relabeling). Throws Error(kDimensionMismatch) unless
// both have the same (r, n, v, k).
bool PermutationEquivalent(const CoveringArray& a, const CoveringArray& b);

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);
// base^exp, throwing Error(kSizeOverflow) above `cap`.
std::uint64_t CheckedPow(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t cap = UINT64_MAX);

}  // namespace qtp

#endif  // QTP_COVERING_ARRAY_H_
