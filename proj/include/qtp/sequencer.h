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

#ifndef QTP_SEQUENCER_H_
#define QTP_SEQUENCER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtp/covering_array.h"
#include "qtp/ggm.h"

namespace qtp {

// Switching cost: number of positions where two settings differ. Throws
// Error(kLengthMismatch) for settings of different length.
std::size_t Hamming(std::span<const Symbol> a, std::span<const Symbol> b);
std::size_t Hamming(const MeasurementSetting& a, const MeasurementSetting& b);

// Symmetric, zero-diagonal, nonnegative m x m switching-cost matrix.
class CostMatrix {
 public:
  // Row-major entries; throws Error(kInvalidArgument) if the matrix is not
  // square, symmetric, zero on the diagonal and nonnegative.
  CostMatrix(std::size_t size, std::vector<int> entries);

  std::size_t size() const { return size_; }
  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  int max_entry() const { return max_entry_; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::size_t size_;
  std::vector<int> entries_;
  int max_entry_ = 0;
};

// Throws Error(kInvalidArgument) for fewer than 2 settings and
// Error(kLengthMismatch) for ragged input.
CostMatrix BuildCostMatrix(const std::vector<Row>& settings);
CostMatrix BuildCostMatrix(const CoveringArray& array);

enum class Method { kExact, kHeuristic, kSa, kAuto, kWorst, kIdentity };

std::string_view MethodName(Method method);
// Throws Error(kInvalidArgument) for unknown names.
Method ParseMethod(std::string_view name);

// An execution order over m settings with its open-path cost (no return
// edge): total = sum of C[order[i], order[i+1]].
struct Schedule {
  std::vector<std::size_t> order;
  std::vector<int> step_costs;
  long long total = 0;
  Method method = Method::kIdentity;
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
};

// Throws Error(kInvalidArgument) unless order is a permutation of [0, m).
Schedule MakeSchedule(const CostMatrix& costs, std::vector<std::size_t> order,
                      Method method);
// order is a permutation of [0, m) and the costs recompute from the matrix.
bool IsValidSchedule(const Schedule& schedule, const CostMatrix& costs);

struct SaParams {
  double initial_temperature = 1.0;
  double cooling = 0.995;
  double min_temperature = 1e-3;
  std::uint64_t max_iterations = 1;

  // T0 = max entry * m, alpha = 0.995, Tmin = 1e-3, 20000 m iterations.
  static SaParams Defaults(const CostMatrix& costs);
  // Throws Error(kInvalidParams) unless 0 < alpha < 1, T0 > Tmin > 0 and
  // max_iterations >= 1.
  void Validate() const;
};

inline constexpr std::size_t kHeldKarpCap = 20;
inline constexpr double kDefaultTwoOptBudget = 5.0;

// Exact minimum-cost open Hamiltonian path by subset DP. Throws
// Error(kTooLarge) for m > kHeldKarpCap.
Schedule HeldKarp(const CostMatrix& costs);

// K-means on per-symbol count features (K = max(2, ceil(sqrt m)), 10 seeded
// restarts), clusters chained greedily from the largest one by minimum
// inter-cluster edge, nearest neighbour inside each cluster.
Schedule ClusterNearestNeighbor(const CostMatrix& costs,
                                const std::vector<Row>& settings,
                                std::uint64_t seed = 0);

// First-improvement 2-opt on the open path until no reversal helps or the
// time budget runs out. Never increases the total.
Schedule TwoOpt(const Schedule& start, const CostMatrix& costs,
                double time_budget_s = kDefaultTwoOptBudget);

// Metropolis search with reversal and swap moves (probability 1/2 each) and
// geometric cooling. Returns the best schedule seen, so never worse than
// `start`. Deterministic in (costs, start, params, seed).
Schedule SimulatedAnnealing(const CostMatrix& costs, const Schedule& start,
                            const SaParams& params, std::uint64_t seed);

struct SequenceOptions {
  Method method = Method::kAuto;
  std::uint64_t seed = 0;
  // Defaults from SaParams::Defaults when unset.
  std::optional<SaParams> sa_params;
  double two_opt_budget_s = kDefaultTwoOptBudget;
  // Extra annealing passes started from the primary result, one per derived
  // seed; the best result wins (lowest pass index on ties).
  std::size_t restarts = 0;
  // Workers for the restart passes. Output does not depend on this.
  unsigned threads = 1;
};

// auto: m <= 12 exact, m <= 50 heuristic (clusters + 2-opt), else annealing
// from the cluster solution. The schedule's method is the resolved one.
Schedule Optimize(const std::vector<Row>& settings,
                  const SequenceOptions& options = {});

// Maximizes the total with the same machinery on the negated objective.
Schedule WorstOrder(const std::vector<Row>& settings,
                    const SequenceOptions& options = {});

struct ImprovementReport {
  long long min_total = 0;
  long long max_total = 0;
  // (max - min) / max * 100, or 0 when max is 0.
  double rate_percent = 0.0;
  std::size_t random_trials = 0;
  double random_mean = 0.0;
  // (random_mean - min) / random_mean * 100, or 0 when random_mean is 0.
  double improvement_vs_random_percent = 0.0;
};

double OptimizationRate(long long min_total, long long max_total);

ImprovementReport MakeImprovementReport(const CostMatrix& costs,
                                        const Schedule& best,
                                        const Schedule& worst,
                                        std::size_t random_trials,
                                        std::uint64_t seed);

// Schedule for a uniformly random permutation.
Schedule RandomSchedule(const CostMatrix& costs, Rng& rng);

}  // namespace qtp

#endif  // QTP_SEQUENCER_H_
