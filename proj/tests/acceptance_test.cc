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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.h"
#include "qtp/bounds.h"
#include "qtp/constructions.h"
#include "qtp/covering_array.h"
#include "qtp/experiment.h"
#include "qtp/fixtures.h"
#include "qtp/ggm.h"
#include "qtp/io.h"
#include "qtp/random.h"
#include "qtp/sequencer.h"

namespace {

using namespace qtp;

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Outcome GoldenConstructions() {
  Outcome o;
  o.Require(ZeroSum(2, 3) == fixtures::ZeroSumNine(), "zero_sum(2,3) differs from fixture");
  o.Require(io::CoveringArrayToCsv(ZeroSum(2, 3)) ==
                io::CoveringArrayToCsv(fixtures::ZeroSumNine()),
            "zero_sum(2,3) serialization differs");
  const CoveringArray printed = CoveringArray::FromRows(
      2, 3,
      {{0, 0, 0, 0}, {1, 1, 1, 0}, {2, 2, 2, 0},
       {0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
       {0, 2, 1, 2}, {1, 0, 2, 2}, {2, 1, 0, 2}});
  o.Require(Bush(2, 3) == printed, "bush(2,3) differs from the printed rows");
  o.Require(PermutationEquivalent(Bush(2, 3), fixtures::FourQubitPairwise()),
            "bush(2,3) not permutation-equivalent to the four-qubit array");
  return o;
}

Outcome SeedValidation() {
  Outcome o;
  const CoveringArray seed = fixtures::QutritPairwiseSeed();
  o.Require(seed.strength() == 2 && seed.alphabet() == 8 && seed.rows() == 64 &&
                seed.columns() == 8,
            "unexpected shape");
  o.Require(Verify(seed).valid, "not a strength-2 covering array");
  o.Require(CountConstantRows(seed) == 8, "constant rows != 8");
  return o;
}

Outcome OctalBaseExpansion() {
  Outcome o;
  const CoveringArray seed = fixtures::QutritPairwiseSeed();
  for (std::size_t n : {8u, 9u, 10u, 64u, 100u, 512u}) {
    const CoveringArray a = BaseExpand(n, seed);
    const std::size_t expected = 8 + 56 * CeilLog(n, 8);
    o.Require(a.rows() == expected, "n=" + std::to_string(n) + " has " +
                                        std::to_string(a.rows()) + " rows");
    const auto start = std::chrono::steady_clock::now();
    o.Require(Verify(a).valid, "n=" + std::to_string(n) + " invalid");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.Require(seconds < 30.0, "verifier took " + std::to_string(seconds) + " s");
    if (n == 512) o.detail += "512 columns: " + std::to_string(a.rows()) + " rows";
  }
  return o;
}

Outcome TernaryBaseExpansion() {
  Outcome o;
  const CoveringArray seed = ZeroSum(2, 3);
  for (std::size_t n : {3u, 9u, 10u, 27u, 100u}) {
    const CoveringArray a = BaseExpand(n, seed);
    o.Require(a.rows() == 3 + 6 * CeilLog(n, 3), "n=" + std::to_string(n) + " row count");
    o.Require(a.strength() == 2 && Verify(a).valid, "n=" + std::to_string(n) + " invalid");
  }
  return o;
}

Outcome SchedulingBenchmark() {
  Outcome o;
  const std::vector<Row> settings = fixtures::SchedulingBenchmark().RowVectors();
  SequenceOptions options;
  options.seed = kSeed;
  options.restarts = 16;
  const Schedule best = Optimize(settings, options);
  const Schedule worst = WorstOrder(settings, options);
  const CostMatrix c = BuildCostMatrix(settings);
  o.Require(best.method == Method::kHeuristic, "auto did not resolve to heuristic");
  o.Require(IsValidSchedule(best, c) && IsValidSchedule(worst, c), "invalid schedule");
  o.Require(best.total <= 104, "min total " + std::to_string(best.total) + " > 104");
  o.Require(worst.total >= 180, "max total " + std::to_string(worst.total) + " < 180");
  const std::string rate = io::FormatFixed(OptimizationRate(98, 185), 1);
  o.Require(rate == "47.0", "rate on (98, 185) printed " + rate);
  if (o.pass) {
    o.detail = "min " + std::to_string(best.total) + ", max " +
               std::to_string(worst.total) + ", rate(98,185) " + rate + "%";
  }
  return o;
}

Outcome ExactSolverOracle() {
  Outcome o;
  Rng rng(DeriveSeed(kSeed, 6));
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Row> rows(8, Row(6));
    for (auto& row : rows) {
      for (auto& s : row) s = static_cast<Symbol>(UniformBelow(rng, 3));
    }
    const CostMatrix c = BuildCostMatrix(rows);
    if (HeldKarp(c).total != oracle::BruteForcePaths(c).first) ++failures;
  }
  o.Require(failures == 0, std::to_string(failures) + " of 50 instances disagree");
  return o;
}

Outcome GgmNumerics() {
  Outcome o;
  using cd = std::complex<double>;
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto m = GgmMatrices(d);
    double worst = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a) {
      worst = std::max(worst, (m[a] - m[a].adjoint()).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(m[a].trace()));
      for (std::size_t b = 0; b < m.size(); ++b) {
        worst = std::max(worst, std::abs((m[a] * m[b]).trace() - cd(a == b ? 2.0 : 0.0)));
      }
    }
    o.Require(m.size() == d * d - 1 && worst <= 1e-12,
              "d=" + std::to_string(d) + " deviation " + std::to_string(worst));
  }
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cd(0, -1), cd(0, 1), 0;
  z << 1, 0, 0, -1;
  const auto pauli = GgmMatrices(2);
  o.Require(pauli[0] == x && pauli[1] == y && pauli[2] == z, "d=2 is not X, Y, Z");
  Rng rng(DeriveSeed(kSeed, 7));
  double max_error = 0.0;
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix rho = DensityMatrix::Random(static_cast<Eigen::Index>(d * d), rng);
      const ComplexMatrix back = Reconstruct(Decompose(rho, d, n), d, n);
      max_error = std::max(max_error, (back - rho.matrix()).cwiseAbs().maxCoeff());
    }
  }
  o.Require(max_error <= 1e-10, "round trip error " + std::to_string(max_error));
  if (o.pass) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "max round-trip error %.1e", max_error);
    o.detail = buffer;
  }
  return o;
}

Outcome SchemeMapping() {
  Outcome o;
  const MeasurementScheme scheme = SchemeFromArray(fixtures::FourQubitPairwise(), 2);
  std::vector<std::string> words;
  for (const auto& s : scheme.settings) {
    std::string word;
    for (const auto& label : s.labels) word += label.Name(true);
    words.push_back(word);
  }
  const std::vector<std::string> expected{"XXXX", "ZYYX", "YZZX", "YYXY", "XZYY",
                                          "ZXZY", "ZZXZ", "YXYZ", "XYZZ"};
  o.Require(words == expected, "settings differ");
  o.Require(SchemeCoversAllMarginals(scheme), "scheme misses a two-qubit marginal");
  return o;
}

Outcome BoundsConsistency() {
  Outcome o;
  for (const auto& e : fixtures::BestKnownTable()) {
    const auto n = static_cast<std::uint64_t>(e.n);
    const auto k = static_cast<std::uint64_t>(e.k);
    const auto d = static_cast<std::uint64_t>(e.d);
    const auto v = static_cast<std::uint64_t>(e.value);
    if (!(LowerBound(k, d) <= v && v <= DiscreteUpperBound(n, k, d))) {
      o.Require(false, "entry d=" + std::to_string(d) + " k=" + std::to_string(k) +
                           " n=" + std::to_string(n) + " outside bounds");
    }
  }
  const CoveringArray seed = fixtures::QutritPairwiseSeed();
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    if (QutritPairwiseBound(n) != BaseExpand(n, seed).rows()) {
      o.Require(false, "n=" + std::to_string(n) + " row count mismatch");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(fixtures::BestKnownTable().size()) +
               " table entries, n in [2, 1000]";
  }
  return o;
}

ExperimentOptions SweepOptions(unsigned threads) {
  ExperimentOptions options;
  options.n_min = 4;
  options.n_max = 27;
  options.k = 3;
  options.d = 2;
  options.seed = kSeed;
  options.threads = threads;
  return options;
}

Outcome ExperimentSweep() {
  Outcome o;
  const auto records = RunExperiment(SweepOptions(1));
  o.Require(records.size() == 24, "expected 24 records");
  for (const auto& r : records) {
    o.Require(r.min_cost <= r.max_cost, "n=" + std::to_string(r.n) + " min > max");
  }
  const double mean = MeanRate(records);
  o.Require(mean >= 30.0, "mean rate " + io::FormatFixed(mean, 2) + "% < 30%");
  if (o.pass) o.detail = "mean rate " + io::FormatFixed(mean, 2) + "%";
  return o;
}

std::string BenchmarkJson(unsigned threads) {
  const std::vector<Row> settings = fixtures::SchedulingBenchmark().RowVectors();
  const CostMatrix c = BuildCostMatrix(settings);
  SequenceOptions options;
  options.seed = kSeed;
  options.restarts = 16;
  options.threads = threads;
  const Schedule best = Optimize(settings, options);
  const Schedule worst = WorstOrder(settings, options);
  io::ScheduleJsonOptions json;
  json.restarts = 16;
  json.timing = false;
  json.report = MakeImprovementReport(c, best, worst, 1000, DeriveSeed(kSeed, 4));
  return io::ScheduleToJson(best, json) + io::ScheduleToJson(worst, json) +
         io::ScheduleToCsv(best);
}

Outcome Determinism() {
  Outcome o;
  o.Require(BenchmarkJson(1) == BenchmarkJson(1), "benchmark output differs on repeat");
  o.Require(BenchmarkJson(1) == BenchmarkJson(4), "benchmark output depends on threads");
  const std::string serial = ExperimentToCsv(RunExperiment(SweepOptions(1)));
  o.Require(serial == ExperimentToCsv(RunExperiment(SweepOptions(1))),
            "experiment CSV differs on repeat");
  o.Require(serial == ExperimentToCsv(RunExperiment(SweepOptions(4))),
            "experiment CSV depends on threads");
  o.Require(ExperimentToJson(RunExperiment(SweepOptions(1))) ==
                ExperimentToJson(RunExperiment(SweepOptions(3))),
            "experiment JSON depends on threads");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "golden constructions", 1, GoldenConstructions},
      {2, "octal seed validation", 1, SeedValidation},
      {3, "octal base expansion row counts", 30 * 6, OctalBaseExpansion},
      {4, "ternary base expansion row counts", 30, TernaryBaseExpansion},
      {5, "scheduling benchmark", 60, SchedulingBenchmark},
      {6, "exact solver vs brute force", 30, ExactSolverOracle},
      {7, "GGM numerics and decomposition", 30, GgmNumerics},
      {8, "four-qubit scheme mapping", 1, SchemeMapping},
      {9, "bounds consistency", 10, BoundsConsistency},
      {10, "optimization-rate sweep", 600, ExperimentSweep},
      {11, "determinism", 1200, Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_s) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") +
                        std::string("over time limit");
    }
    if (!outcome.pass) ++failed;
    std::printf("%s  criterion %2d  %-36s %8.3f s  %s\n", outcome.pass ? "PASS" : "FAIL",
                c.id, c.name, seconds, outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
