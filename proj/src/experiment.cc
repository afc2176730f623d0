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

#include "qtp/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qtp/constructions.h"
#include "qtp/error.h"
#include "qtp/fixtures.h"
#include "qtp/io.h"
#include "qtp/random.h"
#include "qtp/sequencer.h"

namespace qtp {
namespace {

ExperimentRecord RunInstance(const ExperimentOptions& options, std::size_t n) {
  ExperimentRecord record;
  record.n = n;
  record.k = options.k;
  record.d = options.d;
  record.seed = DeriveSeed(options.seed, n);

  std::vector<Row> settings;
  if (options.use_fixture) {
    record.generator = "fixture";
    settings = fixtures::SchedulingBenchmark().RowVectors();
  } else {
    record.generator = "greedy";
    GreedyOptions greedy;
    const CoveringArray array =
        GreedyGenerate(options.k, n, options.d * options.d - 1, record.seed,
                       greedy);
    settings = array.RowVectors();
  }
  if (settings.size() > options.max_rows) {
    throw Error(ErrorCode::kTooLarge,
                "instance n=" + std::to_string(n) + " has " +
                    std::to_string(settings.size()) + " rows");
  }
  record.rows = settings.size();

  SequenceOptions sequence;
  sequence.seed = record.seed;
  sequence.restarts = options.restarts;
  const Schedule best = Optimize(settings, sequence);
  const Schedule worst = WorstOrder(settings, sequence);
  record.min_cost = best.total;
  record.max_cost = std::max(worst.total, best.total);
  record.rate_percent = OptimizationRate(record.min_cost, record.max_cost);
  return record;
}

}  // namespace

std::vector<ExperimentRecord> RunExperiment(const ExperimentOptions& options) {
  if (options.d < 2 || options.k < 1 || options.n_min < options.k ||
      options.n_max < options.n_min) {
    throw Error(ErrorCode::kInvalidArgument,
                "need d >= 2 and k <= n_min <= n_max");
  }
  if (options.use_fixture &&
      (options.n_min != 6 || options.n_max != 6 || options.k != 3 ||
       options.d != 2)) {
    throw Error(ErrorCode::kInvalidArgument,
                "the fixture instance is n=6, k=3, d=2");
  }
  const std::size_t count = options.n_max - options.n_min + 1;
  std::vector<ExperimentRecord> records(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        records[i] = RunInstance(options, options.n_min + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, options.threads), count));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return records;
}

double MeanRate(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : records) sum += r.rate_percent;
  return sum / static_cast<double>(records.size());
}

std::string ExperimentToCsv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "# greedy-generated arrays stand in for IPOG-F; acceptance floor is a "
         "mean rate of 30% (reference curve about 50%)\n";
  out << "n,k,d,rows,min_cost,max_cost,rate_percent,generator,seed\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.k << ',' << r.d << ',' << r.rows << ','
        << r.min_cost << ',' << r.max_cost << ','
        << io::FormatFixed(r.rate_percent, 4) << ',' << r.generator << ','
        << r.seed << '\n';
  }
  return out.str();
}

std::string ExperimentToJson(const std::vector<ExperimentRecord>& records) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    list.push_back({{"n", r.n},
                    {"k", r.k},
                    {"d", r.d},
                    {"rows", r.rows},
                    {"min_cost", r.min_cost},
                    {"max_cost", r.max_cost},
                    {"rate_percent", r.rate_percent},
                    {"generator", r.generator},
                    {"seed", r.seed}});
  }
  doc["records"] = std::move(list);
  doc["mean_rate_percent"] = MeanRate(records);
  doc["acceptance_floor_percent"] = 30.0;
  return doc.dump() + "\n";
}

}  // namespace qtp
