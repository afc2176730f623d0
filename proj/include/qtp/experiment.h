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

#ifndef QTP_EXPERIMENT_H_
#define QTP_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qtp {

struct ExperimentRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t rows = 0;
  long long min_cost = 0;
  long long max_cost = 0;
  double rate_percent = 0.0;
  std::string generator;  // "greedy" or "fixture"
  std::uint64_t seed = 0;
};

struct ExperimentOptions {
  std::size_t n_min = 4;
  std::size_t n_max = 27;
  std::size_t k = 3;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  // Instances run concurrently; records do not depend on this.
  unsigned threads = 1;
  std::size_t restarts = 0;
  // Use the 33-row scheduling benchmark instead of the generator. Only valid
  // for n_min = n_max = 6, k = 3, d = 2.
  bool use_fixture = false;
  std::size_t max_rows = 500;
};

// One record per n in [n_min, n_max], sorted by n. Arrays are over the
// d^2 - 1 non-identity GGM labels. Instance n draws its
// seed as DeriveSeed(seed, n). Throws Error(kInvalidArgument) for bad ranges
// and Error(kTooLarge) if an array exceeds max_rows.
std::vector<ExperimentRecord> RunExperiment(const ExperimentOptions& options);

double MeanRate(const std::vector<ExperimentRecord>& records);

// Comment line, header "n,k,d,rows,min_cost,max_cost,rate_percent,generator,
// seed", one line per record.
std::string ExperimentToCsv(const std::vector<ExperimentRecord>& records);
std::string ExperimentToJson(const std::vector<ExperimentRecord>& records);

}  // namespace qtp

#endif  // QTP_EXPERIMENT_H_
