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

#include <gtest/gtest.h>

#include "qtp/error.h"

namespace qtp {
namespace {

TEST(Experiment, SmallSweepSatisfiesInvariants) {
  ExperimentOptions options;
  options.n_min = 4;
  options.n_max = 12;
  options.seed = 42;
  const auto records = RunExperiment(options);
  ASSERT_EQ(records.size(), 9u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    EXPECT_EQ(r.n, 4 + i);
    EXPECT_EQ(r.k, 3u);
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.generator, "greedy");
    EXPECT_GE(r.rows, 27u);
    EXPECT_LE(r.min_cost, r.max_cost);
    EXPECT_GE(r.rate_percent, 0.0);
    EXPECT_LE(r.rate_percent, 100.0);
  }
}

TEST(Experiment, OutputIndependentOfThreads) {
  ExperimentOptions options;
  options.n_min = 4;
  options.n_max = 14;
  options.seed = 5;
  const std::string serial = ExperimentToCsv(RunExperiment(options));
  options.threads = 6;
  EXPECT_EQ(ExperimentToCsv(RunExperiment(options)), serial);
}

TEST(Experiment, FixtureModeUsesBenchmark) {
  ExperimentOptions options;
  options.n_min = options.n_max = 6;
  options.use_fixture = true;
  options.seed = 42;
  const auto records = RunExperiment(options);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].rows, 33u);
  EXPECT_EQ(records[0].generator, "fixture");
  EXPECT_LE(records[0].min_cost, 104);
  EXPECT_GE(records[0].max_cost, 180);
}

TEST(Experiment, CsvHeader) {
  ExperimentRecord r{5, 3, 2, 12, 18, 45, 60.0, "greedy", 99};
  const std::string csv = ExperimentToCsv({r});
  const auto first_newline = csv.find('\n');
  EXPECT_EQ(csv[0], '#');
  EXPECT_EQ(csv.substr(first_newline + 1),
            "n,k,d,rows,min_cost,max_cost,rate_percent,generator,seed\n"
            "5,3,2,12,18,45,60.0000,greedy,99\n");
  EXPECT_DOUBLE_EQ(MeanRate({r, r}), 60.0);
  EXPECT_DOUBLE_EQ(MeanRate({}), 0.0);
}

TEST(Experiment, RejectsBadRanges) {
  ExperimentOptions options;
  options.n_min = 2;
  EXPECT_THROW(RunExperiment(options), Error);
  options.n_min = 8;
  options.n_max = 7;
  EXPECT_THROW(RunExperiment(options), Error);
  options.n_min = 4;
  options.n_max = 5;
  options.use_fixture = true;
  EXPECT_THROW(RunExperiment(options), Error);
  options.use_fixture = false;
  options.max_rows = 5;
  EXPECT_THROW(RunExperiment(options), Error);
}

}  // namespace
}  // namespace qtp
