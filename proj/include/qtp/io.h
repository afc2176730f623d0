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

#ifndef QTP_IO_H_
#define QTP_IO_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qtp/bounds.h"
#include "qtp/covering_array.h"
#include "qtp/fixtures.h"
#include "qtp/ggm.h"
#include "qtp/sequencer.h"

namespace qtp::io {

// Canonical JSON: keys sorted (k, n, provenance, rows, v), one row per line.
// Parsing and re-serializing a canonical file reproduces it byte for byte.
std::string CoveringArrayToJson(const CoveringArray& array);
// "# k=<k> n=<n> v=<v>" header, then one comma-separated row per line.
std::string CoveringArrayToCsv(const CoveringArray& array);

// Throw Error(kParseError) with a "line L, column C" location for malformed
// input and propagate the CoveringArray constructor errors for bad contents.
CoveringArray CoveringArrayFromJson(std::string_view text);
CoveringArray CoveringArrayFromCsv(std::string_view text,
                                   std::string provenance = "csv");
// JSON if the first non-blank character is '{', CSV otherwise.
CoveringArray ParseCoveringArray(std::string_view text,
                                 std::string csv_provenance = "csv");

std::string ReadFile(const std::string& path);  // Error(kIOError)
void WriteFile(const std::string& path, std::string_view contents);
CoveringArray ReadCoveringArray(const std::string& path);

// Same layout as fixtures/table1_best_known.json.
std::string BestKnownToJson(std::span<const fixtures::BestKnownEntry> entries);

std::string CoverageReportToJson(const CoverageReport& report,
                                 std::size_t missing_limit);

// {"d", "n", "k", "settings": [["s:1:2", ...], ...]}; X/Y/Z names are
// emitted with pauli_names (qubits only) and always accepted for d = 2.
std::string SchemeToJson(const MeasurementScheme& scheme, bool pauli_names);
MeasurementScheme SchemeFromJson(std::string_view text);

struct ScheduleJsonOptions {
  std::optional<SaParams> params;
  std::size_t restarts = 0;
  // When false, wall_time_s is written as 0 so repeated runs compare equal.
  bool timing = true;
  std::optional<ImprovementReport> report;
};

// {"order", "step_costs", "total", "method", "seed", "params",
//  "wall_time_s"[, "report"]}
std::string ScheduleToJson(const Schedule& schedule,
                           const ScheduleJsonOptions& options = {});
// "position,index,step_cost" rows; the first step_cost is empty.
std::string ScheduleToCsv(const Schedule& schedule);

std::string BoundsToJson(const BoundsReport& report);
std::string BoundsToText(const BoundsReport& report);

// Fixed-point decimal with '.' separator, independent of locale.
std::string FormatFixed(double value, int digits);

}  // namespace qtp::io

#endif  // QTP_IO_H_
