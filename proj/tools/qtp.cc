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

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qtp/bounds.h"
#include "qtp/constructions.h"
#include "qtp/covering_array.h"
#include "qtp/error.h"
#include "qtp/experiment.h"
#include "qtp/finite_field.h"
#include "qtp/fixtures.h"
#include "qtp/ggm.h"
#include "qtp/io.h"
#include "qtp/sequencer.h"

namespace {

using namespace qtp;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMissingListLimit = 100;
constexpr std::size_t kReportRandomTrials = 1000;

void Emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    io::WriteFile(out_path, contents);
  }
}

std::string TupleText(const auto& values) {
  std::string text = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(values[i]);
  }
  return text + ")";
}

struct Globals {
  std::optional<std::uint64_t> row_cap;
  std::uint64_t RowCap() const { return row_cap ? *row_cap : DefaultRowCap(); }
};

struct ConstructArgs {
  std::string method;
  std::optional<std::size_t> k, n, v;
  std::uint64_t seed = 0;
  std::string seed_array;
  std::string out;
  bool csv = false;
  bool json = false;
  unsigned threads = 1;
};

std::size_t Require(const std::optional<std::size_t>& value, const char* flag,
                    const std::string& method) {
  if (!value) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(flag) + " is required for --method " + method);
  }
  return *value;
}

// Default seed for base expansion when none is given: zero_sum(2, 3) for
// v = 3, otherwise the first v columns of bush(2, v).
CoveringArray DefaultSeedArray(std::size_t v, std::uint64_t cap) {
  if (v == 3) return ZeroSum(2, 3, cap);
  if (v > 2 && IsPrimePower(v)) {
    return Bush(2, v, cap).ColumnPrefix(v).WithProvenance(
        "bush(k=2,v=" + std::to_string(v) + ")[:" + std::to_string(v) + "]");
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no built-in seed for v=" + std::to_string(v) +
                  "; pass --seed-array");
}

int RunConstruct(const ConstructArgs& a, const Globals& g) {
  const std::uint64_t cap = g.RowCap();
  std::optional<CoveringArray> array;
  if (a.method == "zero-sum") {
    const std::size_t k = Require(a.k, "--k", a.method);
    const std::size_t v = Require(a.v, "--v", a.method);
    if (a.n && *a.n != k + 1) {
      throw Error(ErrorCode::kInvalidArgument, "zero-sum has n = k + 1");
    }
    array = ZeroSum(k, v, cap);
  } else if (a.method == "bush") {
    const std::size_t k = Require(a.k, "--k", a.method);
    const std::size_t v = Require(a.v, "--v", a.method);
    array = Bush(k, v, cap);
    if (a.n) {
      if (*a.n < k || *a.n > v + 1) {
        throw Error(ErrorCode::kInvalidArgument, "bush needs k <= n <= v + 1");
      }
      array = array->ColumnPrefix(*a.n);
    }
  } else if (a.method == "base-expand") {
    const std::size_t n = Require(a.n, "--n", a.method);
    if (a.k && *a.k != 2) {
      throw Error(ErrorCode::kInvalidArgument, "base-expand has k = 2");
    }
    CoveringArray seed = a.seed_array.empty()
                             ? DefaultSeedArray(Require(a.v, "--v", a.method), cap)
                             : io::ReadCoveringArray(a.seed_array);
    if (!a.seed_array.empty() && a.v && *a.v != seed.alphabet()) {
      throw Error(ErrorCode::kInvalidArgument, "--v disagrees with the seed");
    }
    array = BaseExpand(n, seed, cap);
  } else if (a.method == "greedy") {
    GreedyOptions options;
    options.row_cap = cap;
    options.threads = a.threads;
    array = GreedyGenerate(Require(a.k, "--k", a.method),
                           Require(a.n, "--n", a.method),
                           Require(a.v, "--v", a.method), a.seed, options);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown method '" + a.method + "'");
  }

  VerifyOptions verify;
  verify.threads = a.threads;
  const CoverageReport report = Verify(*array, verify);
  if (!report.valid) {
    std::cerr << "error: constructed array failed verification ("
              << report.missing.size() << " missing); nothing written\n";
    return kExitDomain;
  }
  Emit(a.out, a.csv ? io::CoveringArrayToCsv(*array)
                    : io::CoveringArrayToJson(*array));
  if (!a.out.empty()) {
    std::cerr << "wrote CA(" << array->rows() << ";" << array->strength() << ","
              << array->columns() << "," << array->alphabet() << ") to "
              << a.out << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::optional<std::size_t> k;
  bool all = false;
  bool json = false;
  unsigned threads = 1;
};

int RunVerify(const VerifyArgs& a) {
  CoveringArray array = io::ReadCoveringArray(a.in);
  if (a.k) array = array.WithStrength(*a.k);
  VerifyOptions options;
  options.threads = a.threads;
  const CoverageReport report = Verify(array, options);
  const std::size_t limit = a.all ? report.missing.size() : kMissingListLimit;
  if (a.json) {
    std::cout << io::CoverageReportToJson(report, limit);
  } else if (report.valid) {
    std::cout << "valid: CA(" << array.rows() << ";" << array.strength() << ","
              << array.columns() << "," << array.alphabet() << "), "
              << report.checked_subsets << " column subsets checked\n";
  } else {
    std::cout << "invalid: " << report.missing.size()
              << " missing interactions at strength " << array.strength()
              << '\n';
    for (std::size_t i = 0; i < report.missing.size() && i < limit; ++i) {
      std::cout << "  columns " << TupleText(report.missing[i].columns)
                << " values " << TupleText(report.missing[i].values) << '\n';
    }
    if (limit < report.missing.size()) {
      std::cout << "  ... " << report.missing.size() - limit
                << " more (use --all)\n";
    }
  }
  return report.valid ? kExitOk : kExitDomain;
}

struct SchemeArgs {
  std::string in;
  std::optional<std::size_t> d;
  bool pauli = false;
  bool json = false;
  std::string out;
};

int RunScheme(const SchemeArgs& a) {
  const CoveringArray array = io::ReadCoveringArray(a.in);
  std::size_t d = 0;
  if (a.d) {
    d = *a.d;
  } else {
    for (std::size_t c = 2; c * c - 1 <= array.alphabet(); ++c) {
      if (c * c - 1 == array.alphabet()) d = c;
    }
    if (d == 0) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "alphabet " + std::to_string(array.alphabet()) +
                      " is not d^2 - 1; pass --d");
    }
  }
  const MeasurementScheme scheme = SchemeFromArray(array, d);
  if (a.json || !a.out.empty()) {
    Emit(a.out, io::SchemeToJson(scheme, a.pauli));
    return kExitOk;
  }
  for (const auto& setting : scheme.settings) {
    std::string line;
    for (const auto& label : setting.labels) {
      if (!line.empty() && !(a.pauli && d == 2)) line += ' ';
      line += label.Name(a.pauli);
    }
    std::cout << line << '\n';
  }
  return kExitOk;
}

struct SequenceArgs {
  std::string in;
  std::string method = "auto";
  std::uint64_t seed = 0;
  bool json = false;
  bool csv = false;
  bool worst = false;
  bool report = false;
  std::size_t restarts = 0;
  unsigned threads = 1;
  bool no_timing = false;
  double two_opt_budget = kDefaultTwoOptBudget;
  std::optional<double> t0, alpha, tmin;
  std::optional<std::uint64_t> iterations;
  std::string out;
};

int RunSequence(const SequenceArgs& a) {
  const CoveringArray array = io::ReadCoveringArray(a.in);
  const std::vector<Row> settings = array.RowVectors();
  const CostMatrix costs = BuildCostMatrix(settings);

  SequenceOptions options;
  options.method = ParseMethod(a.method);
  options.seed = a.seed;
  options.restarts = a.restarts;
  options.threads = a.threads;
  options.two_opt_budget_s = a.two_opt_budget;
  SaParams params = SaParams::Defaults(costs);
  if (a.t0) params.initial_temperature = *a.t0;
  if (a.alpha) params.cooling = *a.alpha;
  if (a.tmin) params.min_temperature = *a.tmin;
  if (a.iterations) params.max_iterations = *a.iterations;
  params.Validate();
  options.sa_params = params;

  auto minimize = [&] {
    if (options.method == Method::kIdentity) {
      std::vector<std::size_t> order(settings.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      Schedule s = MakeSchedule(costs, std::move(order), Method::kIdentity);
      s.seed = a.seed;
      return s;
    }
    SequenceOptions low = options;
    if (low.method == Method::kWorst) low.method = Method::kAuto;
    return Optimize(settings, low);
  };
  const bool worst_primary = a.worst || options.method == Method::kWorst;
  std::optional<Schedule> best;
  std::optional<Schedule> worst;
  if (worst_primary || a.report) worst = WorstOrder(settings, options);
  if (!worst_primary || a.report) best = minimize();
  const Schedule& primary = worst_primary ? *worst : *best;

  io::ScheduleJsonOptions json_options;
  json_options.restarts = a.restarts;
  json_options.timing = !a.no_timing;
  if (primary.method == Method::kSa || primary.method == Method::kWorst ||
      a.restarts > 0) {
    json_options.params = params;
  }
  std::optional<ImprovementReport> report;
  if (a.report) {
    report = MakeImprovementReport(costs, *best, *worst, kReportRandomTrials,
                                   DeriveSeed(a.seed, 4));
    json_options.report = report;
  }

  std::string text;
  if (a.csv) {
    text = io::ScheduleToCsv(primary);
  } else if (a.json) {
    text = io::ScheduleToJson(primary, json_options);
  } else {
    std::ostringstream out;
    out << "method " << MethodName(primary.method) << ", total "
        << primary.total << '\n'
        << "order";
    for (std::size_t i : primary.order) out << ' ' << i;
    out << '\n';
    if (report) {
      out << "min " << report->min_total << ", max " << report->max_total
          << ", rate " << io::FormatFixed(report->rate_percent, 1) << "%\n"
          << "random mean " << io::FormatFixed(report->random_mean, 2)
          << " over " << report->random_trials << " orders, improvement "
          << io::FormatFixed(report->improvement_vs_random_percent, 1)
          << "%\n";
    }
    text = out.str();
  }
  Emit(a.out, text);
  return kExitOk;
}

struct BoundsArgs {
  std::uint64_t n = 0, k = 0, d = 0;
  bool json = false;
};

int RunBounds(const BoundsArgs& a) {
  const BoundsReport report = ComputeBounds(a.n, a.k, a.d);
  std::cout << (a.json ? io::BoundsToJson(report) : io::BoundsToText(report));
  return kExitOk;
}

struct ExperimentArgs {
  ExperimentOptions options;
  std::string out;
  bool json = false;
};

int RunExperimentCommand(const ExperimentArgs& a) {
  const auto records = RunExperiment(a.options);
  Emit(a.out, a.json ? ExperimentToJson(records) : ExperimentToCsv(records));
  std::cerr << records.size() << " instances, mean rate "
            << io::FormatFixed(MeanRate(records), 2) << "%\n";
  return kExitOk;
}

struct FixtureArgs {
  std::string name;
  std::string out;
  bool csv = false;
  bool json = false;
};

int RunFixturesList(bool json) {
  if (json) {
    std::cout << '[';
    bool first = true;
    for (const auto& info : fixtures::List()) {
      std::cout << (first ? "" : ", ") << "{\"name\": \"" << info.name
                << "\", \"description\": \"" << info.description << "\"}";
      first = false;
    }
    std::cout << "]\n";
    return kExitOk;
  }
  for (const auto& info : fixtures::List()) {
    std::cout << info.name << "  " << info.description << '\n';
  }
  return kExitOk;
}

int RunFixturesDump(const FixtureArgs& a) {
  if (a.name == "table1_best_known") {
    if (a.csv) {
      std::ostringstream out;
      out << "d,k,n,value\n";
      for (const auto& e : fixtures::BestKnownTable()) {
        out << e.d << ',' << e.k << ',' << e.n << ',' << e.value << '\n';
      }
      Emit(a.out, out.str());
    } else {
      Emit(a.out, io::BestKnownToJson(fixtures::BestKnownTable()));
    }
    return kExitOk;
  }
  const CoveringArray array = fixtures::ByName(a.name);
  Emit(a.out, a.csv ? io::CoveringArrayToCsv(array)
                    : io::CoveringArrayToJson(array));
  return kExitOk;
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kIOError:
    case ErrorCode::kInvalidParams:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering-array measurement schemes for qudit tomography"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--row-cap", globals.row_cap,
                 "Maximum rows any construction may produce (env QTP_ROW_CAP)")
      ->check(CLI::PositiveNumber);

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Build a covering array");
  cmd_construct->add_option("--method", construct.method)
      ->required()
      ->check(CLI::IsMember({"zero-sum", "bush", "base-expand", "greedy"}));
  cmd_construct->add_option("--k", construct.k, "Strength");
  cmd_construct->add_option("--n", construct.n, "Columns");
  cmd_construct->add_option("--v", construct.v, "Alphabet size");
  cmd_construct->add_option("--seed", construct.seed, "Random seed (greedy)");
  cmd_construct->add_option("--seed-array", construct.seed_array,
                            "Seed CA(v^2;2,v,v) for base-expand");
  cmd_construct->add_option("--out", construct.out, "Output file (default stdout)");
  cmd_construct->add_flag("--csv", construct.csv, "Write CSV instead of JSON");
  cmd_construct->add_flag("--json", construct.json, "Write JSON (default)");
  cmd_construct->add_option("--threads", construct.threads)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check the covering property");
  cmd_verify->add_option("--in", verify.in)->required();
  cmd_verify->add_option("--k", verify.k, "Strength to check (default: file's)");
  cmd_verify->add_flag("--all", verify.all, "List every missing interaction");
  cmd_verify->add_flag("--json", verify.json);
  cmd_verify->add_option("--threads", verify.threads)->check(CLI::PositiveNumber);

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "Row-count bounds");
  cmd_bounds->add_option("--n", bounds.n)->required();
  cmd_bounds->add_option("--k", bounds.k)->required();
  cmd_bounds->add_option("--d", bounds.d)->required();
  cmd_bounds->add_flag("--json", bounds.json);

  SchemeArgs scheme;
  auto* cmd_scheme = app.add_subcommand("scheme", "Map a CA to GGM settings");
  cmd_scheme->add_option("--in", scheme.in)->required();
  cmd_scheme->add_option("--d", scheme.d, "Qudit dimension (default from v)");
  cmd_scheme->add_flag("--pauli-names", scheme.pauli, "Print X/Y/Z for qubits");
  cmd_scheme->add_flag("--json", scheme.json);
  cmd_scheme->add_option("--out", scheme.out, "Write the scheme file here");

  SequenceArgs sequence;
  auto* cmd_sequence = app.add_subcommand("sequence", "Order settings by switching cost");
  cmd_sequence->add_option("--in", sequence.in)->required();
  cmd_sequence->add_option("--method", sequence.method)
      ->check(CLI::IsMember({"auto", "exact", "heuristic", "sa", "worst", "identity"}));
  cmd_sequence->add_option("--seed", sequence.seed);
  auto* json_flag = cmd_sequence->add_flag("--json", sequence.json);
  auto* csv_flag = cmd_sequence->add_flag("--csv", sequence.csv);
  json_flag->excludes(csv_flag);
  cmd_sequence->add_flag("--worst", sequence.worst, "Output the worst order");
  cmd_sequence->add_flag("--report", sequence.report, "Add min/max/random report");
  cmd_sequence->add_option("--restarts", sequence.restarts, "Extra annealing passes");
  cmd_sequence->add_option("--threads", sequence.threads)->check(CLI::PositiveNumber);
  cmd_sequence->add_flag("--no-timing", sequence.no_timing, "Write wall_time_s as 0");
  cmd_sequence->add_option("--two-opt-budget", sequence.two_opt_budget, "Seconds");
  cmd_sequence->add_option("--t0", sequence.t0);
  cmd_sequence->add_option("--alpha", sequence.alpha);
  cmd_sequence->add_option("--tmin", sequence.tmin);
  cmd_sequence->add_option("--iterations", sequence.iterations);
  cmd_sequence->add_option("--out", sequence.out);

  ExperimentArgs experiment;
  auto* cmd_experiment = app.add_subcommand("experiment", "Optimization-rate sweep over n");
  cmd_experiment->add_option("--n-min", experiment.options.n_min);
  cmd_experiment->add_option("--n-max", experiment.options.n_max);
  cmd_experiment->add_option("--k", experiment.options.k);
  cmd_experiment->add_option("--d", experiment.options.d);
  cmd_experiment->add_option("--seed", experiment.options.seed);
  cmd_experiment->add_option("--restarts", experiment.options.restarts);
  cmd_experiment->add_option("--threads", experiment.options.threads)
      ->check(CLI::PositiveNumber);
  cmd_experiment->add_flag("--fixture", experiment.options.use_fixture,
                           "Use the 33-row benchmark (n=6, k=3, d=2)");
  cmd_experiment->add_option("--out", experiment.out, "CSV file (default stdout)");
  cmd_experiment->add_flag("--json", experiment.json);

  FixtureArgs fixture;
  bool list_json = false;
  auto* cmd_fixtures = app.add_subcommand("fixtures", "Embedded reference data");
  cmd_fixtures->require_subcommand(1);
  auto* cmd_list = cmd_fixtures->add_subcommand("list", "Show fixture names");
  cmd_list->add_flag("--json", list_json);
  auto* cmd_dump = cmd_fixtures->add_subcommand("dump", "Write a fixture");
  cmd_dump->add_option("name", fixture.name)->required();
  cmd_dump->add_option("--out", fixture.out);
  cmd_dump->add_flag("--csv", fixture.csv);
  cmd_dump->add_flag("--json", fixture.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (globals.row_cap) {
      // Constructions called with their default cap pick this up as well.
      setenv("QTP_ROW_CAP", std::to_string(*globals.row_cap).c_str(), 1);
    }
    if (*cmd_construct) return RunConstruct(construct, globals);
    if (*cmd_verify) return RunVerify(verify);
    if (*cmd_bounds) return RunBounds(bounds);
    if (*cmd_scheme) return RunScheme(scheme);
    if (*cmd_sequence) return RunSequence(sequence);
    if (*cmd_experiment) return RunExperimentCommand(experiment);
    if (*cmd_list) return RunFixturesList(list_json);
    if (*cmd_dump) return RunFixturesDump(fixture);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
