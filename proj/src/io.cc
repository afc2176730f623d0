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

#include "qtp/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qtp/error.h"

namespace qtp::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Location(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kParseError,
                Location(text, offset) + ": " + std::string(e.what()));
  }
}

std::uint64_t RequireUnsigned(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_number_integer() || it->get<long long>() < 0) {
    throw Error(ErrorCode::kParseError,
                std::string("field '") + key + "' must be a nonnegative integer");
  }
  return it->get<std::uint64_t>();
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string JsonString(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string FormatFixed(double value, int digits) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, digits);
  return std::string(buffer, result.ptr);
}

std::string CoveringArrayToJson(const CoveringArray& array) {
  std::ostringstream out;
  out << "{\n  \"k\": " << array.strength() << ",\n  \"n\": " << array.columns()
      << ",\n  \"provenance\": " << JsonString(array.provenance())
      << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < array.rows(); ++r) {
    out << (r == 0 ? "\n    [" : ",\n    [");
    auto row = array.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c];
    }
    out << ']';
  }
  out << (array.rows() ? "\n  ],\n" : "],\n");
  out << "  \"v\": " << array.alphabet() << "\n}\n";
  return out.str();
}

std::string CoveringArrayToCsv(const CoveringArray& array) {
  std::ostringstream out;
  out << "# k=" << array.strength() << " n=" << array.columns()
      << " v=" << array.alphabet() << '\n';
  for (std::size_t r = 0; r < array.rows(); ++r) {
    auto row = array.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

CoveringArray CoveringArrayFromJson(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "covering array must be a JSON object");
  }
  const std::uint64_t k = RequireUnsigned(doc, "k");
  const std::uint64_t n = RequireUnsigned(doc, "n");
  const std::uint64_t v = RequireUnsigned(doc, "v");
  std::string provenance;
  if (const auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_string()) {
      throw Error(ErrorCode::kParseError, "field 'provenance' must be a string");
    }
    provenance = it->get<std::string>();
  }
  const auto rows = doc.find("rows");
  if (rows == doc.end() || !rows->is_array()) {
    throw Error(ErrorCode::kParseError, "field 'rows' must be an array");
  }
  std::vector<Symbol> cells;
  cells.reserve(rows->size() * n);
  for (std::size_t r = 0; r < rows->size(); ++r) {
    const json& row = (*rows)[r];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::kParseError,
                  "rows[" + std::to_string(r) + "] must be an array of " +
                      std::to_string(n) + " symbols");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& cell = row[c];
      if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
          cell.get<long long>() > UINT32_MAX) {
        throw Error(ErrorCode::kParseError,
                    "rows[" + std::to_string(r) + "][" + std::to_string(c) +
                        "] must be a nonnegative integer");
      }
      cells.push_back(cell.get<Symbol>());
    }
  }
  return CoveringArray(k, n, v, std::move(cells), std::move(provenance));
}

CoveringArray CoveringArrayFromCsv(std::string_view text,
                                   std::string provenance) {
  std::size_t k = 0, n = 0, v = 0;
  bool have_header = false;
  std::vector<Symbol> cells;
  std::size_t offset = 0;
  std::size_t line_number = 0;
  while (offset <= text.size()) {
    const std::size_t end = std::min(text.find('\n', offset), text.size());
    const std::string_view raw = text.substr(offset, end - offset);
    ++line_number;
    const std::string line = Trim(raw);
    auto fail = [&](std::size_t column, const std::string& what) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_number) + ", column " +
                      std::to_string(column) + ": " + what);
    };
    if (!line.empty()) {
      if (!have_header) {
        std::istringstream header(line);
        std::string hash, kf, nf, vf;
        header >> hash >> kf >> nf >> vf;
        if (hash != "#" || kf.rfind("k=", 0) != 0 || nf.rfind("n=", 0) != 0 ||
            vf.rfind("v=", 0) != 0) {
          fail(1, "expected header '# k=<k> n=<n> v=<v>'");
        }
        auto number = [&](const std::string& field) -> std::size_t {
          std::size_t value = 0;
          const auto* first = field.data() + 2;
          const auto* last = field.data() + field.size();
          const auto r = std::from_chars(first, last, value);
          if (r.ec != std::errc() || r.ptr != last) fail(1, "bad header value");
          return value;
        };
        k = number(kf);
        n = number(nf);
        v = number(vf);
        have_header = true;
      } else {
        std::size_t column = 0;
        std::size_t pos = 0;
        while (true) {
          const std::size_t comma = std::min(line.find(',', pos), line.size());
          const std::string token = Trim(std::string_view(line).substr(pos, comma - pos));
          Symbol value = 0;
          const auto r = std::from_chars(token.data(), token.data() + token.size(), value);
          if (token.empty() || r.ec != std::errc() ||
              r.ptr != token.data() + token.size()) {
            fail(pos + 1, "expected a nonnegative integer symbol");
          }
          cells.push_back(value);
          ++column;
          if (comma >= line.size()) break;
          pos = comma + 1;
        }
        if (column != n) {
          fail(1, "row has " + std::to_string(column) + " symbols, expected " +
                      std::to_string(n));
        }
      }
    }
    if (end >= text.size()) break;
    offset = end + 1;
  }
  if (!have_header) {
    throw Error(ErrorCode::kParseError, "line 1, column 1: missing CSV header");
  }
  return CoveringArray(k, n, v, std::move(cells), std::move(provenance));
}

CoveringArray ParseCoveringArray(std::string_view text,
                                 std::string csv_provenance) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return CoveringArrayFromJson(text);
  }
  return CoveringArrayFromCsv(text, std::move(csv_provenance));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIOError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIOError, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIOError, "write failed for '" + path + "'");
}

CoveringArray ReadCoveringArray(const std::string& path) {
  return ParseCoveringArray(ReadFile(path), "csv:" + path);
}

std::string BestKnownToJson(std::span<const fixtures::BestKnownEntry> entries) {
  std::ostringstream out;
  out << "{\n  \"entries\": [";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out << (i ? ",\n    " : "\n    ") << "{\"d\": " << e.d << ", \"k\": " << e.k
        << ", \"n\": " << e.n << ", \"value\": " << e.value << "}";
  }
  out << (entries.empty() ? "],\n" : "\n  ],\n")
      << "  \"provenance\": \"fixture:table1_best_known\"\n}\n";
  return out.str();
}

std::string CoverageReportToJson(const CoverageReport& report,
                                 std::size_t missing_limit) {
  ordered_json doc;
  doc["valid"] = report.valid;
  doc["checked_subsets"] = report.checked_subsets;
  doc["missing_count"] = report.missing.size();
  ordered_json missing = ordered_json::array();
  for (std::size_t i = 0; i < report.missing.size() && i < missing_limit; ++i) {
    missing.push_back({{"columns", report.missing[i].columns},
                       {"values", report.missing[i].values}});
  }
  doc["missing"] = std::move(missing);
  return doc.dump() + "\n";
}

std::string SchemeToJson(const MeasurementScheme& scheme, bool pauli_names) {
  if (pauli_names && scheme.d != 2) {
    throw Error(ErrorCode::kInvalidArgument, "Pauli names need d = 2");
  }
  std::ostringstream out;
  out << "{\"d\": " << scheme.d << ", \"n\": " << scheme.n
      << ", \"k\": " << scheme.k << ", \"settings\": [";
  for (std::size_t s = 0; s < scheme.settings.size(); ++s) {
    out << (s ? ",\n  [" : "\n  [");
    const auto& labels = scheme.settings[s].labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out << ',';
      out << '"' << labels[i].Name(pauli_names) << '"';
    }
    out << ']';
  }
  out << (scheme.settings.empty() ? "]}\n" : "\n]}\n");
  return out.str();
}

MeasurementScheme SchemeFromJson(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "scheme must be a JSON object");
  }
  MeasurementScheme scheme;
  scheme.d = RequireUnsigned(doc, "d");
  scheme.n = RequireUnsigned(doc, "n");
  scheme.k = RequireUnsigned(doc, "k");
  const auto settings = doc.find("settings");
  if (settings == doc.end() || !settings->is_array()) {
    throw Error(ErrorCode::kParseError, "field 'settings' must be an array");
  }
  for (const json& entry : *settings) {
    if (!entry.is_array() || entry.size() != scheme.n) {
      throw Error(ErrorCode::kParseError, "each setting needs n labels");
    }
    MeasurementSetting setting;
    for (const json& label : entry) {
      if (!label.is_string()) {
        throw Error(ErrorCode::kParseError, "labels must be strings");
      }
      setting.labels.push_back(GgmLabel::Parse(scheme.d, label.get<std::string>()));
    }
    scheme.settings.push_back(std::move(setting));
  }
  return scheme;
}

std::string ScheduleToJson(const Schedule& schedule,
                           const ScheduleJsonOptions& options) {
  ordered_json doc;
  doc["order"] = schedule.order;
  doc["step_costs"] = schedule.step_costs;
  doc["total"] = schedule.total;
  doc["method"] = std::string(MethodName(schedule.method));
  if (schedule.seed) {
    doc["seed"] = *schedule.seed;
  } else {
    doc["seed"] = nullptr;
  }
  ordered_json params = ordered_json::object();
  if (options.params) {
    params["T0"] = options.params->initial_temperature;
    params["alpha"] = options.params->cooling;
    params["Tmin"] = options.params->min_temperature;
    params["iter_max"] = options.params->max_iterations;
  }
  params["restarts"] = options.restarts;
  doc["params"] = std::move(params);
  doc["wall_time_s"] = options.timing ? schedule.wall_time_s : 0.0;
  if (options.report) {
    const ImprovementReport& r = *options.report;
    doc["report"] = {
        {"min_total", r.min_total},
        {"max_total", r.max_total},
        {"rate_percent", std::stod(FormatFixed(r.rate_percent, 1))},
        {"random_trials", r.random_trials},
        {"random_mean", r.random_mean},
        {"improvement_vs_random_percent", r.improvement_vs_random_percent},
    };
  }
  return doc.dump() + "\n";
}

std::string ScheduleToCsv(const Schedule& schedule) {
  std::ostringstream out;
  out << "position,index,step_cost\n";
  for (std::size_t i = 0; i < schedule.order.size(); ++i) {
    out << i << ',' << schedule.order[i] << ',';
    if (i > 0) out << schedule.step_costs[i - 1];
    out << '\n';
  }
  return out.str();
}

std::string BoundsToJson(const BoundsReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["k"] = report.k;
  doc["d"] = report.d;
  doc["lower"] = report.lower;
  doc["discrete_upper"] = report.discrete_upper;
  doc["slj_estimate"] = {{"value", report.slj_estimate},
                         {"kind", "asymptotic-estimate"}};
  if (report.construction_upper) {
    doc["construction_upper"] = *report.construction_upper;
    doc["construction"] = report.construction;
  } else {
    doc["construction_upper"] = nullptr;
  }
  if (report.best_known) {
    doc["best_known"] = *report.best_known;
  } else {
    doc["best_known"] = nullptr;
  }
  if (report.qutrit_upper) {
    doc["qutrit_upper"] = *report.qutrit_upper;
  } else {
    doc["qutrit_upper"] = nullptr;
  }
  doc["log_base"] = report.log_base;
  return doc.dump() + "\n";
}

std::string BoundsToText(const BoundsReport& report) {
  std::ostringstream out;
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  out << "n=" << report.n << " k=" << report.k << " d=" << report.d << '\n'
      << "lower bound            " << report.lower << '\n'
      << "probabilistic upper    " << report.discrete_upper
      << "  (natural log)\n"
      << "SLJ estimate           " << FormatFixed(report.slj_estimate, 2)
      << "  (asymptotic estimate)\n"
      << "construction upper     " << opt(report.construction_upper);
  if (report.construction_upper) out << "  (" << report.construction << ")";
  out << '\n'
      << "best known             " << opt(report.best_known) << '\n'
      << "qutrit pairwise bound  " << opt(report.qutrit_upper) << '\n';
  return out.str();
}

}  // namespace qtp::io
