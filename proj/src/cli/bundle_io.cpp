// Copyright 2026 The gcluster Authors
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

#include <cmath>
#include <fstream>
#include <sstream>

#include "gcluster/cli.hpp"

namespace gcluster::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
      return kExitParse;
    case ErrorCode::GaugeIncompatible:
      return kExitGauge;
    case ErrorCode::SearchExhausted:
      return kExitSearchExhausted;
    default:
      return kExitNumerical;
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  bool real = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
      if (m(i, j).imag() != 0.0) real = false;
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}};
  if (!real) out["im"] = std::move(im);
  return out;
}

namespace {

[[noreturn]] void schema_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "matrix JSON: " + what);
}

std::vector<double> read_grid(const json& grid, std::size_t rows, std::size_t cols,
                              const char* name) {
  if (!grid.is_array() || grid.size() != rows) {
    schema_fail(std::string("'") + name + "' must be an array of " + std::to_string(rows) +
                " rows");
  }
  std::vector<double> out;
  out.reserve(rows * cols);
  for (const json& row : grid) {
    if (!row.is_array() || row.size() != cols) {
      schema_fail(std::string("every '") + name + "' row must hold " + std::to_string(cols) +
                  " numbers");
    }
    for (const json& v : row) {
      if (!v.is_number()) schema_fail(std::string("'") + name + "' entries must be numbers");
      out.push_back(v.get<double>());
    }
  }
  return out;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) schema_fail("expected an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("re")) {
    schema_fail("'rows', 'cols' and 're' are required");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    schema_fail("'rows' and 'cols' must be positive integers");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) schema_fail("'rows' and 'cols' must be positive");
  const std::vector<double> re = read_grid(j["re"], rows, cols, "re");
  std::vector<double> im(rows * cols, 0.0);
  if (j.contains("im")) im = read_grid(j["im"], rows, cols, "im");
  std::vector<cplx> entries(rows * cols);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
  return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix matrix_from_document(const json& doc, const std::string& key) {
  if (doc.is_object() && doc.contains("rows")) return matrix_from_json(doc);
  if (doc.is_object() && doc.contains(key)) return matrix_from_json(doc[key]);
  throw Error(ErrorCode::ParseError, "expected a matrix or a bundle with '" + key + "'");
}

graph::PhaseVector phases_from_document(const json& doc) {
  const json* arr = &doc;
  if (doc.is_object() && doc.contains("theta")) arr = &doc["theta"];
  if (!arr->is_array()) {
    throw Error(ErrorCode::ParseError, "phases must be an array or an object with 'theta'");
  }
  std::vector<double> theta;
  for (const json& v : *arr) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, "phases must be numbers");
    theta.push_back(v.get<double>());
  }
  return graph::PhaseVector(std::move(theta));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

std::vector<double> parse_z_range(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw Error(ErrorCode::ParseError, "z range '" + spec + "': bad number '" + item + "'");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::ParseError, "z range must be START:STOP:STEP");
  }
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(start > 0.0) || !(step > 0.0) || stop < start) {
    throw Error(ErrorCode::InvalidArgument,
                "z range needs 0 < START <= STOP and STEP > 0");
  }
  std::vector<double> values;
  const double slack = 1e-9 * step;
  for (std::size_t k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + slack) break;
    values.push_back(v);
    if (values.size() > 100000) {
      throw Error(ErrorCode::InvalidArgument, "z range has too many points");
    }
  }
  return values;
}

}  // namespace gcluster::cli
