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

#include "gcluster/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"
#include "gcluster/numfmt.hpp"

namespace gcluster::graph {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n) : a_(n, n) {}

AdjacencyMatrix::AdjacencyMatrix(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "adjacency matrix must be square");
  }
  const double scale = std::max(1.0, a.max_abs());
  if (a.max_imag() > tol.input_symmetry * scale) {
    throw Error(ErrorCode::NonRealResult, "adjacency matrix must be real");
  }
  const ComplexMatrix re = a.real_part();
  const double asym = re.symmetry_residual();
  if (asym > tol.input_symmetry * scale) {
    throw Error(ErrorCode::NotSymmetric,
                "adjacency asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  a_ = ComplexMatrix(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j)
      a_(i, j) = 0.5 * (re(i, j).real() + re(j, i).real());
}

void AdjacencyMatrix::set_weight(std::size_t i, std::size_t j, double w) {
  if (i >= size() || j >= size()) throw Error(ErrorCode::IndexOutOfRange, "set_weight");
  if (!std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "weight must be finite");
  a_(i, j) = w;
  a_(j, i) = w;
}

PhaseVector::PhaseVector(std::vector<double> theta) : theta_(std::move(theta)) {
  for (double& t : theta_) {
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "phase must be finite");
    t = matfun::principal_angle(t);
  }
}

std::vector<cplx> PhaseVector::phase_factors(double sign) const {
  std::vector<cplx> out(theta_.size());
  for (std::size_t j = 0; j < theta_.size(); ++j) out[j] = std::polar(1.0, sign * theta_[j]);
  return out;
}

ComplexMatrix NullifierMap::left_block() const { return q_.block(0, 0, modes(), modes()); }

ComplexMatrix NullifierMap::right_block() const {
  return q_.block(0, modes(), modes(), modes());
}

NullifierMap nullifier_map(const AdjacencyMatrix& a, const PhaseVector& theta) {
  const std::size_t n = a.size();
  if (theta.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "phase vector length differs from graph size");
  }
  const ComplexMatrix left = -add_identity(a.matrix(), {0.0, 1.0}).scale_cols(theta.phase_factors(1.0));
  const ComplexMatrix right =
      -add_identity(a.matrix(), {0.0, -1.0}).scale_cols(theta.phase_factors(-1.0));
  NullifierMap map;
  map.q_ = ComplexMatrix(n, 2 * n);
  map.q_.set_block(0, 0, left);
  map.q_.set_block(0, n, right);
  return map;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    parse_fail(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_fail(line_no, "expected a finite real weight, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

AdjacencyMatrix parse_graph(std::string_view text) {
  std::optional<AdjacencyMatrix> graph;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto toks = tokens(line);
    if (!graph) {
      if (toks.size() != 1) parse_fail(line_no, "expected the node count N");
      const std::size_t n = parse_index(toks[0], line_no);
      if (n == 0) parse_fail(line_no, "node count must be positive");
      graph.emplace(n);
      continue;
    }
    if (toks.size() != 3) parse_fail(line_no, "expected 'i j w'");
    const std::size_t i = parse_index(toks[0], line_no);
    const std::size_t j = parse_index(toks[1], line_no);
    const double w = parse_weight(toks[2], line_no);
    if (i >= graph->size() || j >= graph->size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "line " + std::to_string(line_no) + ": node index out of range for N = " +
                      std::to_string(graph->size()));
    }
    if (!seen.emplace(std::min(i, j), std::max(i, j)).second) {
      throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(line_no) + ": edge (" +
                                                std::to_string(i) + ", " + std::to_string(j) +
                                                ") already given");
    }
    graph->set_weight(i, j, w);
  }
  if (!graph) throw Error(ErrorCode::ParseError, "missing node count");
  return *graph;
}

std::string serialize_graph(const AdjacencyMatrix& a, double drop_below) {
  std::ostringstream os;
  os << a.size() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      const double w = a.weight(i, j);
      if (w == 0.0 || std::abs(w) <= drop_below) continue;
      os << i << ' ' << j << ' ' << format_double(w) << '\n';
    }
  }
  return os.str();
}

}  // namespace gcluster::graph
