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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcluster/matrix.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::graph {

// Real symmetric weighted-graph matrix; diagonal entries are self-loops.
// Stored exactly symmetric.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  // Zero (edgeless) graph on n nodes.
  explicit AdjacencyMatrix(std::size_t n);
  // Accepts a real square matrix whose asymmetry is within
  // tol.input_symmetry * max(1, ||A||_max); stores (A + A^T) / 2.
  // Errors: DimensionMismatch, NotSymmetric, NonRealResult.
  explicit AdjacencyMatrix(const ComplexMatrix& a,
                           const Tolerances& tol = default_tolerances());

  std::size_t size() const noexcept { return a_.rows(); }
  double weight(std::size_t i, std::size_t j) const { return a_(i, j).real(); }
  // Set A[i][j] = A[j][i] = w.
  void set_weight(std::size_t i, std::size_t j, double w);
  const ComplexMatrix& matrix() const noexcept { return a_; }

 private:
  ComplexMatrix a_;
};

// Local rotation angles theta_j, stored in (-pi, pi].
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(std::vector<double> theta);
  static PhaseVector zero(std::size_t n) { return PhaseVector(std::vector<double>(n, 0.0)); }

  std::size_t size() const noexcept { return theta_.size(); }
  std::span<const double> angles() const noexcept { return theta_; }
  double operator[](std::size_t j) const { return theta_[j]; }
  // Diagonal of e^{i sign Theta}.
  std::vector<cplx> phase_factors(double sign = 1.0) const;

 private:
  std::vector<double> theta_;
};

// Nullifier coefficients x = Q b with b = (b_1..b_N, b_1^dag..b_N^dag):
// Q = -[(A + i) e^{i Theta} | (A - i) e^{-i Theta}].
class NullifierMap {
 public:
  const ComplexMatrix& q() const noexcept { return q_; }
  ComplexMatrix left_block() const;
  ComplexMatrix right_block() const;
  std::size_t modes() const noexcept { return q_.rows(); }

 private:
  friend NullifierMap nullifier_map(const AdjacencyMatrix&, const PhaseVector&);
  ComplexMatrix q_;
};

// DimensionMismatch when A and Theta disagree in size.
NullifierMap nullifier_map(const AdjacencyMatrix& a, const PhaseVector& theta);

// Graph text format: first non-comment line holds N; every further line is
// "i j w" with 0-based node indices. '#' starts a comment line. Unordered
// duplicates are rejected. Errors: ParseError, DuplicateEdge, IndexOutOfRange.
AdjacencyMatrix parse_graph(std::string_view text);

// Inverse of parse_graph: one line per nonzero upper-triangular entry, with
// weights in shortest round-trip decimal form. Entries with
// |w| <= drop_below are omitted.
std::string serialize_graph(const AdjacencyMatrix& a, double drop_below = 0.0);

}  // namespace gcluster::graph
