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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcluster/graph.hpp"
#include "gcluster/matrix.hpp"
#include "gcluster/synthesis.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::analysis {

using graph::AdjacencyMatrix;
using graph::PhaseVector;

inline constexpr std::uint64_t kDefaultPhaseSeed = 42;

// Real symmetric K with e^{i Theta} U e^{i Theta} = e^{iK}.
class KMatrix {
 public:
  // NotSymmetric / NonRealResult beyond tol.rtol * max(1, ||K||).
  explicit KMatrix(const ComplexMatrix& k, const Tolerances& tol = default_tolerances());
  const ComplexMatrix& matrix() const noexcept { return k_; }

 private:
  ComplexMatrix k_;
};

// sigma_min(U + i e^{-2i Theta}); zero means Theta does not regularize U.
double phase_regularity(const ComplexMatrix& u, const PhaseVector& theta);

// Inverse of unitary_from_adjacency:
//   A = -i e^{i Theta} (U - i e^{-2i Theta}) (U + i e^{-2i Theta})^{-1} e^{-i Theta}.
// Errors: NotUnitary, NotSymmetric, SingularPhasePoint (regularity below
// tol.phase_floor), NonRealResult.
AdjacencyMatrix adjacency_from_unitary(const ComplexMatrix& u, const PhaseVector& theta,
                                       const Tolerances& tol = default_tolerances());

struct PhaseAttempt {
  std::string label;
  PhaseVector theta;
  double sigma_min;
};

struct PhaseSearchReport {
  PhaseVector theta;
  double sigma_min = 0.0;
  // Every candidate tried, in order, up to and including the chosen one.
  std::vector<PhaseAttempt> attempts;
};

// Deterministic schedule: Theta = 0; then theta_j = pi k / 16 for all j,
// k = 1..16; then 64 uniform random vectors from a generator seeded with
// `seed`. The first candidate with sigma_min >= tol.phase_accept wins;
// otherwise the best one if it reaches tol.phase_floor; otherwise
// SearchExhausted.
PhaseSearchReport search_regular_phases(const ComplexMatrix& u,
                                        std::uint64_t seed = kDefaultPhaseSeed,
                                        const Tolerances& tol = default_tolerances());

PhaseVector find_regular_phases(const ComplexMatrix& u, std::uint64_t seed = kDefaultPhaseSeed,
                                const Tolerances& tol = default_tolerances());

KMatrix k_matrix_form(const ComplexMatrix& u, const PhaseVector& theta,
                      const Tolerances& tol = default_tolerances());

// A = -cos(K) (1 + sin(K))^{-1}. SingularPhasePoint when an eigenangle of K
// sits at -pi/2.
AdjacencyMatrix adjacency_from_k(const KMatrix& k, const Tolerances& tol = default_tolerances());

struct AnalysisResult {
  PhaseVector theta;
  AdjacencyMatrix adjacency;
  synthesis::CovarianceReport covariance;
  double sigma_min = 0.0;
  bool used_given_phases = false;
  std::optional<PhaseSearchReport> search;
};

// Recovers the cluster approximated by Z. Uses `theta` when it regularizes U,
// otherwise searches. The covariance is that of the recovered nullifiers
// under Z at squeezing z > 0.
AnalysisResult analyze_interaction(const synthesis::InteractionMatrix& zm,
                                   const std::optional<PhaseVector>& theta,
                                   const synthesis::SqueezeScale& z,
                                   std::uint64_t seed = kDefaultPhaseSeed,
                                   const Tolerances& tol = default_tolerances());

}  // namespace gcluster::analysis
