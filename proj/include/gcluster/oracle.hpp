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

// Brute-force verification path: the Bogoliubov matrix is obtained by
// exponentiating the Heisenberg generator of the squeezing unitary, and the
// nullifier covariance is assembled from its definition. Nothing here goes
// through an eigendecomposition.
//
// Generator. With H = (z/2) sum_jk (Z_jk b_j^dag b_k^dag + Z_jk^* b_j b_k)
// and U = exp(-iH), the Heisenberg picture gives d/ds U_s^dag b U_s = i[H, b]
// and, for symmetric Z,
//   i[H, b_m]     = -i z sum_j Z_mj   b_j^dag
//   i[H, b_m^dag] =  i z sum_j Z_mj^* b_j
// so U^dag b U = exp(Gamma) b with Gamma = [[0, -i z Z], [i z Z^*, 0]].

#include <vector>

#include "gcluster/graph.hpp"
#include "gcluster/matrix.hpp"
#include "gcluster/synthesis.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::oracle {

using graph::AdjacencyMatrix;
using graph::PhaseVector;
using synthesis::BogoliubovPair;
using synthesis::CovarianceReport;
using synthesis::InteractionMatrix;
using synthesis::SqueezeScale;

// Matrix exponential by scaling and squaring with the degree-13 diagonal
// Pade approximant.
ComplexMatrix expm(const ComplexMatrix& m);

// G = [[0, 1], [1, 0]] in N x N blocks.
ComplexMatrix swap_form(std::size_t n);

ComplexMatrix squeezing_generator(const ComplexMatrix& z_matrix, double z);

// exp(Gamma) for an arbitrary square Z (no symmetry requirement, so the
// consequences of an invalid interaction can be observed).
// SqueezingOutOfRange when z * sigma_max(Z) exceeds tol.max_squeezing.
ComplexMatrix bogoliubov_matrix(const ComplexMatrix& z_matrix, double z,
                                const Tolerances& tol = default_tolerances());

BogoliubovPair pair_from_matrix(const ComplexMatrix& b);
// ||lower blocks - conj(swapped upper blocks)||_max
double conjugation_residual(const ComplexMatrix& b);

BogoliubovPair bogoliubov_oracle(const InteractionMatrix& zm, const SqueezeScale& z,
                                 const Tolerances& tol = default_tolerances());

// C = 1/2 Q B G B^T Q^T with Q from the nullifier map; E = -(Q B)[:, :N].
CovarianceReport covariance_from_bogoliubov(const AdjacencyMatrix& a, const PhaseVector& theta,
                                            const ComplexMatrix& b);

CovarianceReport covariance_oracle(const AdjacencyMatrix& a, const PhaseVector& theta,
                                   const InteractionMatrix& zm, const SqueezeScale& z,
                                   const Tolerances& tol = default_tolerances());

struct SweepRow {
  double z;
  double max_abs_c;
  double frobenius_c;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // Max-entry distance between closed form and oracle at the first and
  // last z.
  double oracle_gap_first = 0.0;
  double oracle_gap_last = 0.0;
  // Strictly decreasing max_abs_c (vacuously true for one row).
  bool decreasing = true;
};

// Closed-form covariance along ascending z values. InvalidArgument when the
// list is empty, not strictly ascending, or contains z <= 0.
SweepResult convergence_sweep(const AdjacencyMatrix& a, const PhaseVector& theta,
                              const synthesis::Gauge& gauge, const std::vector<double>& z_values,
                              const Tolerances& tol = default_tolerances());

}  // namespace gcluster::oracle
