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

#include <vector>

#include "gcluster/graph.hpp"
#include "gcluster/matrix.hpp"
#include "gcluster/synthesis.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::blochmessiah {

using graph::AdjacencyMatrix;
using graph::PhaseVector;

// X = V cosh(zD) W^dag, Y = V sinh(zD) W^T: interferometer W^dag, single-mode
// squeezers of strength z d_j, interferometer V.
struct BlochMessiahFactors {
  ComplexMatrix v;
  ComplexMatrix w;
  std::vector<double> d;  // eigenvalues of P, ascending
  double z = 0.0;
  ComplexMatrix r;  // balancing unitary
  ComplexMatrix t;  // P = T^dag diag(d) T

  std::vector<double> squeezing() const;     // z d_j
  std::vector<double> squeezing_db() const;  // 20 z d_j / ln 10
  ComplexMatrix x() const;
  ComplexMatrix y() const;
};

class OrthogonalSeed {
 public:
  // NotOrthogonal unless O is real with O O^T = 1 within 1e-12.
  explicit OrthogonalSeed(const ComplexMatrix& o);
  static OrthogonalSeed identity(std::size_t n) {
    return OrthogonalSeed(ComplexMatrix::identity(n));
  }
  const ComplexMatrix& matrix() const noexcept { return o_; }

 private:
  ComplexMatrix o_;
};

// Requires z > 0 (InvalidArgument).
BlochMessiahFactors bloch_messiah(const synthesis::InteractionMatrix& zm,
                                  const synthesis::SqueezeScale& z,
                                  const Tolerances& tol = default_tolerances());

// V = e^{-i Theta} (1 + iA) (A^2 + 1)^{-1/2} O.
ComplexMatrix canonical_cluster_interferometer(const AdjacencyMatrix& a, const PhaseVector& theta,
                                               const OrthogonalSeed& o);

// max |(A + i) e^{i Theta} V + (A - i) e^{-i Theta} V^*|: the coefficient of
// the growing e^{zD} part of the nullifiers, zero iff the squeezed state
// approximates the cluster (A, Theta).
double cluster_condition_residual(const ComplexMatrix& v, const AdjacencyMatrix& a,
                                  const PhaseVector& theta);

// With e^{i Theta} V = V_r + i V_i.
struct InterferometerConditions {
  double imag_vs_real = 0.0;  // ||V_i - A V_r||_max
  double real_gram = 0.0;     // ||V_r V_r^T - (1 + A^2)^{-1}||_max
};

InterferometerConditions interferometer_conditions(const ComplexMatrix& v,
                                                   const AdjacencyMatrix& a,
                                                   const PhaseVector& theta);

// U = i V V^T.
ComplexMatrix unitary_from_interferometer(const ComplexMatrix& v);

}  // namespace gcluster::blochmessiah
