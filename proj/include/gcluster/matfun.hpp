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

#include <functional>
#include <vector>

#include "gcluster/matrix.hpp"
#include "gcluster/tolerances.hpp"

namespace gcluster::matfun {

using ScalarFunction = std::function<double(double)>;

// M = Q diag(eigenvalues) Q^dagger, eigenvalues ascending. Each eigenvector
// is phased so that its first non-negligible component is real positive.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
  // Q f(Lambda) Q^dagger. DomainError if f is not finite at an eigenvalue.
  ComplexMatrix apply(const ScalarFunction& f) const;
};

// NotHermitian if ||M - M^dagger||_max > rtol * max(1, ||M||_max).
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m,
                                     const Tolerances& tol = default_tolerances());

ComplexMatrix hermitian_apply(const ComplexMatrix& m, const ScalarFunction& f,
                              const Tolerances& tol = default_tolerances());

// Z = P U with P = (Z Z^dagger)^{1/2} Hermitian positive definite and U
// unitary. For symmetric Z the unitary factor is symmetric and P U = U P^*.
struct PolarFactors {
  ComplexMatrix p;
  ComplexMatrix u;
  std::vector<double> singular_values;  // ascending
};

// NotSymmetric, SingularInput (sigma_min < tol.singular * sigma_max).
PolarFactors polar_decompose_symmetric(const ComplexMatrix& z,
                                       const Tolerances& tol = default_tolerances());

// S = Q e^{i Lambda} Q^T for a symmetric unitary S, Q real orthogonal,
// angles in (-pi, pi]. Re(S) and Im(S) commute; they are diagonalized jointly,
// Im(S) being re-diagonalized inside each degenerate eigenspace of Re(S).
struct SymmetricUnitarySpectrum {
  ComplexMatrix q;
  std::vector<double> angles;
};

SymmetricUnitarySpectrum symmetric_unitary_spectrum(
    const ComplexMatrix& s, const Tolerances& tol = default_tolerances());

// Autonne-Takagi factor of a symmetric unitary: S = R R^T, R = Q e^{i Lambda/2}.
ComplexMatrix takagi_symmetric_unitary(const ComplexMatrix& s,
                                       const Tolerances& tol = default_tolerances());

// Singular values, ascending.
std::vector<double> singular_values(const ComplexMatrix& m);
double sigma_min(const ComplexMatrix& m);

// SingularInput when the matrix is numerically singular.
ComplexMatrix inverse(const ComplexMatrix& m);

// Principal angle in (-pi, pi].
double principal_angle(double theta);

}  // namespace gcluster::matfun
