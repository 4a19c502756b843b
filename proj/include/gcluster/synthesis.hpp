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
#include "gcluster/tolerances.hpp"

namespace gcluster::synthesis {

using graph::AdjacencyMatrix;
using graph::PhaseVector;

// Overall squeezing parameter z. Non-negative; z = 0 is the identity
// transformation and is only meaningful for Bogoliubov matrices.
class SqueezeScale {
 public:
  explicit SqueezeScale(double z);
  double value() const noexcept { return z_; }
  bool positive() const noexcept { return z_ > 0.0; }

 private:
  double z_;
};

// Complex symmetric nonsingular interaction matrix with its polar factors,
// Z = P U, P Hermitian positive definite, U symmetric unitary.
class InteractionMatrix {
 public:
  // Polar-decomposes Z. NotSymmetric, SingularInput.
  static InteractionMatrix from_matrix(const ComplexMatrix& z,
                                       const Tolerances& tol = default_tolerances());
  // Z = P U from given factors. NotHermitian, NotPositiveDefinite, NotUnitary,
  // NotSymmetric (P U not symmetric).
  static InteractionMatrix from_factors(const ComplexMatrix& p, const ComplexMatrix& u,
                                        const Tolerances& tol = default_tolerances());

  const ComplexMatrix& z() const noexcept { return z_; }
  const ComplexMatrix& p() const noexcept { return p_; }
  const ComplexMatrix& u() const noexcept { return u_; }
  std::size_t modes() const noexcept { return z_.rows(); }
  // Eigenvalues of P (= singular values of Z), ascending.
  const std::vector<double>& strengths() const noexcept { return strengths_; }

 private:
  ComplexMatrix z_, p_, u_;
  std::vector<double> strengths_;
};

// Blocks of the Bogoliubov matrix B = [[X, Y], [Y^*, X^*]].
struct BogoliubovPair {
  ComplexMatrix x;
  ComplexMatrix y;

  // ||X X^dag - Y Y^dag - 1||_max
  double normalization_residual() const;
  // ||X Y^T - Y X^T||_max
  double symplectic_residual() const;
  ComplexMatrix full() const;
};

// Nullifier covariance C = E E^dagger with its residual diagnostics.
struct CovarianceReport {
  ComplexMatrix c;  // real symmetric (reported part)
  ComplexMatrix e;
  double max_abs = 0.0;
  double frobenius = 0.0;
  double imag_residual = 0.0;    // max |Im(E E^dag)|
  double asymmetry = 0.0;        // of the unsymmetrized real covariance
  double factor_residual = 0.0;  // ||C - E E^dag||_max
  // Smallest eigenvalue of C; negative beyond rounding means not PSD.
  double min_eigenvalue = 0.0;
};

enum class GaugeKind { Identity, Faithful, Custom };

struct Gauge {
  GaugeKind kind = GaugeKind::Identity;
  ComplexMatrix custom;  // used when kind == Custom

  static Gauge identity() { return {}; }
  static Gauge faithful() { return {GaugeKind::Faithful, {}}; }
  static Gauge custom_matrix(ComplexMatrix p) { return {GaugeKind::Custom, std::move(p)}; }
};

struct GaugeCheck {
  bool compatible = false;
  // max |Im M| / max |M| for M = (A + i) e^{i Theta} P e^{-i Theta} (A - i).
  double residual = 0.0;
  // ||P U - (P U)^T||_max / ||P U||_max with U = unitary_from_adjacency(A, Theta).
  double pu_asymmetry = 0.0;
};

struct SqueezerMode {
  double lambda;  // eigenvalue of P
  double mu;      // cosh(z lambda)
  double nu;      // sinh(z lambda)
  double db;      // 20 z lambda / ln 10
};

// U = -i e^{-i Theta} (A - i)(A + i)^{-1} e^{-i Theta}.
ComplexMatrix unitary_from_adjacency(const AdjacencyMatrix& a, const PhaseVector& theta);

ComplexMatrix gauge_identity(std::size_t n);

// P = 1 + e^{-i Theta} ln(A^2 + 1) e^{i Theta} / (2z); makes C = e^{-2z} 1.
ComplexMatrix gauge_faithful(const AdjacencyMatrix& a, const PhaseVector& theta,
                             const SqueezeScale& z);

// Materializes the gauge matrix for a cluster (Faithful depends on z).
ComplexMatrix resolve_gauge(const Gauge& gauge, const AdjacencyMatrix& a,
                            const PhaseVector& theta, const SqueezeScale& z);

// NotPositiveDefinite (or NotHermitian) when P is not Hermitian PD.
GaugeCheck validate_gauge(const AdjacencyMatrix& a, const PhaseVector& theta,
                          const ComplexMatrix& p,
                          const Tolerances& tol = default_tolerances());

// Z = P U. GaugeIncompatible when validate_gauge fails.
InteractionMatrix interaction_from_cluster(const AdjacencyMatrix& a, const PhaseVector& theta,
                                           const ComplexMatrix& p,
                                           const Tolerances& tol = default_tolerances());

// X = cosh(zP), Y = -i sinh(zP) U. z = 0 gives the identity.
BogoliubovPair bogoliubov_from_interaction(const InteractionMatrix& zm, const SqueezeScale& z,
                                           const Tolerances& tol = default_tolerances());

// E = (A + i) e^{i Theta} e^{-zP}, C = E E^dagger. Requires z > 0
// (InvalidArgument) and a compatible gauge (GaugeIncompatible).
CovarianceReport covariance_closed_form(const AdjacencyMatrix& a, const PhaseVector& theta,
                                        const ComplexMatrix& p, const SqueezeScale& z,
                                        const Tolerances& tol = default_tolerances());

std::vector<SqueezerMode> squeezer_spectrum(const InteractionMatrix& zm, const SqueezeScale& z);

// Builds the report from an unsymmetrized covariance and the residual factor
// E. The reported C is the symmetrized real part of raw_c; every discarded
// component is kept as a residual.
CovarianceReport make_covariance_report(const ComplexMatrix& raw_c, ComplexMatrix e);

}  // namespace gcluster::synthesis
