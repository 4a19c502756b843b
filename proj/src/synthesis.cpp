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

#include "gcluster/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"

namespace gcluster::synthesis {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_modes(const AdjacencyMatrix& a, const PhaseVector& theta) {
  if (theta.size() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "graph has " + std::to_string(a.size()) + " nodes but " +
                    std::to_string(theta.size()) + " phases were given");
  }
}

void require_square_of(const ComplexMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

// e^{s1 i Theta} M e^{s2 i Theta}
ComplexMatrix phase_sandwich(const ComplexMatrix& m, const PhaseVector& theta, double s1,
                             double s2) {
  return m.scale_rows(theta.phase_factors(s1)).scale_cols(theta.phase_factors(s2));
}

}  // namespace

SqueezeScale::SqueezeScale(double z) : z_(z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "squeezing scale z must be finite and >= 0");
  }
}

InteractionMatrix InteractionMatrix::from_matrix(const ComplexMatrix& z, const Tolerances& tol) {
  matfun::PolarFactors polar = matfun::polar_decompose_symmetric(z, tol);
  InteractionMatrix out;
  out.z_ = z.symmetric_part();
  out.p_ = std::move(polar.p);
  out.u_ = std::move(polar.u);
  out.strengths_ = std::move(polar.singular_values);
  return out;
}

InteractionMatrix InteractionMatrix::from_factors(const ComplexMatrix& p, const ComplexMatrix& u,
                                                  const Tolerances& tol) {
  if (!p.is_square() || p.rows() != u.rows() || !u.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "P and U must be square of equal size");
  }
  const matfun::HermitianSpectrum spec = matfun::hermitian_spectrum(p, tol);
  if (!(spec.eigenvalues.front() > 0.0)) {
    throw Error(ErrorCode::NotPositiveDefinite, "P has a non-positive eigenvalue");
  }
  const double unit = u.unitarity_residual();
  if (unit > tol.rtol) {
    throw Error(ErrorCode::NotUnitary, "U unitarity residual " + std::to_string(unit));
  }
  const ComplexMatrix z = p * u;
  const double asym = z.symmetry_residual();
  if (asym > tol.rtol * z.max_abs()) {
    throw Error(ErrorCode::NotSymmetric, "P U is not symmetric (residual " +
                                             std::to_string(asym) + ")");
  }
  InteractionMatrix out;
  out.z_ = z.symmetric_part();
  out.p_ = p.hermitian_part();
  out.u_ = u;
  out.strengths_ = spec.eigenvalues;
  return out;
}

double BogoliubovPair::normalization_residual() const {
  return add_identity(x * x.adjoint() - y * y.adjoint(), -1.0).max_abs();
}

double BogoliubovPair::symplectic_residual() const {
  return (x * y.transpose() - y * x.transpose()).max_abs();
}

ComplexMatrix BogoliubovPair::full() const {
  const std::size_t n = x.rows();
  ComplexMatrix b(2 * n, 2 * n);
  b.set_block(0, 0, x);
  b.set_block(0, n, y);
  b.set_block(n, 0, y.conj());
  b.set_block(n, n, x.conj());
  return b;
}

ComplexMatrix unitary_from_adjacency(const AdjacencyMatrix& a, const PhaseVector& theta) {
  require_modes(a, theta);
  const ComplexMatrix ratio =
      add_identity(a.matrix(), -kI) * matfun::inverse(add_identity(a.matrix(), kI));
  return (-kI * phase_sandwich(ratio, theta, -1.0, -1.0)).symmetric_part();
}

ComplexMatrix gauge_identity(std::size_t n) { return ComplexMatrix::identity(n); }

ComplexMatrix gauge_faithful(const AdjacencyMatrix& a, const PhaseVector& theta,
                             const SqueezeScale& z) {
  require_modes(a, theta);
  if (!z.positive()) {
    throw Error(ErrorCode::InvalidArgument, "faithful gauge needs z > 0");
  }
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix log_term =
      matfun::hermitian_apply(add_identity(am * am, 1.0), [](double x) { return std::log(x); });
  const ComplexMatrix p =
      add_identity(phase_sandwich(log_term, theta, -1.0, 1.0) * (1.0 / (2.0 * z.value())), 1.0);
  return p.hermitian_part();
}

ComplexMatrix resolve_gauge(const Gauge& gauge, const AdjacencyMatrix& a,
                            const PhaseVector& theta, const SqueezeScale& z) {
  switch (gauge.kind) {
    case GaugeKind::Identity:
      return gauge_identity(a.size());
    case GaugeKind::Faithful:
      return gauge_faithful(a, theta, z);
    case GaugeKind::Custom:
      require_square_of(gauge.custom, a.size(), "custom gauge P");
      return gauge.custom;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gauge kind");
}

GaugeCheck validate_gauge(const AdjacencyMatrix& a, const PhaseVector& theta,
                          const ComplexMatrix& p, const Tolerances& tol) {
  require_modes(a, theta);
  require_square_of(p, a.size(), "gauge P");
  const matfun::HermitianSpectrum spec = matfun::hermitian_spectrum(p, tol);
  if (!(spec.eigenvalues.front() > 0.0)) {
    throw Error(ErrorCode::NotPositiveDefinite, "gauge P has a non-positive eigenvalue");
  }
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix test = add_identity(am, kI) * phase_sandwich(p, theta, 1.0, -1.0) *
                             add_identity(am, -kI);
  GaugeCheck check;
  check.residual = test.max_imag() / test.max_abs();
  check.compatible = check.residual <= tol.rtol;
  const ComplexMatrix pu = p * unitary_from_adjacency(a, theta);
  check.pu_asymmetry = pu.symmetry_residual() / pu.max_abs();
  return check;
}

InteractionMatrix interaction_from_cluster(const AdjacencyMatrix& a, const PhaseVector& theta,
                                           const ComplexMatrix& p, const Tolerances& tol) {
  const GaugeCheck check = validate_gauge(a, theta, p, tol);
  if (!check.compatible) {
    throw Error(ErrorCode::GaugeIncompatible,
                "gauge compatibility check failed: (A+i)e^{i Theta} P e^{-i Theta}(A-i) is not "
                "real (relative imaginary part " +
                    std::to_string(check.residual) + "), so P U would not be symmetric");
  }
  return InteractionMatrix::from_factors(p, unitary_from_adjacency(a, theta), tol);
}

BogoliubovPair bogoliubov_from_interaction(const InteractionMatrix& zm, const SqueezeScale& z,
                                           const Tolerances& tol) {
  const matfun::HermitianSpectrum spec = matfun::hermitian_spectrum(zm.p(), tol);
  const double s = z.value();
  BogoliubovPair pair;
  pair.x = spec.apply([s](double l) { return std::cosh(s * l); });
  pair.y = -kI * (spec.apply([s](double l) { return std::sinh(s * l); }) * zm.u());
  return pair;
}

CovarianceReport make_covariance_report(const ComplexMatrix& raw_c, ComplexMatrix e) {
  const ComplexMatrix real_c = raw_c.real_part();
  CovarianceReport report;
  report.asymmetry = real_c.symmetry_residual();
  report.c = real_c.symmetric_part();
  const ComplexMatrix eet = e * e.adjoint();
  report.imag_residual = std::max(raw_c.max_imag(), eet.max_imag());
  report.factor_residual = report.c.max_abs_diff(eet);
  report.max_abs = report.c.max_abs();
  report.frobenius = report.c.frobenius();
  report.min_eigenvalue = matfun::hermitian_spectrum(report.c).eigenvalues.front();
  report.e = std::move(e);
  return report;
}

CovarianceReport covariance_closed_form(const AdjacencyMatrix& a, const PhaseVector& theta,
                                        const ComplexMatrix& p, const SqueezeScale& z,
                                        const Tolerances& tol) {
  if (!z.positive()) {
    throw Error(ErrorCode::InvalidArgument, "nullifier covariance needs z > 0");
  }
  const GaugeCheck check = validate_gauge(a, theta, p, tol);
  if (!check.compatible) {
    throw Error(ErrorCode::GaugeIncompatible,
                "gauge compatibility check failed (relative imaginary part " +
                    std::to_string(check.residual) + ")");
  }
  const double s = z.value();
  const ComplexMatrix decay =
      matfun::hermitian_apply(p, [s](double l) { return std::exp(-s * l); }, tol);
  ComplexMatrix e = add_identity(a.matrix(), kI).scale_cols(theta.phase_factors(1.0)) * decay;
  const ComplexMatrix eet = e * e.adjoint();
  return make_covariance_report(eet, std::move(e));
}

std::vector<SqueezerMode> squeezer_spectrum(const InteractionMatrix& zm, const SqueezeScale& z) {
  std::vector<SqueezerMode> modes;
  modes.reserve(zm.strengths().size());
  for (double l : zm.strengths()) {
    const double r = z.value() * l;
    modes.push_back({l, std::cosh(r), std::sinh(r), 20.0 * r / std::numbers::ln10});
  }
  return modes;
}

}  // namespace gcluster::synthesis
