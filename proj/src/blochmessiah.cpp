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

#include "gcluster/blochmessiah.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"

namespace gcluster::blochmessiah {
namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<cplx> diag_of(const std::vector<double>& d, double (*f)(double), double scale) {
  std::vector<cplx> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = f(scale * d[i]);
  return out;
}

}  // namespace

std::vector<double> BlochMessiahFactors::squeezing() const {
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = z * d[i];
  return out;
}

std::vector<double> BlochMessiahFactors::squeezing_db() const {
  std::vector<double> out = squeezing();
  for (double& s : out) s = 20.0 * s / std::numbers::ln10;
  return out;
}

ComplexMatrix BlochMessiahFactors::x() const {
  return v.scale_cols(diag_of(d, [](double s) { return std::cosh(s); }, z)) * w.adjoint();
}

ComplexMatrix BlochMessiahFactors::y() const {
  return v.scale_cols(diag_of(d, [](double s) { return std::sinh(s); }, z)) * w.transpose();
}

OrthogonalSeed::OrthogonalSeed(const ComplexMatrix& o) {
  if (!o.is_square()) throw Error(ErrorCode::DimensionMismatch, "O must be square");
  const double residual = o.orthogonality_residual();
  if (residual > 1e-12) {
    throw Error(ErrorCode::NotOrthogonal, "O O^T residual " + std::to_string(residual));
  }
  o_ = o.real_part();
}

BlochMessiahFactors bloch_messiah(const synthesis::InteractionMatrix& zm,
                                  const synthesis::SqueezeScale& z, const Tolerances& tol) {
  if (!z.positive()) throw Error(ErrorCode::InvalidArgument, "Bloch-Messiah needs z > 0");
  const matfun::HermitianSpectrum spec = matfun::hermitian_spectrum(zm.p(), tol);
  const std::size_t n = zm.modes();

  BlochMessiahFactors f;
  f.z = z.value();
  f.d = spec.eigenvalues;
  f.t = spec.eigenvectors.adjoint();

  // S = -i T U T^T commutes with diag(d), so it is block diagonal over the
  // degenerate eigenspaces of P. Factorizing block by block keeps R
  // commuting with cosh(zD) and sinh(zD).
  const ComplexMatrix s = (-kI * (f.t * zm.u() * f.t.transpose())).symmetric_part();
  f.r = ComplexMatrix(n, n);
  const double gap = tol.degeneracy * std::max(1.0, f.d.back());
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && f.d[i] - f.d[i - 1] < gap) continue;
    const std::size_t size = i - begin;
    f.r.set_block(begin, begin,
                  matfun::takagi_symmetric_unitary(s.block(begin, begin, size, size), tol));
    begin = i;
  }

  f.v = f.t.adjoint() * f.r;
  f.w = -kI * (zm.u() * f.t.transpose() * f.r.conj());
  return f;
}

ComplexMatrix canonical_cluster_interferometer(const AdjacencyMatrix& a, const PhaseVector& theta,
                                               const OrthogonalSeed& o) {
  const std::size_t n = a.size();
  if (theta.size() != n || o.matrix().rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "A, Theta and O sizes differ");
  }
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix inv_sqrt = matfun::hermitian_apply(
      add_identity(am * am, 1.0), [](double x) { return 1.0 / std::sqrt(x); });
  return (add_identity(am * kI, 1.0) * inv_sqrt * o.matrix())
      .scale_rows(theta.phase_factors(-1.0));
}

double cluster_condition_residual(const ComplexMatrix& v, const AdjacencyMatrix& a,
                                  const PhaseVector& theta) {
  if (v.rows() != a.size() || theta.size() != a.size() || !v.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "V, A and Theta sizes differ");
  }
  const ComplexMatrix& am = a.matrix();
  const ComplexMatrix growing =
      add_identity(am, kI) * v.scale_rows(theta.phase_factors(1.0)) +
      add_identity(am, -kI) * v.conj().scale_rows(theta.phase_factors(-1.0));
  return growing.max_abs();
}

InterferometerConditions interferometer_conditions(const ComplexMatrix& v,
                                                   const AdjacencyMatrix& a,
                                                   const PhaseVector& theta) {
  if (v.rows() != a.size() || theta.size() != a.size() || !v.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "V, A and Theta sizes differ");
  }
  const ComplexMatrix rotated = v.scale_rows(theta.phase_factors(1.0));
  const ComplexMatrix vr = rotated.real_part();
  const ComplexMatrix vi = rotated.imag_part();
  const ComplexMatrix& am = a.matrix();
  InterferometerConditions c;
  c.imag_vs_real = vi.max_abs_diff(am * vr);
  c.real_gram =
      (vr * vr.transpose()).max_abs_diff(matfun::inverse(add_identity(am * am, 1.0)));
  return c;
}

ComplexMatrix unitary_from_interferometer(const ComplexMatrix& v) {
  if (!v.is_square()) throw Error(ErrorCode::DimensionMismatch, "V must be square");
  return (kI * (v * v.transpose())).symmetric_part();
}

}  // namespace gcluster::blochmessiah
