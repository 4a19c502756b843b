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

#include "gcluster/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"

namespace gcluster::oracle {
namespace {

constexpr cplx kI{0.0, 1.0};

double one_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) col += std::abs(m(i, j));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "expm needs a square matrix");
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const std::size_t n = m.rows();
  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
  const ComplexMatrix a = m * std::ldexp(1.0, -squarings);

  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]) + a6 * b[7] +
                                a4 * b[5] + a2 * b[3] + ident * b[1];
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]) + a6 * b[6] + a4 * b[4] +
                          a2 * b[2] + ident * b[0];

  ComplexMatrix r = matfun::inverse(v - u) * (v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

ComplexMatrix swap_form(std::size_t n) {
  ComplexMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1.0;
    g(n + i, i) = 1.0;
  }
  return g;
}

ComplexMatrix squeezing_generator(const ComplexMatrix& z_matrix, double z) {
  if (!z_matrix.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "interaction matrix must be square");
  }
  const std::size_t n = z_matrix.rows();
  ComplexMatrix gamma(2 * n, 2 * n);
  gamma.set_block(0, n, z_matrix * (-kI * z));
  gamma.set_block(n, 0, z_matrix.conj() * (kI * z));
  return gamma;
}

ComplexMatrix bogoliubov_matrix(const ComplexMatrix& z_matrix, double z, const Tolerances& tol) {
  if (!std::isfinite(z) || z < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "squeezing scale z must be finite and >= 0");
  }
  const auto sv = matfun::singular_values(z_matrix);
  const double strength = z * (sv.empty() ? 0.0 : sv.back());
  if (strength > tol.max_squeezing) {
    throw Error(ErrorCode::SqueezingOutOfRange,
                "z * lambda_max = " + std::to_string(strength) + " exceeds " +
                    std::to_string(tol.max_squeezing) + " (double precision exhausted)");
  }
  return expm(squeezing_generator(z_matrix, z));
}

BogoliubovPair pair_from_matrix(const ComplexMatrix& b) {
  const std::size_t n = b.rows() / 2;
  return {b.block(0, 0, n, n), b.block(0, n, n, n)};
}

double conjugation_residual(const ComplexMatrix& b) {
  const std::size_t n = b.rows() / 2;
  return std::max(b.block(n, 0, n, n).max_abs_diff(b.block(0, n, n, n).conj()),
                  b.block(n, n, n, n).max_abs_diff(b.block(0, 0, n, n).conj()));
}

BogoliubovPair bogoliubov_oracle(const InteractionMatrix& zm, const SqueezeScale& z,
                                 const Tolerances& tol) {
  return pair_from_matrix(bogoliubov_matrix(zm.z(), z.value(), tol));
}

CovarianceReport covariance_from_bogoliubov(const AdjacencyMatrix& a, const PhaseVector& theta,
                                            const ComplexMatrix& b) {
  const graph::NullifierMap map = graph::nullifier_map(a, theta);
  const std::size_t n = map.modes();
  if (b.rows() != 2 * n || b.cols() != 2 * n) {
    throw Error(ErrorCode::DimensionMismatch, "Bogoliubov matrix does not match graph size");
  }
  const ComplexMatrix qb = map.q() * b;
  const ComplexMatrix raw_c = qb * swap_form(n) * qb.transpose() * 0.5;
  return synthesis::make_covariance_report(raw_c, -qb.block(0, 0, n, n));
}

CovarianceReport covariance_oracle(const AdjacencyMatrix& a, const PhaseVector& theta,
                                   const InteractionMatrix& zm, const SqueezeScale& z,
                                   const Tolerances& tol) {
  if (zm.modes() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch, "interaction matrix does not match graph size");
  }
  return covariance_from_bogoliubov(a, theta, bogoliubov_matrix(zm.z(), z.value(), tol));
}

SweepResult convergence_sweep(const AdjacencyMatrix& a, const PhaseVector& theta,
                              const synthesis::Gauge& gauge, const std::vector<double>& z_values,
                              const Tolerances& tol) {
  if (z_values.empty()) throw Error(ErrorCode::InvalidArgument, "empty z list");
  for (std::size_t i = 0; i < z_values.size(); ++i) {
    if (!(z_values[i] > 0.0) || !std::isfinite(z_values[i])) {
      throw Error(ErrorCode::InvalidArgument, "sweep z values must be positive");
    }
    if (i > 0 && !(z_values[i] > z_values[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "sweep z values must be strictly ascending");
    }
  }
  SweepResult result;
  for (std::size_t i = 0; i < z_values.size(); ++i) {
    const SqueezeScale z(z_values[i]);
    const ComplexMatrix p = synthesis::resolve_gauge(gauge, a, theta, z);
    const CovarianceReport closed = synthesis::covariance_closed_form(a, theta, p, z, tol);
    result.rows.push_back({z.value(), closed.max_abs, closed.frobenius});
    if (i > 0 && !(closed.max_abs < result.rows[i - 1].max_abs_c)) result.decreasing = false;
    if (i == 0 || i + 1 == z_values.size()) {
      const auto zm = synthesis::interaction_from_cluster(a, theta, p, tol);
      const double gap = covariance_oracle(a, theta, zm, z, tol).c.max_abs_diff(closed.c);
      if (i == 0) result.oracle_gap_first = gap;
      if (i + 1 == z_values.size()) result.oracle_gap_last = gap;
    }
  }
  return result;
}

}  // namespace gcluster::oracle
