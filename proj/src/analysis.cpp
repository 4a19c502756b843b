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

#include "gcluster/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"

namespace gcluster::analysis {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_symmetric_unitary(const ComplexMatrix& u, const Tolerances& tol) {
  if (!u.is_square() || u.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "U must be a non-empty square matrix");
  }
  const double unit = u.unitarity_residual();
  if (unit > tol.rtol) {
    throw Error(ErrorCode::NotUnitary, "unitarity residual " + std::to_string(unit));
  }
  const double asym = u.symmetry_residual();
  if (asym > tol.rtol) {
    throw Error(ErrorCode::NotSymmetric, "symmetry residual " + std::to_string(asym));
  }
}

// i e^{-2i Theta}
std::vector<cplx> shifted_phases(const PhaseVector& theta) {
  std::vector<cplx> d = theta.phase_factors(-2.0);
  for (cplx& v : d) v *= kI;
  return d;
}

ComplexMatrix add_diagonal(const ComplexMatrix& m, const std::vector<cplx>& d, double sign) {
  ComplexMatrix out(m);
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) += sign * d[i];
  return out;
}

}  // namespace

KMatrix::KMatrix(const ComplexMatrix& k, const Tolerances& tol) {
  if (!k.is_square()) throw Error(ErrorCode::DimensionMismatch, "K must be square");
  const double scale = tol.rtol * std::max(1.0, k.max_abs());
  if (k.max_imag() > scale) throw Error(ErrorCode::NonRealResult, "K must be real");
  if (k.symmetry_residual() > scale) throw Error(ErrorCode::NotSymmetric, "K must be symmetric");
  k_ = k.real_part().symmetric_part();
}

double phase_regularity(const ComplexMatrix& u, const PhaseVector& theta) {
  if (theta.size() != u.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "phase vector length differs from U");
  }
  return matfun::sigma_min(add_diagonal(u, shifted_phases(theta), 1.0));
}

AdjacencyMatrix adjacency_from_unitary(const ComplexMatrix& u, const PhaseVector& theta,
                                       const Tolerances& tol) {
  require_symmetric_unitary(u, tol);
  const double sigma = phase_regularity(u, theta);
  if (sigma < tol.phase_floor) {
    throw Error(ErrorCode::SingularPhasePoint,
                "U + i e^{-2i Theta} is singular (sigma_min " + std::to_string(sigma) +
                    "); choose other local phases");
  }
  const std::vector<cplx> d = shifted_phases(theta);
  const ComplexMatrix ratio =
      add_diagonal(u, d, -1.0) * matfun::inverse(add_diagonal(u, d, 1.0));
  // The outer e^{i Theta} ... e^{-i Theta} undoes the rotation that the
  // non-commuting quotient leaves behind.
  const ComplexMatrix a = (-kI * ratio)
                              .scale_rows(theta.phase_factors(1.0))
                              .scale_cols(theta.phase_factors(-1.0));
  const double scale = std::max(1.0, a.max_abs());
  if (a.max_imag() > tol.oracle * scale) {
    throw Error(ErrorCode::NonRealResult,
                "recovered adjacency has imaginary part " + std::to_string(a.max_imag()));
  }
  const ComplexMatrix re = a.real_part();
  if (re.symmetry_residual() > tol.oracle * scale) {
    throw Error(ErrorCode::NotSymmetric, "recovered adjacency is not symmetric");
  }
  return AdjacencyMatrix(re.symmetric_part());
}

PhaseSearchReport search_regular_phases(const ComplexMatrix& u, std::uint64_t seed,
                                        const Tolerances& tol) {
  require_symmetric_unitary(u, tol);
  const std::size_t n = u.rows();
  PhaseSearchReport report;
  std::optional<PhaseAttempt> best;

  auto try_candidate = [&](std::string label, std::vector<double> angles) {
    PhaseVector theta(std::move(angles));
    const double sigma = phase_regularity(u, theta);
    report.attempts.push_back({std::move(label), theta, sigma});
    if (!best || sigma > best->sigma_min) best = report.attempts.back();
    return sigma >= tol.phase_accept;
  };
  auto accept = [&](const PhaseAttempt& a) {
    report.theta = a.theta;
    report.sigma_min = a.sigma_min;
    return report;
  };

  if (try_candidate("zero", std::vector<double>(n, 0.0))) return accept(report.attempts.back());
  for (int k = 1; k <= 16; ++k) {
    if (try_candidate("uniform pi*" + std::to_string(k) + "/16",
                      std::vector<double>(n, std::numbers::pi * k / 16.0))) {
      return accept(report.attempts.back());
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int k = 0; k < 64; ++k) {
    std::vector<double> angles(n);
    for (double& a : angles) a = angle(rng);
    if (try_candidate("random #" + std::to_string(k), std::move(angles))) {
      return accept(report.attempts.back());
    }
  }
  if (best && best->sigma_min >= tol.phase_floor) return accept(*best);
  throw Error(ErrorCode::SearchExhausted,
              "no local phases regularize U (best sigma_min " +
                  std::to_string(best ? best->sigma_min : 0.0) + ")");
}

PhaseVector find_regular_phases(const ComplexMatrix& u, std::uint64_t seed,
                                const Tolerances& tol) {
  return search_regular_phases(u, seed, tol).theta;
}

KMatrix k_matrix_form(const ComplexMatrix& u, const PhaseVector& theta, const Tolerances& tol) {
  require_symmetric_unitary(u, tol);
  if (theta.size() != u.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "phase vector length differs from U");
  }
  const std::vector<cplx> f = theta.phase_factors(1.0);
  const auto spec = matfun::symmetric_unitary_spectrum(u.scale_rows(f).scale_cols(f), tol);
  const ComplexMatrix k = spec.q * ComplexMatrix::diagonal(std::span<const double>(spec.angles)) *
                          spec.q.transpose();
  return KMatrix(k, tol);
}

AdjacencyMatrix adjacency_from_k(const KMatrix& k, const Tolerances& tol) {
  const matfun::HermitianSpectrum spec = matfun::hermitian_spectrum(k.matrix(), tol);
  double smallest = std::numeric_limits<double>::infinity();
  for (double l : spec.eigenvalues) smallest = std::min(smallest, std::abs(1.0 + std::sin(l)));
  if (smallest < tol.phase_floor) {
    throw Error(ErrorCode::SingularPhasePoint,
                "1 + sin(K) is singular (an eigenangle of K is -pi/2)");
  }
  const ComplexMatrix a =
      spec.apply([](double l) { return -std::cos(l) / (1.0 + std::sin(l)); });
  return AdjacencyMatrix(a.real_part().symmetric_part());
}

AnalysisResult analyze_interaction(const synthesis::InteractionMatrix& zm,
                                   const std::optional<PhaseVector>& theta,
                                   const synthesis::SqueezeScale& z, std::uint64_t seed,
                                   const Tolerances& tol) {
  AnalysisResult result;
  if (theta) {
    const double sigma = phase_regularity(zm.u(), *theta);
    if (sigma >= tol.phase_floor) {
      result.theta = *theta;
      result.sigma_min = sigma;
      result.used_given_phases = true;
    }
  }
  if (!result.used_given_phases) {
    result.search = search_regular_phases(zm.u(), seed, tol);
    result.theta = result.search->theta;
    result.sigma_min = result.search->sigma_min;
  }
  result.adjacency = adjacency_from_unitary(zm.u(), result.theta, tol);
  result.covariance =
      synthesis::covariance_closed_form(result.adjacency, result.theta, zm.p(), z, tol);
  return result;
}

}  // namespace gcluster::analysis
