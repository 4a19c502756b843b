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

#include "gcluster/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eigen_bridge.hpp"
#include "gcluster/error.hpp"

namespace gcluster::matfun {
namespace {

constexpr double kPhaseEps = 1e-10;

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square() || m.empty()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " needs a non-empty square matrix");
  }
}

// Make the first non-negligible component of every column real positive.
void normalize_column_phases(ComplexMatrix& v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      const double mag = std::abs(v(i, j));
      if (mag > kPhaseEps) {
        const cplx phase = std::conj(v(i, j)) / mag;
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) *= phase;
        break;
      }
    }
  }
}

// Consecutive eigenvalues closer than `gap` form one cluster; returns
// [begin, end) ranges.
std::vector<std::pair<std::size_t, std::size_t>> clusters(
    const std::vector<double>& ascending, double gap) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= ascending.size(); ++i) {
    if (i == ascending.size() || ascending[i] - ascending[i - 1] >= gap) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  return out;
}

}  // namespace

double principal_angle(double theta) {
  double r = std::remainder(theta, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

ComplexMatrix HermitianSpectrum::reconstruct() const {
  return apply([](double x) { return x; });
}

ComplexMatrix HermitianSpectrum::apply(const ScalarFunction& f) const {
  std::vector<cplx> values(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const double fx = f(eigenvalues[i]);
    if (!std::isfinite(fx)) {
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(eigenvalues[i]));
    }
    values[i] = fx;
  }
  return (eigenvectors.scale_cols(values) * eigenvectors.adjoint()).hermitian_part();
}

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m, "hermitian_spectrum");
  const double residual = m.hermiticity_residual();
  if (residual > tol.rtol * std::max(1.0, m.max_abs())) {
    throw Error(ErrorCode::NotHermitian,
                "hermiticity residual " + std::to_string(residual));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      detail::to_eigen(m.hermitian_part()));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DomainError, "Hermitian eigensolver did not converge");
  }
  HermitianSpectrum spec;
  spec.eigenvalues.assign(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  spec.eigenvectors = detail::from_eigen(solver.eigenvectors());
  normalize_column_phases(spec.eigenvectors);
  return spec;
}

ComplexMatrix hermitian_apply(const ComplexMatrix& m, const ScalarFunction& f,
                              const Tolerances& tol) {
  return hermitian_spectrum(m, tol).apply(f);
}

PolarFactors polar_decompose_symmetric(const ComplexMatrix& z, const Tolerances& tol) {
  require_square(z, "polar_decompose_symmetric");
  const double scale = z.max_abs();
  const double asym = z.symmetry_residual();
  if (asym > tol.rtol * std::max(scale, 1e-300)) {
    throw Error(ErrorCode::NotSymmetric, "symmetry residual " + std::to_string(asym));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(z),
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smax > 0.0) || smin < tol.singular * smax) {
    throw Error(ErrorCode::SingularInput,
                "sigma_min/sigma_max = " + std::to_string(smax > 0.0 ? smin / smax : 0.0));
  }
  const Eigen::MatrixXcd& left = svd.matrixU();
  const Eigen::MatrixXcd& right = svd.matrixV();
  PolarFactors out;
  out.p = detail::from_eigen(left * sv.asDiagonal() * left.adjoint()).hermitian_part();
  out.u = detail::from_eigen(left * right.adjoint());
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  std::reverse(out.singular_values.begin(), out.singular_values.end());
  return out;
}

SymmetricUnitarySpectrum symmetric_unitary_spectrum(const ComplexMatrix& s,
                                                    const Tolerances& tol) {
  require_square(s, "symmetric_unitary_spectrum");
  const double unit = s.unitarity_residual();
  if (unit > tol.rtol) {
    throw Error(ErrorCode::NotUnitary, "unitarity residual " + std::to_string(unit));
  }
  const double asym = s.symmetry_residual();
  if (asym > tol.rtol) {
    throw Error(ErrorCode::NotSymmetric, "symmetry residual " + std::to_string(asym));
  }
  const ComplexMatrix sym = s.symmetric_part();
  const Eigen::MatrixXd re = detail::to_eigen_real(sym.real_part());
  const Eigen::MatrixXd im = detail::to_eigen_real(sym.imag_part());
  const auto n = re.rows();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> re_solver(re);
  Eigen::MatrixXd q = re_solver.eigenvectors();
  const Eigen::VectorXd& re_values = re_solver.eigenvalues();
  const std::vector<double> ascending(re_values.data(), re_values.data() + n);

  for (auto [begin, end] : clusters(ascending, tol.degeneracy)) {
    const auto size = static_cast<Eigen::Index>(end - begin);
    if (size < 2) continue;
    const Eigen::MatrixXd basis = q.middleCols(static_cast<Eigen::Index>(begin), size);
    const Eigen::MatrixXd restricted = basis.transpose() * im * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> im_solver(
        0.5 * (restricted + restricted.transpose()));
    q.middleCols(static_cast<Eigen::Index>(begin), size) = basis * im_solver.eigenvectors();
  }

  SymmetricUnitarySpectrum out;
  out.q = detail::from_eigen(q);
  for (std::size_t j = 0; j < out.q.cols(); ++j) {
    for (std::size_t i = 0; i < out.q.rows(); ++i) {
      if (std::abs(out.q(i, j).real()) > kPhaseEps) {
        if (out.q(i, j).real() < 0.0) {
          for (std::size_t r = 0; r < out.q.rows(); ++r) out.q(r, j) = -out.q(r, j);
        }
        break;
      }
    }
  }
  const ComplexMatrix diag = out.q.transpose() * sym * out.q;
  out.angles.resize(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < out.angles.size(); ++j) {
    double angle = std::atan2(diag(j, j).imag(), diag(j, j).real());
    if (angle <= -std::numbers::pi) angle = std::numbers::pi;
    out.angles[j] = angle;
  }
  return out;
}

ComplexMatrix takagi_symmetric_unitary(const ComplexMatrix& s, const Tolerances& tol) {
  const SymmetricUnitarySpectrum spec = symmetric_unitary_spectrum(s, tol);
  std::vector<cplx> half(spec.angles.size());
  for (std::size_t j = 0; j < half.size(); ++j) half[j] = std::polar(1.0, 0.5 * spec.angles[j]);
  return spec.q.scale_cols(half);
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m));
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::reverse(out.begin(), out.end());
  return out;
}

double sigma_min(const ComplexMatrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  require_square(m, "inverse");
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(detail::to_eigen(m));
  if (!(lu.rcond() > 1e-15)) {
    throw Error(ErrorCode::SingularInput, "matrix is numerically singular");
  }
  return detail::from_eigen(lu.inverse());
}

}  // namespace gcluster::matfun
