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

#include <gtest/gtest.h>

#include <cmath>

#include "gcluster/error.hpp"
#include "gcluster/matfun.hpp"
#include "random_instances.hpp"

namespace gcluster {
namespace {

using cplx = std::complex<double>;
using testing::Rng;
const cplx I(0.0, 1.0);

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gcluster::Error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(HermitianApply, Examples) {
  const auto exp_f = [](double x) { return std::exp(x); };
  EXPECT_LE(matfun::hermitian_apply(ComplexMatrix(1, 1), exp_f).max_abs_diff(
                ComplexMatrix::identity(1)),
            1e-15);
  const ComplexMatrix ln2 =
      matfun::hermitian_apply(ComplexMatrix::identity(2) * 2.0, [](double x) { return std::log(x); });
  EXPECT_LE(ln2.max_abs_diff(ComplexMatrix::identity(2) * std::log(2.0)), 1e-14);
  EXPECT_NEAR(ln2(0, 0).real(), 0.693147, 5e-7);
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ch = matfun::hermitian_apply(swap, [](double x) { return std::cosh(x); });
  EXPECT_LE(ch.max_abs_diff(ComplexMatrix::identity(2) * std::cosh(1.0)), 1e-14);
  EXPECT_NEAR(ch(1, 1).real(), 1.543081, 5e-7);
}

TEST(HermitianApply, ErrorPaths) {
  EXPECT_EQ(code_of([] { matfun::hermitian_apply(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, [](double x) { return x; }); }),
            ErrorCode::NotHermitian);
  EXPECT_EQ(code_of([] {
              matfun::hermitian_apply(ComplexMatrix{{-1.0}}, [](double x) { return std::log(x); });
            }),
            ErrorCode::DomainError);
}

TEST(HermitianApply, ExpAgreesWithTaylorOracleAndInverts) {
  Rng rng(21);
  const auto exp_f = [](double x) { return std::exp(x); };
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const ComplexMatrix m = testing::random_hermitian(rng, n);
    const ComplexMatrix e = matfun::hermitian_apply(m, exp_f);
    const ComplexMatrix e_neg = matfun::hermitian_apply(-m, exp_f);
    EXPECT_LE((e * e_neg).max_abs_diff(ComplexMatrix::identity(n)), 1e-9);
    const ComplexMatrix oracle = testing::taylor_expm(m);
    EXPECT_LE(e.max_abs_diff(oracle), 1e-10 * std::max(1.0, oracle.max_abs()));
  }
}

TEST(HermitianSpectrum, ReconstructsAndSortsAscending) {
  Rng rng(22);
  const ComplexMatrix m = testing::random_hermitian(rng, 6);
  const auto spec = matfun::hermitian_spectrum(m);
  EXPECT_LE(spec.reconstruct().max_abs_diff(m), 1e-12);
  EXPECT_TRUE(std::is_sorted(spec.eigenvalues.begin(), spec.eigenvalues.end()));
  EXPECT_LE(spec.eigenvectors.unitarity_residual(), 1e-12);
}

TEST(PolarDecomposition, Examples) {
  const auto a = matfun::polar_decompose_symmetric(ComplexMatrix::identity(2) * I);
  EXPECT_LE(a.p.max_abs_diff(ComplexMatrix::identity(2)), 1e-14);
  EXPECT_LE(a.u.max_abs_diff(ComplexMatrix::identity(2) * I), 1e-14);

  const ComplexMatrix dz{{2.0, 0.0}, {0.0, 3.0 * I}};
  const auto b = matfun::polar_decompose_symmetric(dz);
  EXPECT_LE(b.p.max_abs_diff(testing::diag_real({2.0, 3.0})), 1e-14);
  EXPECT_LE(b.u.max_abs_diff(ComplexMatrix{{1.0, 0.0}, {0.0, I}}), 1e-14);

  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const auto c = matfun::polar_decompose_symmetric(swap * -2.0);
  EXPECT_LE(c.p.max_abs_diff(ComplexMatrix::identity(2) * 2.0), 1e-14);
  EXPECT_LE(c.u.max_abs_diff(-swap), 1e-14);
  // independent oracle
  EXPECT_LE(c.u.max_abs_diff(testing::newton_polar_unitary(swap * -2.0)), 1e-12);
}

TEST(PolarDecomposition, RandomInvariantsAgainstNewtonOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const ComplexMatrix z = testing::random_complex_symmetric(rng, n);
    const auto f = matfun::polar_decompose_symmetric(z);
    const double scale = z.max_abs();
    EXPECT_LE(f.u.unitarity_residual(), 1e-9);
    EXPECT_LE(f.u.symmetry_residual(), 1e-9);
    EXPECT_LE(f.p.hermiticity_residual(), 1e-9 * scale);
    EXPECT_GT(f.singular_values.front(), 0.0);
    EXPECT_LE((f.p * f.u).max_abs_diff(z), 1e-9 * scale);
    EXPECT_LE((f.p * f.u).max_abs_diff(f.u * f.p.conj()), 1e-9 * scale);
    EXPECT_LE(f.u.max_abs_diff(testing::newton_polar_unitary(z)), 1e-8);
  }
}

TEST(PolarDecomposition, ErrorPaths) {
  EXPECT_EQ(code_of([] { matfun::polar_decompose_symmetric(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}); }),
            ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { matfun::polar_decompose_symmetric(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}); }),
            ErrorCode::SingularInput);
  EXPECT_EQ(code_of([] { matfun::polar_decompose_symmetric(ComplexMatrix(2, 3)); }),
            ErrorCode::DimensionMismatch);
}

TEST(Takagi, Examples) {
  EXPECT_LE(matfun::takagi_symmetric_unitary(ComplexMatrix::identity(2))
                .max_abs_diff(ComplexMatrix::identity(2)),
            1e-14);
  const ComplexMatrix r = matfun::takagi_symmetric_unitary(ComplexMatrix{{I}});
  EXPECT_LE(std::abs(r(0, 0) - std::polar(1.0, testing::kPi / 4)), 1e-14);
  const ComplexMatrix s{{0.0, -1.0}, {-1.0, 0.0}};
  const ComplexMatrix r2 = matfun::takagi_symmetric_unitary(s);
  EXPECT_LE((r2 * r2.transpose()).max_abs_diff(s), 1e-14);
  EXPECT_LE(r2.unitarity_residual(), 1e-14);
}

TEST(Takagi, AngleBranchPicksPlusPi) {
  const auto spec = matfun::symmetric_unitary_spectrum(ComplexMatrix{{-1.0}});
  EXPECT_DOUBLE_EQ(spec.angles[0], testing::kPi);
  const ComplexMatrix r = matfun::takagi_symmetric_unitary(ComplexMatrix{{-1.0}});
  EXPECT_LE(std::abs(r(0, 0) - I), 1e-15);
}

TEST(Takagi, RandomSymmetricUnitaries) {
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const ComplexMatrix s = testing::random_symmetric_unitary(rng, n);
    const ComplexMatrix r = matfun::takagi_symmetric_unitary(s);
    EXPECT_LE((r * r.transpose()).max_abs_diff(s), 1e-9);
    EXPECT_LE(r.unitarity_residual(), 1e-9);
  }
}

TEST(Takagi, DegenerateRealPartNeedsImaginaryRediagonalization) {
  // Q diag(e^{i a}, e^{-i a}, 1) Q^T: Re(S) has a doubly degenerate
  // eigenvalue cos a, separated only by Im(S).
  Rng rng(25);
  const ComplexMatrix q = testing::random_orthogonal(rng, 3);
  const double a = 0.7;
  const std::vector<cplx> d = {std::polar(1.0, a), std::polar(1.0, -a), 1.0};
  const ComplexMatrix s = (q * ComplexMatrix::diagonal(std::span<const cplx>(d)) * q.transpose()).symmetric_part();
  const ComplexMatrix r = matfun::takagi_symmetric_unitary(s);
  EXPECT_LE((r * r.transpose()).max_abs_diff(s), 1e-12);
  const auto spec = matfun::symmetric_unitary_spectrum(s);
  EXPECT_LE(spec.q.orthogonality_residual(), 1e-12);
}

TEST(Takagi, ErrorPaths) {
  EXPECT_EQ(code_of([] { matfun::takagi_symmetric_unitary(ComplexMatrix{{2.0}}); }),
            ErrorCode::NotUnitary);
  const ComplexMatrix nonsym{{0.0, 1.0}, {I, 0.0}};
  EXPECT_EQ(code_of([&] { matfun::takagi_symmetric_unitary(nonsym); }), ErrorCode::NotSymmetric);
}

TEST(Helpers, SingularValuesInverseAndAngles) {
  const auto sv = matfun::singular_values(ComplexMatrix{{3.0, 0.0}, {0.0, -2.0 * I}});
  ASSERT_EQ(sv.size(), 2u);
  EXPECT_NEAR(sv[0], 2.0, 1e-15);
  EXPECT_NEAR(sv[1], 3.0, 1e-15);
  EXPECT_NEAR(matfun::sigma_min(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}), 0.0, 1e-15);
  Rng rng(26);
  const ComplexMatrix m = testing::random_complex(rng, 5, 5);
  EXPECT_LE(matfun::inverse(m).max_abs_diff(testing::gauss_jordan_inverse(m)), 1e-10);
  EXPECT_EQ(code_of([] { matfun::inverse(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}); }),
            ErrorCode::SingularInput);
  EXPECT_DOUBLE_EQ(matfun::principal_angle(-testing::kPi), testing::kPi);
  EXPECT_NEAR(matfun::principal_angle(3.0 * testing::kPi), testing::kPi, 1e-15);
  EXPECT_NEAR(matfun::principal_angle(-0.5), -0.5, 1e-15);
}

}  // namespace
}  // namespace gcluster
