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

#include "gcluster/error.hpp"
#include "gcluster/matrix.hpp"
#include "gcluster/numfmt.hpp"
#include "random_instances.hpp"

namespace gcluster {
namespace {

using cplx = std::complex<double>;
const cplx I(0.0, 1.0);

TEST(ComplexMatrix, ConstructionAndAccess) {
  const ComplexMatrix m{{1.0, I}, {2.0, 3.0}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(0, 1), I);
  EXPECT_EQ(ComplexMatrix(2, 3).max_abs(), 0.0);
  EXPECT_EQ(ComplexMatrix::identity(3).frobenius(), std::sqrt(3.0));
}

TEST(ComplexMatrix, RejectsBadInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ComplexMatrix(1, 1, {cplx(nan, 0.0)}), Error);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), Error);
  try {
    (void)(ComplexMatrix(2, 3) * ComplexMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(ComplexMatrix, TransposeAdjointConj) {
  const ComplexMatrix m{{1.0, I}, {cplx(2.0, -1.0), 3.0}};
  EXPECT_EQ(m.transpose()(0, 1), cplx(2.0, -1.0));
  EXPECT_EQ(m.adjoint()(0, 1), cplx(2.0, 1.0));
  EXPECT_EQ(m.conj()(0, 1), -I);
  EXPECT_EQ(m.real_part()(0, 1), cplx(0.0));
  EXPECT_EQ(m.imag_part()(1, 0), cplx(-1.0));
  EXPECT_DOUBLE_EQ(m.max_imag(), 1.0);
  EXPECT_LE(m.symmetric_part().symmetry_residual(), 0.0);
  EXPECT_LE(m.hermitian_part().hermiticity_residual(), 0.0);
}

TEST(ComplexMatrix, ProductMatchesHandComputation) {
  const ComplexMatrix a{{1.0, I}, {0.0, 2.0}};
  const ComplexMatrix b{{I, 0.0}, {1.0, -1.0}};
  const ComplexMatrix c = a * b;
  EXPECT_EQ(c(0, 0), 2.0 * I);
  EXPECT_EQ(c(0, 1), -I);
  EXPECT_EQ(c(1, 0), cplx(2.0));
  EXPECT_EQ(c(1, 1), cplx(-2.0));
}

TEST(ComplexMatrix, BlocksAndScaling) {
  ComplexMatrix m(3, 4);
  m.set_block(1, 2, ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}});
  EXPECT_EQ(m(2, 3), cplx(4.0));
  EXPECT_EQ(m.block(1, 2, 2, 2)(0, 1), cplx(2.0));
  EXPECT_THROW(m.block(2, 2, 2, 2), Error);
  const std::vector<cplx> d = {2.0, I};
  const ComplexMatrix s = ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}.scale_rows(d).scale_cols(d);
  EXPECT_EQ(s(0, 0), cplx(4.0));
  EXPECT_EQ(s(1, 1), cplx(-1.0));
  EXPECT_EQ(s(0, 1), 2.0 * I);
}

TEST(ComplexMatrix, StructureResiduals) {
  testing::Rng rng(3);
  const ComplexMatrix u = testing::random_unitary(rng, 5);
  EXPECT_LE(u.unitarity_residual(), 1e-13);
  EXPECT_TRUE(u.is_unitary(1e-12));
  EXPECT_FALSE((u * 2.0).is_unitary(1e-3));
  const ComplexMatrix o = testing::random_orthogonal(rng, 4);
  EXPECT_LE(o.orthogonality_residual(), 1e-13);
  EXPECT_GT(u.orthogonality_residual(), 1e-3);
  const ComplexMatrix s = testing::random_symmetric_unitary(rng, 4);
  EXPECT_TRUE(s.is_symmetric(1e-13));
  EXPECT_TRUE(s.is_unitary(1e-12));
}

TEST(ComplexMatrix, AddIdentity) {
  const ComplexMatrix a{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix b = add_identity(a, I);
  EXPECT_EQ(b(0, 0), I);
  EXPECT_EQ(b(0, 1), cplx(1.0));
  EXPECT_THROW(add_identity(ComplexMatrix(2, 3), 1.0), Error);
}

TEST(NumberFormat, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  const double v = 2.0 * std::exp(-2.0);
  EXPECT_EQ(std::stod(format_double(v)), v);
}

}  // namespace
}  // namespace gcluster
