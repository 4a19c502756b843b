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
#include "gcluster/oracle.hpp"
#include "gcluster/synthesis.hpp"
#include "random_instances.hpp"

namespace gcluster {
namespace {

using cplx = std::complex<double>;
using graph::AdjacencyMatrix;
using graph::PhaseVector;
using synthesis::Gauge;
using synthesis::InteractionMatrix;
using synthesis::SqueezeScale;
using testing::Rng;
const cplx I(0.0, 1.0);
const ComplexMatrix kSwap{{0.0, 1.0}, {1.0, 0.0}};

TEST(Expm, AgreesWithTaylorOracle) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.index(1, 8);
    ComplexMatrix m = testing::random_complex(rng, n, n);
    const double target = rng.uniform(0.01, 20.0);
    m = m * (target / (m.max_abs() * static_cast<double>(n)));
    const ComplexMatrix e = oracle::expm(m);
    const ComplexMatrix ref = testing::taylor_expm(m);
    EXPECT_LE(e.max_abs_diff(ref), 1e-10 * std::max(1.0, ref.max_abs())) << "norm " << target;
  }
}

TEST(Expm, ScalarAndNilpotent) {
  EXPECT_NEAR(std::abs(oracle::expm(ComplexMatrix{{I * testing::kPi}})(0, 0) + 1.0), 0.0, 1e-14);
  const ComplexMatrix e = oracle::expm(ComplexMatrix{{0.0, 3.0}, {0.0, 0.0}});
  EXPECT_LE(e.max_abs_diff(ComplexMatrix{{1.0, 3.0}, {0.0, 1.0}}), 1e-14);
  EXPECT_LE(oracle::expm(ComplexMatrix(3, 3)).max_abs_diff(ComplexMatrix::identity(3)), 1e-15);
}

TEST(BogoliubovOracle, Examples) {
  const auto zi = InteractionMatrix::from_matrix(ComplexMatrix{{I}});
  const ComplexMatrix b = oracle::bogoliubov_matrix(zi.z(), 1.0);
  const ComplexMatrix expected{{std::cosh(1.0), std::sinh(1.0)}, {std::sinh(1.0), std::cosh(1.0)}};
  EXPECT_LE(b.max_abs_diff(expected), 1e-13);
  const auto pair = oracle::bogoliubov_oracle(zi, SqueezeScale(1.0));
  EXPECT_NEAR(pair.x(0, 0).real(), 1.543081, 5e-7);
  EXPECT_NEAR(pair.y(0, 0).real(), 1.175201, 5e-7);

  Rng rng(62);
  const ComplexMatrix z = testing::random_complex_symmetric(rng, 3);
  EXPECT_LE(oracle::bogoliubov_matrix(z, 0.0).max_abs_diff(ComplexMatrix::identity(6)), 1e-15);

  const auto e = oracle::bogoliubov_oracle(InteractionMatrix::from_matrix(-kSwap), SqueezeScale(2.0));
  EXPECT_LE(e.x.max_abs_diff(ComplexMatrix::identity(2) * std::cosh(2.0)), 1e-12);
  EXPECT_LE(e.y.max_abs_diff(kSwap * (I * std::sinh(2.0))), 1e-12);
}

TEST(BogoliubovOracle, MatchesClosedFormAndConditions) {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.index(1, 6);
    const auto zm = InteractionMatrix::from_matrix(testing::random_complex_symmetric(rng, n));
    const SqueezeScale z(rng.uniform(0.1, 3.0) / zm.strengths().back());
    const auto o = oracle::bogoliubov_oracle(zm, z);
    const auto c = synthesis::bogoliubov_from_interaction(zm, z);
    const double scale = std::max(1.0, c.x.max_abs());
    EXPECT_LE(o.x.max_abs_diff(c.x), 1e-10 * scale);
    EXPECT_LE(o.y.max_abs_diff(c.y), 1e-10 * scale);
    EXPECT_LE(o.normalization_residual(), 1e-9 * scale * scale);
    EXPECT_LE(o.symplectic_residual(), 1e-9 * scale * scale);
    EXPECT_LE(oracle::conjugation_residual(oracle::bogoliubov_matrix(zm.z(), z.value())),
              1e-10 * scale);
  }
}

TEST(BogoliubovOracle, OneParameterGroup) {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 6);
    const ComplexMatrix z = testing::random_complex_symmetric(rng, n);
    const double z1 = rng.uniform(0.0, 0.8), z2 = rng.uniform(0.0, 0.8);
    const ComplexMatrix b12 = oracle::bogoliubov_matrix(z, z1 + z2);
    const ComplexMatrix prod = oracle::bogoliubov_matrix(z, z1) * oracle::bogoliubov_matrix(z, z2);
    EXPECT_LE(b12.max_abs_diff(prod), 1e-10 * std::max(1.0, b12.max_abs()));
  }
}

TEST(BogoliubovOracle, SqueezingCap) {
  try {
    oracle::bogoliubov_matrix(ComplexMatrix{{2.0 * I}}, 15.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SqueezingOutOfRange);
  }
  EXPECT_NO_THROW(oracle::bogoliubov_matrix(ComplexMatrix{{2.0 * I}}, 15.0));
  EXPECT_THROW(oracle::bogoliubov_matrix(ComplexMatrix{{I}}, -1.0), Error);
}

TEST(CovarianceOracle, Examples) {
  const auto c0 = oracle::covariance_oracle(AdjacencyMatrix(1), PhaseVector::zero(1),
                                            InteractionMatrix::from_matrix(ComplexMatrix{{I}}),
                                            SqueezeScale(1.0));
  EXPECT_NEAR(c0.c(0, 0).real(), std::exp(-2.0), 1e-13);
  EXPECT_NEAR(c0.c(0, 0).real(), 0.135335, 5e-7);

  const auto c1 = oracle::covariance_oracle(AdjacencyMatrix(kSwap), PhaseVector::zero(2),
                                            InteractionMatrix::from_matrix(-kSwap), SqueezeScale(1.0));
  EXPECT_LE(c1.c.max_abs_diff(ComplexMatrix::identity(2) * (2.0 * std::exp(-2.0))), 1e-13);

  // Mismatched pair: Z belongs to the two-node graph, A is empty.
  const auto zm = InteractionMatrix::from_matrix(-kSwap);
  const auto m1 = oracle::covariance_oracle(AdjacencyMatrix(2), PhaseVector::zero(2), zm, SqueezeScale(1.0));
  const auto m2 = oracle::covariance_oracle(AdjacencyMatrix(2), PhaseVector::zero(2), zm, SqueezeScale(2.0));
  EXPECT_GT(m2.max_abs, m1.max_abs);
}

TEST(CovarianceOracle, AgreesWithClosedFormBothGauges) {
  Rng rng(65);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const AdjacencyMatrix a = testing::random_adjacency(rng, n);
    const PhaseVector t = testing::random_phases(rng, n);
    const SqueezeScale z(std::vector<double>{0.5, 1.0, 2.0}[trial % 3]);
    for (const Gauge& g : {Gauge::identity(), Gauge::faithful()}) {
      const ComplexMatrix p = synthesis::resolve_gauge(g, a, t, z);
      const auto zm = synthesis::interaction_from_cluster(a, t, p);
      const auto closed = synthesis::covariance_closed_form(a, t, p, z);
      const auto brute = oracle::covariance_oracle(a, t, zm, z);
      EXPECT_LE(closed.c.max_abs_diff(brute.c), 1e-8);
      EXPECT_LE(brute.imag_residual, 1e-9 * std::max(1.0, brute.max_abs));
    }
  }
}

TEST(CovarianceOracle, ImaginaryPartAppearsWhenGaugeConditionFails) {
  Rng rng(66);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = rng.index(2, 5);
    const AdjacencyMatrix a = testing::random_adjacency(rng, n);
    const PhaseVector t = testing::random_phases(rng, n);
    const ComplexMatrix p = testing::random_hermitian_pd(rng, n);
    ASSERT_FALSE(synthesis::validate_gauge(a, t, p).compatible);
    // P U is not symmetric here; push it through the generator anyway.
    const ComplexMatrix z = p * synthesis::unitary_from_adjacency(a, t);
    const double scale = 1.0 / matfun::singular_values(z).back();
    const auto c = oracle::covariance_from_bogoliubov(a, t, oracle::bogoliubov_matrix(z, scale));
    worst = std::max(worst, c.imag_residual);
  }
  EXPECT_GT(worst, 1e-6);
}

TEST(ConvergenceSweep, Examples) {
  const auto r = oracle::convergence_sweep(AdjacencyMatrix(kSwap), PhaseVector::zero(2),
                                           Gauge::identity(), {1.0, 2.0, 3.0});
  ASSERT_EQ(r.rows.size(), 3u);
  const double want[] = {0.270671, 0.036631, 0.004958};
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(r.rows[k].max_abs_c, 2.0 * std::exp(-2.0 * (k + 1)), 1e-14);
    EXPECT_NEAR(r.rows[k].max_abs_c, want[k], 5e-7);
  }
  EXPECT_TRUE(r.decreasing);
  EXPECT_LE(r.oracle_gap_first, 1e-8);
  EXPECT_LE(r.oracle_gap_last, 1e-8);

  Rng rng(67);
  const AdjacencyMatrix a = testing::random_adjacency(rng, 4);
  const auto f = oracle::convergence_sweep(a, testing::random_phases(rng, 4), Gauge::faithful(),
                                           {1.0, 2.0});
  EXPECT_NEAR(f.rows[0].max_abs_c, 0.135335, 5e-7);
  EXPECT_NEAR(f.rows[1].max_abs_c, 0.018316, 5e-7);

  const auto single = oracle::convergence_sweep(AdjacencyMatrix(kSwap), PhaseVector::zero(2),
                                                Gauge::identity(), {0.5});
  EXPECT_EQ(single.rows.size(), 1u);
  EXPECT_TRUE(single.decreasing);
}

TEST(ConvergenceSweep, RejectsBadZLists) {
  const AdjacencyMatrix a(kSwap);
  EXPECT_THROW(oracle::convergence_sweep(a, PhaseVector::zero(2), Gauge::identity(), {}), Error);
  EXPECT_THROW(oracle::convergence_sweep(a, PhaseVector::zero(2), Gauge::identity(), {2.0, 1.0}),
               Error);
  EXPECT_THROW(oracle::convergence_sweep(a, PhaseVector::zero(2), Gauge::identity(), {0.0, 1.0}),
               Error);
}

TEST(CovarianceOracle, NecessityForMismatchedUnitaries) {
  Rng rng(68);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = rng.index(2, 5);
    const AdjacencyMatrix a = testing::random_adjacency(rng, n);
    const PhaseVector t = testing::random_phases(rng, n);
    const auto zm = InteractionMatrix::from_matrix(testing::random_symmetric_unitary(rng, n));
    ASSERT_GT(zm.u().max_abs_diff(synthesis::unitary_from_adjacency(a, t)), 1e-3);
    const auto c3 = oracle::covariance_oracle(a, t, zm, SqueezeScale(3.0));
    const auto c4 = oracle::covariance_oracle(a, t, zm, SqueezeScale(4.0));
    EXPECT_GE(c4.max_abs, c3.max_abs);
  }
}

}  // namespace
}  // namespace gcluster
