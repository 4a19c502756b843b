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
#include "gcluster/graph.hpp"
#include "random_instances.hpp"

namespace gcluster {
namespace {

using cplx = std::complex<double>;
using graph::AdjacencyMatrix;
using graph::PhaseVector;
const cplx I(0.0, 1.0);

ErrorCode parse_error_code(std::string_view text) {
  try {
    graph::parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return ErrorCode::InvalidArgument;
}

TEST(ParseGraph, Examples) {
  const AdjacencyMatrix one = graph::parse_graph("1\n");
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.matrix().max_abs(), 0.0);

  const AdjacencyMatrix epr = graph::parse_graph("2\n0 1 1.0\n");
  EXPECT_EQ(epr.matrix().max_abs_diff(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), 0.0);

  const AdjacencyMatrix tri = graph::parse_graph("3\n0 1 1\n1 2 1\n0 2 -0.5\n");
  EXPECT_EQ(tri.weight(0, 2), -0.5);
  EXPECT_EQ(tri.weight(2, 0), -0.5);
  EXPECT_EQ(tri.weight(1, 2), 1.0);
  EXPECT_EQ(tri.weight(0, 0), 0.0);
}

TEST(ParseGraph, CommentsBlankLinesAndSelfLoops) {
  const AdjacencyMatrix a = graph::parse_graph("# a loop\n\n2\n  1 1 -1   # self-loop\n");
  EXPECT_EQ(a.weight(1, 1), -1.0);
  EXPECT_EQ(a.weight(0, 1), 0.0);
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(parse_error_code(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("two\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("2\n0 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("2\n0 1 x\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("2\n0 1 1 7\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("2\n0 2 1\n"), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_error_code("2\n-1 0 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("2\n0 1 1\n1 0 2\n"), ErrorCode::DuplicateEdge);
  EXPECT_EQ(parse_error_code("2\n0 1 inf\n"), ErrorCode::ParseError);
}

TEST(ParseGraph, ErrorMessageNamesLine) {
  try {
    graph::parse_graph("2\n0 1 1\n0 1 zzz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseGraph, SerializeRoundTrip) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const AdjacencyMatrix a = testing::random_adjacency(rng, rng.index(1, 8));
    const AdjacencyMatrix b = graph::parse_graph(graph::serialize_graph(a));
    EXPECT_LE(b.matrix().max_abs_diff(a.matrix()), 1e-15);
  }
}

TEST(AdjacencyMatrix, ValidationAndSymmetrization) {
  const ComplexMatrix nearly{{0.0, 1.0}, {1.0 + 1e-14, 0.0}};
  const AdjacencyMatrix a(nearly);
  EXPECT_EQ(a.matrix().symmetry_residual(), 0.0);
  EXPECT_THROW(AdjacencyMatrix(ComplexMatrix{{0.0, 1.0}, {2.0, 0.0}}), Error);
  EXPECT_THROW(AdjacencyMatrix(ComplexMatrix{{I}}), Error);
  EXPECT_THROW(AdjacencyMatrix(ComplexMatrix(2, 3)), Error);
  AdjacencyMatrix b(3);
  b.set_weight(2, 0, 0.25);
  EXPECT_EQ(b.weight(0, 2), 0.25);
}

TEST(PhaseVector, ReducesToPrincipalRange) {
  const PhaseVector t({-testing::kPi, 3.0 * testing::kPi / 2.0, 0.5});
  EXPECT_DOUBLE_EQ(t[0], testing::kPi);
  EXPECT_NEAR(t[1], -testing::kPi / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(t[2], 0.5);
  const auto f = t.phase_factors(-1.0);
  EXPECT_NEAR(std::abs(f[1] - I), 0.0, 1e-15);
}

TEST(NullifierMap, Examples) {
  const auto q1 = graph::nullifier_map(AdjacencyMatrix(1), PhaseVector::zero(1));
  EXPECT_EQ(q1.q().rows(), 1u);
  EXPECT_EQ(q1.q().cols(), 2u);
  EXPECT_LE(q1.q().max_abs_diff(ComplexMatrix{{-I, I}}), 1e-15);

  const AdjacencyMatrix epr = graph::parse_graph("2\n0 1 1\n");
  const auto q2 = graph::nullifier_map(epr, PhaseVector::zero(2));
  EXPECT_LE(q2.left_block().max_abs_diff(-ComplexMatrix{{I, 1.0}, {1.0, I}}), 1e-15);
  EXPECT_LE(q2.right_block().max_abs_diff(-ComplexMatrix{{-I, 1.0}, {1.0, -I}}), 1e-15);

  const auto q3 = graph::nullifier_map(AdjacencyMatrix(1), PhaseVector({testing::kPi / 2.0}));
  EXPECT_LE(q3.q().max_abs_diff(ComplexMatrix{{1.0, 1.0}}), 1e-15);
}

TEST(NullifierMap, RightBlockIsConjugateOfLeft) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const AdjacencyMatrix a = testing::random_adjacency(rng, n);
    const PhaseVector t = testing::random_phases(rng, n);
    const auto q = graph::nullifier_map(a, t);
    EXPECT_LE(q.right_block().max_abs_diff(q.left_block().conj()), 1e-15);
    // blocks are reconstructable from (A, Theta)
    ComplexMatrix expected = -add_identity(a.matrix(), I);
    expected = expected.scale_cols(t.phase_factors(1.0));
    EXPECT_LE(q.left_block().max_abs_diff(expected), 1e-12);
  }
}

TEST(NullifierMap, DimensionMismatch) {
  EXPECT_THROW(graph::nullifier_map(AdjacencyMatrix(2), PhaseVector::zero(3)), Error);
}

}  // namespace
}  // namespace gcluster
