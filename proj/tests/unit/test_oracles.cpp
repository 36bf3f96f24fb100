// Copyright 2026 The thintree Authors
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

#include "thintree/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_support.hpp"
#include "thintree/errors.hpp"
#include "thintree/graph_io.hpp"
#include "thintree/harness.hpp"
#include "thintree/reductions.hpp"

namespace thintree {
namespace {

using testing::AllNontrivialSides;
using testing::C;
using testing::Complete;
using testing::CutOf;
using testing::Cycle;
using testing::MakeGraph;
using testing::Path;
using testing::ReferenceMaxAvg;
using testing::ReferenceMaxCut;
using testing::ReferenceThickness;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Kruskal over a shuffled edge order.
SpanningTree RandomTree(const Multigraph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<EdgeId> chosen;
  for (EdgeId e : order) {
    const VertexId a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) continue;
    parent[a] = b;
    chosen.push_back(e);
  }
  return SpanningTree(g, chosen);
}

std::vector<WeightedGraph> Corpus(std::uint64_t seed, std::size_t count,
                                  std::size_t max_n, bool parallel) {
  GeneratorConfig config;
  config.seed = seed;
  config.max_vertices = max_n;
  config.extra_edge_probability = Rational(1, 2);
  config.allow_parallel = parallel;
  InstanceGenerator gen(config);
  std::vector<WeightedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.Next());
  return out;
}

class C4Fixture : public ::testing::Test {
 protected:
  const Multigraph c4 = Cycle(4);  // e01 e12 e23 e30
  const SpanningTree path{c4, {0, 1, 2}};
};

TEST_F(C4Fixture, ThicknessExamples) {
  // delta({v1}) = {e01, e12}, both on the path.
  EXPECT_EQ(Thickness(c4, path, C(4, {1})), Rational(1));
  EXPECT_EQ(Thickness(c4, path, C(4, {3})), Rational(1, 2));
  EXPECT_EQ(Thickness(c4, path, C(4, {1, 2})), Rational(1));
  EXPECT_EQ(Thickness(c4, path, C(4, {0, 3})), Rational(1));
}

TEST(ThicknessTest, SingleEdge) {
  const Multigraph k2 = Path(2);
  EXPECT_EQ(Thickness(k2, SpanningTree(k2, {0}), C(2, {1})), Rational(1));
}

TEST(SpanningTreeTest, RejectsNonTrees) {
  const Multigraph c4 = Cycle(4);
  EXPECT_EQ(CodeOf([&] { SpanningTree(c4, {0, 1}); }), ErrorCode::kInvalidTree);
  EXPECT_EQ(CodeOf([&] { SpanningTree(c4, {0, 1, 1}); }),
            ErrorCode::kInvalidTree);
  EXPECT_EQ(CodeOf([&] { SpanningTree(c4, {0, 1, 9}); }),
            ErrorCode::kInvalidTree);
  const Multigraph dbl = MakeGraph(3, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(CodeOf([&] { SpanningTree(dbl, {0, 1}); }), ErrorCode::kInvalidTree);
  EXPECT_NO_THROW(SpanningTree(dbl, {1, 2}));
}

TEST_F(C4Fixture, VerifyAtAlphaOneIsThin) {
  const ThinnessVerdict v = ThinTreeVerifyBruteForce(c4, path, Rational(1));
  EXPECT_TRUE(v.is_thin);
  EXPECT_FALSE(v.worst_cut.has_value());
  EXPECT_EQ(v.worst_thickness, Rational(1));
}

TEST_F(C4Fixture, VerifyAtHalfReportsSmallestWorstCut) {
  const ThinnessVerdict v = ThinTreeVerifyBruteForce(c4, path, Rational(1, 2));
  EXPECT_FALSE(v.is_thin);
  EXPECT_EQ(v.worst_thickness, Rational(1));
  ASSERT_TRUE(v.worst_cut.has_value());
  // {v1}, {v2} and {v1,v2} all reach thickness 1; the smallest mask wins.
  EXPECT_EQ(*v.worst_cut, C(4, {1}));
  EXPECT_EQ(Thickness(c4, path, C(4, {1, 2})), v.worst_thickness);
}

TEST(VerifyTest, SingleEdgeAtHalfIsNotThin) {
  const Multigraph k2 = Path(2);
  const ThinnessVerdict v =
      ThinTreeVerifyBruteForce(k2, SpanningTree(k2, {0}), Rational(1, 2));
  EXPECT_FALSE(v.is_thin);
  EXPECT_EQ(v.worst_thickness, Rational(1));
}

TEST(VerifyTest, GuardAndDomain) {
  const Multigraph big = Path(30);
  std::vector<EdgeId> ids(29);
  std::iota(ids.begin(), ids.end(), 0);
  const SpanningTree t(big, ids);
  try {
    ThinTreeVerifyBruteForce(big, t, Rational(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
    EXPECT_NE(std::string(e.what()).find("clique-respecting"),
              std::string::npos);
  }
  const Multigraph k2 = Path(2);
  const SpanningTree t2(k2, {0});
  EXPECT_EQ(CodeOf([&] { ThinTreeVerifyBruteForce(k2, t2, Rational(3, 2)); }),
            ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([&] { ThinTreeVerifyBruteForce(k2, t2, Rational(-1, 2)); }),
            ErrorCode::kDomain);
  // Limits above the mask width are clamped, not rejected.
  EXPECT_TRUE(ThinTreeVerifyBruteForce(k2, t2, Rational(1), 1000).is_thin);
}

TEST(VerifyTest, PropertiesOverCorpus) {
  std::mt19937_64 rng(5);
  for (const auto& inst : Corpus(13, 40, 7, true)) {
    const Multigraph& g = inst.graph;
    const SpanningTree t = RandomTree(g, rng);
    const auto sides = AllNontrivialSides(g.vertex_count());
    Rational reference_worst(0);
    for (const auto& side : sides) {
      const Rational th = ReferenceThickness(g, t, side);
      EXPECT_EQ(Thickness(g, t, CutOf(side)), th);
      reference_worst = std::max(reference_worst, th);
    }
    EXPECT_TRUE(ThinTreeVerifyBruteForce(g, t, Rational(1)).is_thin);
    bool previous_thin = false;
    for (std::int64_t i = 0; i <= 20; ++i) {
      const Rational alpha(i, 20);
      const ThinnessVerdict v = ThinTreeVerifyBruteForce(g, t, alpha);
      EXPECT_EQ(v.worst_thickness, reference_worst);
      EXPECT_EQ(v.is_thin, reference_worst <= alpha);
      EXPECT_EQ(v.worst_cut.has_value(), !v.is_thin);
      if (v.worst_cut) {
        EXPECT_GT(ReferenceThickness(g, t, [&] {
                    std::vector<bool> s(g.vertex_count());
                    for (VertexId x : v.worst_cut->Vertices()) s[x] = true;
                    return s;
                  }()),
                  alpha);
      }
      // Once thin, thin at every larger alpha.
      if (previous_thin) {
        EXPECT_TRUE(v.is_thin);
      }
      previous_thin = v.is_thin;
      for (VertexId x = 1; x < g.vertex_count(); ++x) {
        EXPECT_GE(v.worst_thickness, Thickness(g, t, C(g.vertex_count(), {x})));
      }
    }
  }
}

TEST(MaxCutTest, Examples) {
  const MaxCutResult p3 = MaxCutBruteForce(Path(3));
  EXPECT_EQ(p3.value, 2);
  EXPECT_EQ(p3.cut, C(3, {1}));
  EXPECT_EQ(MaxCutBruteForce(Cycle(5)).value, 4);
  EXPECT_EQ(MaxCutBruteForce(Complete(4)).value, 4);
}

TEST(MaxCutTest, MatchesReferenceEnumeration) {
  for (const auto& inst : Corpus(17, 60, 9, true)) {
    const MaxCutResult r = MaxCutBruteForce(inst.graph);
    EXPECT_EQ(r.value, ReferenceMaxCut(inst.graph));
    EXPECT_EQ(static_cast<std::int64_t>(Delta(inst.graph, r.cut).size()),
              r.value);
  }
}

TEST(MaxCutTest, RejectsDisconnectedAndTinyGraphs) {
  EXPECT_EQ(CodeOf([] { MaxCutBruteForce(Multigraph(3)); }),
            ErrorCode::kInvalidInstance);
  EXPECT_EQ(CodeOf([] { MaxCutBruteForce(Multigraph(1)); }),
            ErrorCode::kInvalidInstance);
  EXPECT_EQ(CodeOf([] { MaxCutBruteForce(Path(27)); }),
            ErrorCode::kGuardExceeded);
  EXPECT_EQ(MaxCutBruteForce(Path(27), 27).value, 26);
}

TEST(MaxAvgCutTest, Examples) {
  const Multigraph tri = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  const MaxAvgCutResult plus =
      MaxAvgCutOptBruteForce(tri, SignedWeights::Uniform(3, 1));
  EXPECT_EQ(plus.value, Rational(1));
  EXPECT_EQ(plus.cut, C(3, {1}));
  EXPECT_EQ(MaxAvgCutOptBruteForce(tri, SignedWeights::Uniform(3, -1)).value,
            Rational(-1));
  const SignedWeights mixed({1, 1, -1});
  const MaxAvgCutResult r = MaxAvgCutOptBruteForce(tri, mixed);
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(r.cut, C(3, {1}));
}

TEST(MaxAvgCutTest, DecisionExamples) {
  const Multigraph tri = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(MaxAvgCutDecisionBruteForce(tri, SignedWeights::Uniform(3, 1),
                                          Rational(1)));
  EXPECT_TRUE(MaxAvgCutDecisionBruteForce(tri, SignedWeights::Uniform(3, -1),
                                          Rational(-1)));
  const SignedWeights mixed({1, 1, -1});
  EXPECT_TRUE(MaxAvgCutDecisionBruteForce(tri, mixed, Rational(1)));
  EXPECT_FALSE(MaxAvgCutDecisionBruteForce(tri, mixed, Rational(2)));
  EXPECT_EQ(CodeOf([&] {
              MaxAvgCutDecisionBruteForce(tri, mixed, Rational(-3, 2));
            }),
            ErrorCode::kDomain);
}

TEST(MaxAvgCutTest, OptMatchesReferenceAndDecisionMatchesOptOnGrid) {
  for (const auto& inst : Corpus(19, 60, 7, true)) {
    const MaxAvgCutResult r = MaxAvgCutOptBruteForce(inst.graph, inst.weights);
    EXPECT_EQ(r.value, ReferenceMaxAvg(inst.graph, inst.weights));
    EXPECT_EQ(AverageCutWeight(inst.graph, inst.weights, r.cut), r.value);
    for (const Rational& k : EnumerateCandidateAvgWeights(inst.graph)) {
      EXPECT_EQ(MaxAvgCutDecisionBruteForce(inst.graph, inst.weights, k),
                r.value >= k)
          << k.ToString();
    }
  }
}

}  // namespace
}  // namespace thintree
