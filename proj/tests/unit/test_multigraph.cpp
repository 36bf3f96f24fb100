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

#include "thintree/multigraph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <set>

#include "test_support.hpp"
#include "thintree/errors.hpp"
#include "thintree/harness.hpp"

namespace thintree {
namespace {

using testing::AllNontrivialSides;
using testing::C;
using testing::Complete;
using testing::CutOf;
using testing::Cycle;
using testing::MakeGraph;
using testing::Path;
using testing::ReferenceDelta;

std::vector<EdgeId> Ids(std::initializer_list<EdgeId> ids) { return ids; }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Small random connected multigraphs for exhaustive property checks.
std::vector<WeightedGraph> Corpus(std::uint64_t seed, std::size_t count,
                                  std::size_t max_n, bool parallel) {
  GeneratorConfig config;
  config.seed = seed;
  config.min_vertices = 2;
  config.max_vertices = max_n;
  config.extra_edge_probability = Rational(1, 2);
  config.allow_parallel = parallel;
  InstanceGenerator gen(config);
  std::vector<WeightedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.Next());
  return out;
}

TEST(CutTest, CanonicalFormExcludesVertexZero) {
  const Cut a = C(4, {0, 3});
  EXPECT_EQ(a.Vertices(), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(a, C(4, {1, 2}));
  EXPECT_EQ(a.Mask(), 0b0110u);
  EXPECT_EQ(a.ToString(), "{1,2}");
}

TEST(CutTest, TrivialSidesAreRejected) {
  EXPECT_EQ(CodeOf([] { C(3, {}); }), ErrorCode::kInvalidCut);
  EXPECT_EQ(CodeOf([] { C(3, {0, 1, 2}); }), ErrorCode::kInvalidCut);
  EXPECT_EQ(CodeOf([] { C(3, {3}); }), ErrorCode::kInvalidCut);
  EXPECT_FALSE(Cut::TryFromBits(3, {0b111}).has_value());
}

TEST(CutTest, CanonicalizationIsIdempotent) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& side : AllNontrivialSides(n)) {
      const Cut once = CutOf(side);
      const Cut twice = Cut::FromVertices(n, once.Vertices());
      EXPECT_EQ(once, twice);
      EXPECT_FALSE(once.Contains(0));
    }
  }
}

TEST(CutTest, WideCutsSpanSeveralWords) {
  std::vector<VertexId> side = {1, 63, 64, 129};
  const Cut c = Cut::FromVertices(130, side);
  EXPECT_EQ(c.Vertices(), side);
  EXPECT_EQ(c.size(), 4u);
  const Cut flipped = Cut::FromVertices(130, std::vector<VertexId>{0});
  EXPECT_EQ(flipped.size(), 129u);
  EXPECT_LT(c, flipped);
}

TEST(MultigraphTest, RejectsSelfLoopsAndBadEndpoints) {
  Multigraph g(2);
  EXPECT_EQ(CodeOf([&] { g.AddEdge(1, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { g.AddEdge(0, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(g.AddEdge(0, 1), 0u);
  EXPECT_EQ(g.AddEdge(1, 0), 1u);  // parallel edge, next dense id
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(SignedWeightsTest, OnlyPlusMinusOne) {
  EXPECT_EQ(CodeOf([] { SignedWeights({1, 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { SignedWeights({2}); }), ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(SignedWeights({1, -1, 1}));
}

TEST(DeltaTest, Examples) {
  const Multigraph p3 = Path(3);
  EXPECT_EQ(Delta(p3, C(3, {1})), Ids({0, 1}));
  EXPECT_EQ(Delta(Complete(3), C(3, {1})).size(), 2u);
  const Multigraph doubled = MakeGraph(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(Delta(doubled, C(2, {1})), Ids({0, 1}));
}

TEST(DeltaTest, MismatchedCutIsInvalid) {
  EXPECT_EQ(CodeOf([] { Delta(Path(3), C(4, {1})); }), ErrorCode::kInvalidCut);
}

TEST(DeltaTest, ComplementHasSameEdgesExhaustive) {
  for (const auto& inst : Corpus(3, 30, 6, true)) {
    const std::size_t n = inst.graph.vertex_count();
    for (auto side : AllNontrivialSides(n)) {
      const auto expect = ReferenceDelta(inst.graph, side);
      const auto got = Delta(inst.graph, CutOf(side));
      EXPECT_EQ(std::set<EdgeId>(got.begin(), got.end()), expect);
      side.flip();
      EXPECT_EQ(Delta(inst.graph, CutOf(side)), got);
      EXPECT_LE(got.size(), inst.graph.edge_count());
    }
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(IsConnected(Complete(3)));
  EXPECT_FALSE(IsConnected(Multigraph(2)));
  EXPECT_TRUE(IsConnected(Path(3)));
  EXPECT_TRUE(IsConnected(Multigraph(0)));
  EXPECT_TRUE(IsConnected(Multigraph(1)));
  EXPECT_FALSE(IsConnected(MakeGraph(4, {{0, 1}, {2, 3}})));
}

TEST(ContractTest, Examples) {
  const Contraction tri = Contract(Complete(3), 0, 1);  // e01 e02 e12
  EXPECT_EQ(tri.graph.vertex_count(), 2u);
  EXPECT_EQ(tri.graph.edge_count(), 2u);
  EXPECT_FALSE(tri.edge_map[0].has_value());
  EXPECT_TRUE(tri.edge_map[1].has_value());
  EXPECT_TRUE(tri.edge_map[2].has_value());

  const Contraction path = Contract(Path(3), 0, 2);
  EXPECT_EQ(path.graph.vertex_count(), 2u);
  EXPECT_EQ(path.graph.edge_count(), 2u);
  EXPECT_EQ(path.graph.edge(0).u, path.graph.edge(1).v);

  const Contraction dbl = Contract(MakeGraph(2, {{0, 1}, {0, 1}}), 1, 0);
  EXPECT_EQ(dbl.graph.vertex_count(), 1u);
  EXPECT_EQ(dbl.graph.edge_count(), 0u);
}

TEST(ContractTest, SameVertexIsInvalidArgument) {
  EXPECT_EQ(CodeOf([] { Contract(Path(3), 1, 1); }),
            ErrorCode::kInvalidArgument);
}

// Cuts of contract(g, u, v) correspond one-to-one with cuts of g keeping u
// and v together, with the same crossing edges under edge_map.
TEST(ContractTest, ContractionLawExhaustive) {
  for (const auto& inst : Corpus(5, 20, 6, true)) {
    const Multigraph& g = inst.graph;
    const std::size_t n = g.vertex_count();
    if (n < 3) continue;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        const Contraction ct = Contract(g, u, v);
        std::set<std::vector<VertexId>> lifted;
        for (const auto& small_side : AllNontrivialSides(n - 1)) {
          std::vector<bool> side(n);
          for (VertexId x = 0; x < n; ++x) side[x] = small_side[ct.vertex_map[x]];
          const Cut big = CutOf(side);
          lifted.insert(big.Vertices());
          std::set<EdgeId> mapped;
          for (EdgeId e : Delta(g, big)) {
            ASSERT_TRUE(ct.edge_map[e].has_value());
            mapped.insert(*ct.edge_map[e]);
          }
          EXPECT_EQ(mapped, ReferenceDelta(ct.graph, small_side));
        }
        std::size_t together = 0;
        for (const auto& side : AllNontrivialSides(n)) {
          if (side[u] == side[v] && !side[0]) ++together;
        }
        EXPECT_EQ(lifted.size(), together);
      }
    }
  }
}

TEST(SymmetricDifferenceTest, Examples) {
  const Multigraph c4 = Cycle(4);  // e01 e12 e23 e30
  EXPECT_FALSE(SymmetricDifference(c4, C(4, {1}), C(4, {1})).has_value());
  const auto x = SymmetricDifference(c4, C(4, {1}), C(4, {2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, C(4, {1, 2}));
  EXPECT_EQ(Delta(c4, *x), Ids({0, 2}));
  const auto y = SymmetricDifference(c4, C(4, {1}), C(4, {0, 3}));
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(*y, C(4, {2}));
}

TEST(SymmetricDifferenceTest, DeltaOfXorIsXorOfDeltasExhaustive) {
  for (const auto& inst : Corpus(7, 15, 6, true)) {
    const Multigraph& g = inst.graph;
    const auto sides = AllNontrivialSides(g.vertex_count());
    for (const auto& sa : sides) {
      if (sa[0]) continue;
      const Cut a = CutOf(sa);
      const auto da = ReferenceDelta(g, sa);
      for (const auto& sb : sides) {
        if (sb[0]) continue;
        const auto db = ReferenceDelta(g, sb);
        std::set<EdgeId> expect;
        std::set_symmetric_difference(da.begin(), da.end(), db.begin(),
                                      db.end(),
                                      std::inserter(expect, expect.end()));
        const auto x = SymmetricDifference(g, a, CutOf(sb));
        if (!x) {
          EXPECT_EQ(sa, sb);
          EXPECT_TRUE(expect.empty());
          continue;
        }
        const auto got = Delta(g, *x);
        EXPECT_EQ(std::set<EdgeId>(got.begin(), got.end()), expect);
      }
    }
  }
}

TEST(CutWeightTest, Examples) {
  const Multigraph tri = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  const SignedWeights plus = SignedWeights::Uniform(3, 1);
  const SignedWeights mixed({1, 1, -1});
  EXPECT_EQ(CutWeightSum(tri, plus, C(3, {1})), 2);
  EXPECT_EQ(CutWeightSum(tri, mixed, C(3, {0})), 0);
  EXPECT_EQ(CutWeightSum(tri, mixed, C(3, {1})), 2);

  EXPECT_EQ(AverageCutWeight(tri, plus, C(3, {2})), Rational(1));
  EXPECT_EQ(AverageCutWeight(tri, mixed, C(3, {0})), Rational(0));
  EXPECT_EQ(AverageCutWeight(tri, SignedWeights::Uniform(3, -1), C(3, {1, 2})),
            Rational(-1));
}

TEST(CutWeightTest, EmptyCutIsInvalidInstance) {
  const Multigraph g = MakeGraph(3, {{0, 1}});
  EXPECT_EQ(CodeOf([&] {
              AverageCutWeight(g, SignedWeights::Uniform(1, 1), C(3, {2}));
            }),
            ErrorCode::kInvalidInstance);
}

TEST(CutWeightTest, WrongWeightLengthIsRejected) {
  EXPECT_EQ(CodeOf([] {
              CutWeightSum(Path(3), SignedWeights::Uniform(5, 1), C(3, {1}));
            }),
            ErrorCode::kInvalidArgument);
}

TEST(CutWeightTest, AverageStaysInUnitIntervalExhaustive) {
  for (const auto& inst : Corpus(9, 30, 6, true)) {
    for (const auto& side : AllNontrivialSides(inst.graph.vertex_count())) {
      const Rational avg = AverageCutWeight(inst.graph, inst.weights, CutOf(side));
      EXPECT_GE(avg, Rational(-1));
      EXPECT_LE(avg, Rational(1));
    }
  }
}

}  // namespace
}  // namespace thintree
