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

#include <algorithm>
#include <numeric>

#include "cut_walk.hpp"
#include "thintree/errors.hpp"

namespace thintree {

namespace {

void CheckTreeHost(const Multigraph& g, const SpanningTree& t) {
  if (t.host_vertex_count() != g.vertex_count() ||
      t.host_edge_count() != g.edge_count()) {
    throw Error(ErrorCode::kInvalidTree,
                "spanning tree was built for a different graph");
  }
}

// a/b > c/d for non-negative counts with b, d > 0.
bool RatioGreater(std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d) {
  return static_cast<__int128>(a) * d > static_cast<__int128>(c) * b;
}

}  // namespace

SpanningTree::SpanningTree(const Multigraph& host, std::vector<EdgeId> edge_ids)
    : ids_(std::move(edge_ids)),
      member_(host.edge_count(), false),
      host_vertices_(host.vertex_count()) {
  const std::size_t n = host.vertex_count();
  if (n == 0) throw Error(ErrorCode::kInvalidTree, "empty host graph");
  if (ids_.size() != n - 1) {
    throw Error(ErrorCode::kInvalidTree,
                "spanning tree needs " + std::to_string(n - 1) +
                    " edges, got " + std::to_string(ids_.size()));
  }
  std::sort(ids_.begin(), ids_.end());
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId id : ids_) {
    if (id >= host.edge_count()) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge id " + std::to_string(id) + " out of range");
    }
    if (member_[id]) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge id " + std::to_string(id) + " listed twice");
    }
    member_[id] = true;
    const Edge& e = host.edge(id);
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a == b) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge " + std::to_string(id) + " closes a cycle");
    }
    parent[a] = b;
  }
  // n-1 acyclic edges on n vertices always span.
}

Rational Thickness(const Multigraph& g, const SpanningTree& t, const Cut& c) {
  CheckTreeHost(g, t);
  CheckCut(g, c);
  std::int64_t in_tree = 0;
  std::int64_t crossing = 0;
  for (const Edge& e : g.edges()) {
    if (c.Contains(e.u) != c.Contains(e.v)) {
      ++crossing;
      in_tree += t.Contains(e.id);
    }
  }
  if (crossing == 0) {
    throw Error(ErrorCode::kInvalidInstance,
                "cut " + c.ToString() + " has no crossing edges");
  }
  return Rational(in_tree, crossing);
}

ThinnessVerdict ThinTreeVerifyBruteForce(const Multigraph& g,
                                         const SpanningTree& t,
                                         const Rational& alpha,
                                         std::size_t vertex_limit) {
  CheckTreeHost(g, t);
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw Error(ErrorCode::kDomain,
                "alpha " + alpha.ToString() + " is outside [0, 1]");
  }
  ThinnessVerdict verdict;
  if (g.vertex_count() < 2) return verdict;
  internal::CheckEnumerable(g, vertex_limit, "thin tree verification");

  std::int64_t in_tree = 0;
  std::int64_t crossing = 0;
  std::int64_t best_tree = -1;
  std::int64_t best_cross = 1;
  std::uint64_t best_mask = 0;
  internal::WalkCutsGray(
      g,
      [&](EdgeId e, bool now_crossing) {
        const int d = now_crossing ? 1 : -1;
        crossing += d;
        if (t.Contains(e)) in_tree += d;
      },
      [&](std::uint64_t mask) {
        if (best_tree < 0 || RatioGreater(in_tree, crossing, best_tree,
                                          best_cross) ||
            (!RatioGreater(best_tree, best_cross, in_tree, crossing) &&
             mask < best_mask)) {
          best_tree = in_tree;
          best_cross = crossing;
          best_mask = mask;
        }
      });
  verdict.worst_thickness = Rational(best_tree, best_cross);
  verdict.is_thin = verdict.worst_thickness <= alpha;
  if (!verdict.is_thin) {
    verdict.worst_cut = Cut::FromMask(g.vertex_count(), best_mask);
  }
  return verdict;
}

MaxCutResult MaxCutBruteForce(const Multigraph& g, std::size_t vertex_limit) {
  internal::CheckEnumerable(g, vertex_limit, "max cut");
  std::int64_t crossing = 0;
  std::int64_t best = -1;
  std::uint64_t best_mask = 0;
  internal::WalkCutsGray(
      g, [&](EdgeId, bool now_crossing) { crossing += now_crossing ? 1 : -1; },
      [&](std::uint64_t mask) {
        if (crossing > best || (crossing == best && mask < best_mask)) {
          best = crossing;
          best_mask = mask;
        }
      });
  return {best, Cut::FromMask(g.vertex_count(), best_mask)};
}

MaxAvgCutResult MaxAvgCutOptBruteForce(const Multigraph& g,
                                       const SignedWeights& w,
                                       std::size_t vertex_limit) {
  CheckWeights(g, w);
  internal::CheckEnumerable(g, vertex_limit, "max average cut");
  std::int64_t sum = 0;
  std::int64_t crossing = 0;
  std::int64_t best_sum = 0;
  std::int64_t best_cross = 0;
  std::uint64_t best_mask = 0;
  // sum/crossing compared by cross-multiplication; crossing > 0 on a
  // connected graph.
  internal::WalkCutsGray(
      g,
      [&](EdgeId e, bool now_crossing) {
        const int d = now_crossing ? 1 : -1;
        crossing += d;
        sum += d * w[e];
      },
      [&](std::uint64_t mask) {
        const __int128 lhs = static_cast<__int128>(sum) * best_cross;
        const __int128 rhs = static_cast<__int128>(best_sum) * crossing;
        if (best_cross == 0 || lhs > rhs || (lhs == rhs && mask < best_mask)) {
          best_sum = sum;
          best_cross = crossing;
          best_mask = mask;
        }
      });
  return {Rational(best_sum, best_cross),
          Cut::FromMask(g.vertex_count(), best_mask)};
}

bool MaxAvgCutDecisionBruteForce(const Multigraph& g, const SignedWeights& w,
                                 const Rational& k, std::size_t vertex_limit) {
  if (k < Rational(-1)) {
    throw Error(ErrorCode::kDomain,
                "threshold " + k.ToString() + " is below -1");
  }
  CheckWeights(g, w);
  internal::CheckEnumerable(g, vertex_limit, "max average cut decision");
  std::int64_t sum = 0;
  std::int64_t crossing = 0;
  bool found = false;
  internal::WalkCutsGray(
      g,
      [&](EdgeId e, bool now_crossing) {
        const int d = now_crossing ? 1 : -1;
        crossing += d;
        sum += d * w[e];
      },
      [&](std::uint64_t) {
        // sum/crossing >= k.num/k.den
        if (!found && static_cast<__int128>(sum) * k.den() >=
                          static_cast<__int128>(k.num()) * crossing) {
          found = true;
        }
      });
  return found;
}

}  // namespace thintree
