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

#include <algorithm>
#include <numeric>
#include <string>

#include "thintree/errors.hpp"

namespace thintree {

EdgeId Multigraph::AddEdge(VertexId u, VertexId v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge endpoint out of range: " + std::to_string(u) + " " +
                    std::to_string(v));
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "self-loop at vertex " + std::to_string(u));
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, u, v});
  return id;
}

std::size_t Multigraph::MaxDegree() const {
  std::vector<std::size_t> degree(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

SignedWeights::SignedWeights(std::vector<int> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 1 && values_[i] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight of edge " + std::to_string(i) + " is " +
                      std::to_string(values_[i]) + ", expected -1 or 1");
    }
  }
}

SignedWeights SignedWeights::Uniform(std::size_t edge_count, int value) {
  return SignedWeights(std::vector<int>(edge_count, value));
}

void CheckCut(const Multigraph& g, const Cut& c) {
  if (c.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidCut,
                "cut over " + std::to_string(c.vertex_count()) +
                    " vertices used with a graph of " +
                    std::to_string(g.vertex_count()));
  }
}

void CheckWeights(const Multigraph& g, const SignedWeights& w) {
  if (w.size() != g.edge_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight vector has " + std::to_string(w.size()) +
                    " entries for " + std::to_string(g.edge_count()) +
                    " edges");
  }
}

std::vector<EdgeId> Delta(const Multigraph& g, const Cut& c) {
  CheckCut(g, c);
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (c.Contains(e.u) != c.Contains(e.v)) out.push_back(e.id);
  }
  return out;
}

std::size_t DeltaSize(const Multigraph& g, const Cut& c) {
  CheckCut(g, c);
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += c.Contains(e.u) != c.Contains(e.v);
  return count;
}

bool IsConnected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : g.edges()) {
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Contraction Contract(const Multigraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "contract: vertex out of range");
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "contract: cannot merge a vertex with itself");
  }
  const VertexId keep = std::min(u, v);
  const VertexId gone = std::max(u, v);

  Contraction out;
  out.vertex_map.resize(g.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    out.vertex_map[x] = x < gone ? x : (x == gone ? keep : x - 1);
  }
  out.graph = Multigraph(g.vertex_count() - 1);
  out.graph.ReserveEdges(g.edge_count());
  out.edge_map.resize(g.edge_count());
  for (const Edge& e : g.edges()) {
    const VertexId a = out.vertex_map[e.u];
    const VertexId b = out.vertex_map[e.v];
    if (a == b) continue;
    out.edge_map[e.id] = out.graph.AddEdge(a, b);
  }
  return out;
}

std::optional<Cut> SymmetricDifference(const Multigraph& g, const Cut& a,
                                       const Cut& b) {
  CheckCut(g, a);
  CheckCut(g, b);
  std::vector<std::uint64_t> words = a.words();
  for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= b.words()[i];
  return Cut::TryFromBits(g.vertex_count(), std::move(words));
}

std::int64_t CutWeightSum(const Multigraph& g, const SignedWeights& w,
                          const Cut& c) {
  CheckCut(g, c);
  CheckWeights(g, w);
  std::int64_t sum = 0;
  for (const Edge& e : g.edges()) {
    if (c.Contains(e.u) != c.Contains(e.v)) sum += w[e.id];
  }
  return sum;
}

Rational AverageCutWeight(const Multigraph& g, const SignedWeights& w,
                          const Cut& c) {
  CheckCut(g, c);
  CheckWeights(g, w);
  std::int64_t sum = 0;
  std::int64_t size = 0;
  for (const Edge& e : g.edges()) {
    if (c.Contains(e.u) != c.Contains(e.v)) {
      sum += w[e.id];
      ++size;
    }
  }
  if (size == 0) {
    throw Error(ErrorCode::kInvalidInstance,
                "cut " + c.ToString() + " has no crossing edges");
  }
  return Rational(sum, size);
}

}  // namespace thintree
