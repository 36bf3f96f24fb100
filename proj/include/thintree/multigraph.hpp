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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thintree/cut.hpp"
#include "thintree/rational.hpp"

namespace thintree {

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with dense edge ids 0..m-1. Parallel edges are
// allowed, self-loops are not.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  // Appends an edge and returns its id. Throws Error(kInvalidArgument) on a
  // self-loop or an out-of-range endpoint.
  EdgeId AddEdge(VertexId u, VertexId v);
  void ReserveEdges(std::size_t m) { edges_.reserve(m); }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Largest number of edge endpoints at one vertex.
  std::size_t MaxDegree() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Edge weights restricted to {-1, +1}, indexed by edge id.
class SignedWeights {
 public:
  SignedWeights() = default;
  // Throws Error(kInvalidArgument) on any value other than -1 or +1.
  explicit SignedWeights(std::vector<int> values);
  static SignedWeights Uniform(std::size_t edge_count, int value);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](EdgeId e) const { return values_[e]; }
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const SignedWeights&, const SignedWeights&) = default;

 private:
  std::vector<int> values_;
};

// Edges with exactly one endpoint on the cut's stored side, in id order.
std::vector<EdgeId> Delta(const Multigraph& g, const Cut& c);
std::size_t DeltaSize(const Multigraph& g, const Cut& c);

bool IsConnected(const Multigraph& g);

struct Contraction {
  Multigraph graph;
  // old edge id -> new edge id; nullopt for edges joining the merged pair.
  std::vector<std::optional<EdgeId>> edge_map;
  // old vertex -> new vertex.
  std::vector<VertexId> vertex_map;
};

// Merges u and v into vertex min(u, v); vertices above max(u, v) shift down
// by one. Surviving edges keep their relative order.
Contraction Contract(const Multigraph& g, VertexId u, VertexId v);

// Symmetric difference of the stored sides. nullopt means the two cuts are
// the same bipartition. The edge set of the result is Delta(a) xor Delta(b).
std::optional<Cut> SymmetricDifference(const Multigraph& g, const Cut& a,
                                       const Cut& b);

std::int64_t CutWeightSum(const Multigraph& g, const SignedWeights& w,
                          const Cut& c);

// Throws Error(kInvalidInstance) if the cut has no crossing edges.
Rational AverageCutWeight(const Multigraph& g, const SignedWeights& w,
                          const Cut& c);

// Validation helpers shared by the other modules.
void CheckCut(const Multigraph& g, const Cut& c);
void CheckWeights(const Multigraph& g, const SignedWeights& w);

}  // namespace thintree
