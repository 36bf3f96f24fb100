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
#include "thintree/multigraph.hpp"
#include "thintree/rational.hpp"

namespace thintree {

// Exhaustive solvers refuse graphs above this many vertices unless the caller
// passes a larger limit (hard ceiling 63, the width of a cut mask).
inline constexpr std::size_t kDefaultVertexLimit = 26;
inline constexpr std::size_t kMaxVertexLimit = 63;

// Edge subset of a host multigraph that is checked to be a spanning tree.
class SpanningTree {
 public:
  SpanningTree() = default;
  // Throws Error(kInvalidTree) unless `edge_ids` are distinct, in range, and
  // form an acyclic subgraph with vertex_count - 1 edges.
  SpanningTree(const Multigraph& host, std::vector<EdgeId> edge_ids);

  std::span<const EdgeId> edge_ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool Contains(EdgeId e) const noexcept {
    return e < member_.size() && member_[e];
  }

  std::size_t host_vertex_count() const noexcept { return host_vertices_; }
  std::size_t host_edge_count() const noexcept { return member_.size(); }

 private:
  std::vector<EdgeId> ids_;  // ascending
  std::vector<bool> member_;
  std::size_t host_vertices_ = 0;
};

// Outcome of a thinness query. worst_cut is set exactly when is_thin is
// false; worst_thickness is the maximum T-thickness over all cuts examined.
struct ThinnessVerdict {
  bool is_thin = true;
  std::optional<Cut> worst_cut;
  Rational worst_thickness;
};

// |delta_T(c)| / |delta_G(c)|.
Rational Thickness(const Multigraph& g, const SpanningTree& t, const Cut& c);

// Enumerates all 2^(n-1) - 1 cuts. Among cuts of maximum thickness, the one
// with the smallest mask is reported. Throws Error(kGuardExceeded) when
// n > vertex_limit; for gadget graphs use TtvcCliqueRespectingOracle.
ThinnessVerdict ThinTreeVerifyBruteForce(
    const Multigraph& g, const SpanningTree& t, const Rational& alpha,
    std::size_t vertex_limit = kDefaultVertexLimit);

struct MaxCutResult {
  std::int64_t value = 0;
  Cut cut;
};

struct MaxAvgCutResult {
  Rational value;
  Cut cut;
};

MaxCutResult MaxCutBruteForce(const Multigraph& g,
                              std::size_t vertex_limit = kDefaultVertexLimit);

MaxAvgCutResult MaxAvgCutOptBruteForce(
    const Multigraph& g, const SignedWeights& w,
    std::size_t vertex_limit = kDefaultVertexLimit);

// True iff some cut has average weight >= k. k is rational; k < -1 is a
// domain error.
bool MaxAvgCutDecisionBruteForce(
    const Multigraph& g, const SignedWeights& w, const Rational& k,
    std::size_t vertex_limit = kDefaultVertexLimit);

}  // namespace thintree
