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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "thintree/errors.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/oracles.hpp"

namespace thintree::internal {

inline void CheckEnumerable(const Multigraph& g, std::size_t vertex_limit,
                            const char* what) {
  const std::size_t limit = std::min(vertex_limit, kMaxVertexLimit);
  if (g.vertex_count() > limit) {
    throw Error(ErrorCode::kGuardExceeded,
                std::string(what) + ": " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the enumeration limit of " +
                    std::to_string(limit) +
                    "; for reduction gadgets use the clique-respecting oracle");
  }
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + ": graph has no nontrivial cut");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + ": graph is not connected");
  }
}

// Visits every canonical cut of g (vertex 0 never on the stored side) in
// reflected Gray-code order, so consecutive cuts differ by one vertex.
// `toggle(e, crossing)` fires for every edge whose crossing state changed;
// `visit(mask)` fires once per cut after its toggles.
template <class Toggle, class Visit>
void WalkCutsGray(const Multigraph& g, Toggle&& toggle, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<EdgeId>> incident(n);
  for (const Edge& e : g.edges()) {
    incident[e.u].push_back(e.id);
    incident[e.v].push_back(e.id);
  }
  std::vector<char> side(n, 0);
  std::uint64_t mask = 0;
  const std::uint64_t total = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t i = 1; i <= total; ++i) {
    const auto x = static_cast<VertexId>(std::countr_zero(i) + 1);
    side[x] ^= 1;
    mask ^= std::uint64_t{1} << x;
    for (EdgeId id : incident[x]) {
      const Edge& e = g.edge(id);
      toggle(id, side[e.u] != side[e.v]);
    }
    visit(mask);
  }
}

}  // namespace thintree::internal
