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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "thintree/multigraph.hpp"

namespace thintree {

// Line-oriented text format:
//
//   p <n> <m>
//   e <u> <v> [<w>]      (m lines, in edge id order; w in {-1, 1}, default 1)
//
// Edge subsets (spanning trees) use
//
//   t <k>
//   i <edge_id>          (k lines)
//
// Blank lines and lines starting with '#' are ignored. Malformed input
// raises ParseError with a 1-based line number.
struct WeightedGraph {
  Multigraph graph;
  SignedWeights weights;
};

WeightedGraph ParseGraph(std::istream& in, const std::string& source);
WeightedGraph ReadGraphFile(const std::string& path);

std::vector<EdgeId> ParseEdgeSubset(std::istream& in, const std::string& source);
std::vector<EdgeId> ReadEdgeSubsetFile(const std::string& path);

// Omits the weight column when `weights` is null.
void WriteGraph(std::ostream& out, const Multigraph& g,
                const SignedWeights* weights);
void WriteEdgeSubset(std::ostream& out, std::span<const EdgeId> edges);

}  // namespace thintree
