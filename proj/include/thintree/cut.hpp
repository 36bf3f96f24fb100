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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thintree {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// A nontrivial bipartition (A, V \ A) of vertices 0..n-1, stored as the
// vertex set of the side that does not contain vertex 0. Every Cut value is
// canonical and nontrivial; the factory functions refuse anything else.
//
// Cuts are totally ordered by the integer whose bit i is set iff vertex i is
// on the stored side. All tie-breaking in the library uses this order.
class Cut {
 public:
  // Throws Error(kInvalidCut) if `side` is empty, covers every vertex, or
  // names a vertex >= vertex_count.
  static Cut FromVertices(std::size_t vertex_count,
                          std::span<const VertexId> side);
  // Bit i of `mask` marks vertex i. Requires vertex_count <= 64.
  static Cut FromMask(std::size_t vertex_count, std::uint64_t mask);
  // Canonicalizes an arbitrary side; nullopt when the bipartition is trivial.
  static std::optional<Cut> TryFromBits(std::size_t vertex_count,
                                        std::vector<std::uint64_t> words);

  std::size_t vertex_count() const noexcept { return vertex_count_; }

  bool Contains(VertexId v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }

  std::vector<VertexId> Vertices() const;
  std::size_t size() const;

  // Only valid when vertex_count() <= 64.
  std::uint64_t Mask() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  // "{1,2,5}"
  std::string ToString() const;

  friend bool operator==(const Cut& a, const Cut& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b) noexcept;

 private:
  Cut(std::size_t vertex_count, std::vector<std::uint64_t> words)
      : vertex_count_(vertex_count), words_(std::move(words)) {}

  std::size_t vertex_count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace thintree
