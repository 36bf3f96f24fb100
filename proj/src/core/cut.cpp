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

#include "thintree/cut.hpp"

#include <bit>

#include "thintree/errors.hpp"

namespace thintree {

namespace {

std::size_t WordCount(std::size_t n) { return (n + 63) / 64; }

// Clears bits at positions >= n in the last word.
void TrimTail(std::vector<std::uint64_t>& words, std::size_t n) {
  if (n % 64 != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }
}

}  // namespace

std::optional<Cut> Cut::TryFromBits(std::size_t vertex_count,
                                    std::vector<std::uint64_t> words) {
  words.resize(WordCount(vertex_count), 0);
  TrimTail(words, vertex_count);
  if (vertex_count > 0 && (words[0] & 1U)) {
    for (auto& w : words) w = ~w;
    TrimTail(words, vertex_count);
  }
  for (auto w : words) {
    if (w != 0) return Cut(vertex_count, std::move(words));
  }
  return std::nullopt;
}

Cut Cut::FromVertices(std::size_t vertex_count,
                      std::span<const VertexId> side) {
  std::vector<std::uint64_t> words(WordCount(vertex_count), 0);
  for (VertexId v : side) {
    if (v >= vertex_count) {
      throw Error(ErrorCode::kInvalidCut,
                  "cut names vertex " + std::to_string(v) + " but graph has " +
                      std::to_string(vertex_count) + " vertices");
    }
    words[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  auto cut = TryFromBits(vertex_count, std::move(words));
  if (!cut) throw Error(ErrorCode::kInvalidCut, "trivial cut");
  return *std::move(cut);
}

Cut Cut::FromMask(std::size_t vertex_count, std::uint64_t mask) {
  if (vertex_count > 64) {
    throw Error(ErrorCode::kInvalidArgument, "mask cuts need <= 64 vertices");
  }
  if (vertex_count < 64 && (mask >> vertex_count) != 0) {
    throw Error(ErrorCode::kInvalidCut, "mask names a vertex out of range");
  }
  auto cut = TryFromBits(vertex_count, {mask});
  if (!cut) throw Error(ErrorCode::kInvalidCut, "trivial cut");
  return *std::move(cut);
}

std::vector<VertexId> Cut::Vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t Cut::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::uint64_t Cut::Mask() const {
  if (vertex_count_ > 64) {
    throw Error(ErrorCode::kInvalidArgument, "cut has more than 64 vertices");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string Cut::ToString() const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : Vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Cut& a, const Cut& b) noexcept {
  if (a.vertex_count_ != b.vertex_count_) {
    return a.vertex_count_ <=> b.vertex_count_;
  }
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace thintree
