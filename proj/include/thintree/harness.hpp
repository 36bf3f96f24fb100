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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "thintree/graph_io.hpp"
#include "thintree/reductions.hpp"

namespace thintree {

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  Rational extra_edge_probability{1, 3};
  bool allow_parallel = false;
  Rational weight_bias{1, 2};  // P(w_e = +1)
  std::size_t max_edges = 0;   // 0: no cap; the spanning tree is never capped

  std::string ToString() const;
};

// Produces a reproducible stream of connected multigraphs: a random
// spanning tree plus independent extra edges, with i.i.d. signed weights.
// Draws come from std::mt19937_64 (whose output is fixed by the standard)
// through integer-only helpers, so streams match across platforms.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const GeneratorConfig& config);

  WeightedGraph Next();

  // Uniform in [0, bound).
  std::uint64_t UniformBelow(std::uint64_t bound);
  bool Bernoulli(const Rational& p);

 private:
  GeneratorConfig config_;
  std::mt19937_64 rng_;
};

// First instance of the stream for `config`.
WeightedGraph GenerateConnected(const GeneratorConfig& config);

// "n=3 m=2 edges=0-1:+1,1-2:-1"
std::string DescribeInstance(const Multigraph& g, const SignedWeights* w);

// ---------------------------------------------------------------------------
// Reports

struct LemmaViolation {
  std::optional<Cut> cut;
  std::string expected;
  std::string observed;
  std::string context;  // multi-line, printed as '#' comments
};

struct LemmaReport {
  std::string name;
  std::string descriptor;
  std::vector<std::pair<std::string, std::string>> header;
  std::size_t checks_run = 0;
  std::vector<LemmaViolation> violations;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return violations.empty(); }

  // Byte-identical for identical inputs; elapsed time is not printed.
  void Print(std::ostream& out) const;
  std::string ToString() const;
};

inline constexpr std::size_t kLemmaVertexLimit = 16;
inline constexpr std::size_t kEndToEndVertexLimit = 7;

// For every cut c of g: avg(c) >= k iff thickness(lift(c)) > alpha.
LemmaReport Lemma1Check(const Multigraph& g, const SignedWeights& w,
                        const Rational& k,
                        std::size_t multiplier = kDefaultMultiplier);

// Same, against a gadget that is already built.
LemmaReport Lemma1Check(const GadgetInstance& gi);

// Clique-splitting cuts from structured families plus `samples` random
// splitting subsets must all have thickness < 1/3.
LemmaReport Lemma2Check(const GadgetInstance& gi, std::size_t samples,
                        std::uint64_t seed);

// MaxCut(g, k) answered by the whole chain: the max-cut loop over the
// contraction search over the gadget oracle, compared with brute force. The
// chain's own answer is echoed under the header key "answer".
LemmaReport EndToEndCheck(const Multigraph& g, std::int64_t k,
                          std::size_t multiplier = kDefaultMultiplier);

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 6;
  std::size_t multiplier = kDefaultMultiplier;
  // When false only the decisive thresholds max_cut and max_cut + 1 are
  // posed; otherwise every k in 0..m+1.
  bool all_thresholds = true;
};

LemmaReport RunFuzzCampaign(const FuzzConfig& config);

}  // namespace thintree
