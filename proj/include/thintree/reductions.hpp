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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thintree/cut.hpp"
#include "thintree/errors.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/oracles.hpp"
#include "thintree/rational.hpp"

namespace thintree {

// Clique size is multiplier * |E(G)|. The crossing-cut thickness bound that
// makes the clique-respecting oracle exact is only established from 24 up.
inline constexpr std::size_t kDefaultMultiplier = 24;

// Answers MaxAvgCutOpt: a maximum-average cut, or nullopt for a (protocol
// violating) trivial partition.
using MacoOracle =
    std::function<std::optional<Cut>(const Multigraph&, const SignedWeights&)>;
// Answers MaxAvgCut: does some cut reach average weight >= k?
using MacOracle = std::function<bool(const Multigraph&, const SignedWeights&,
                                     const Rational&)>;

MacoOracle BruteForceMacoOracle(std::size_t vertex_limit = kDefaultVertexLimit);
MacOracle BruteForceMacOracle(std::size_t vertex_limit = kDefaultVertexLimit);

// ---------------------------------------------------------------------------
// Transcripts

enum class StepKind {
  kMaxCutIteration,  // one pass of the symmetric-difference loop
  kThresholdSearch,  // one candidate average weight probed
  kContraction,      // one vertex pair tried for contraction
};

struct TranscriptStep {
  StepKind kind = StepKind::kMaxCutIteration;
  Multigraph graph;
  SignedWeights weights;
  std::optional<Rational> threshold;
  std::optional<Cut> cut_answer;
  std::optional<bool> decision_answer;

  // kMaxCutIteration: weight of the returned cut and the running cut after
  // the xor (nullopt = empty edge set).
  std::int64_t answer_weight = 0;
  std::optional<Cut> running_cut;
  std::size_t running_cut_edges = 0;

  // kContraction: the pair in the current graph's numbering.
  std::pair<VertexId, VertexId> pair{0, 0};
};

struct ReductionTranscript {
  StepKind algorithm = StepKind::kMaxCutIteration;
  Multigraph source;
  SignedWeights source_weights;  // empty for max cut
  std::int64_t max_cut_threshold = 0;
  std::vector<TranscriptStep> steps;

  bool final_decision = false;
  std::optional<Cut> final_cut;
  std::optional<Rational> final_value;

  std::size_t iterations() const { return steps.size(); }
  void Print(std::ostream& out) const;
};

// Protocol or invariant failure inside a reduction, with the steps taken so
// far.
class ReductionError : public Error {
 public:
  ReductionError(ErrorCode code, const std::string& what,
                 ReductionTranscript transcript)
      : Error(code, what), transcript_(std::move(transcript)) {}

  const ReductionTranscript& transcript() const noexcept { return transcript_; }

 private:
  ReductionTranscript transcript_;
};

// Re-poses every recorded query, checks the oracle gives the recorded
// answer, and re-derives the final answer from the recorded answers alone.
bool ReplayTranscript(const ReductionTranscript& transcript,
                      const MacoOracle& maco);
bool ReplayTranscript(const ReductionTranscript& transcript,
                      const MacOracle& mac);

// ---------------------------------------------------------------------------
// MaxCut via MaxAvgCutOpt

struct MaxCutReduction {
  bool answer = false;
  ReductionTranscript transcript;
};

// Grows a cut C by xor-ing in maximum-average cuts under weights -1 on C and
// +1 elsewhere, until the oracle's best cut has non-positive weight. Answers
// |C_prev| >= k. Throws Error(kProtocol) on a trivial or foreign oracle
// answer and Error(kInvariantViolation) past n^2 iterations.
MaxCutReduction Alg1MaxCut(const Multigraph& g, std::int64_t k,
                           const MacoOracle& maco);

// ---------------------------------------------------------------------------
// MaxAvgCutOpt via MaxAvgCut

// All reduced p/q with |p| <= q <= |E(g)|, ascending.
std::vector<Rational> EnumerateCandidateAvgWeights(const Multigraph& g);

struct MaxAvgCutReduction {
  Cut cut;
  Rational value;
  ReductionTranscript transcript;
};

MaxAvgCutReduction Alg2Maco(const Multigraph& g, const SignedWeights& w,
                            const MacOracle& mac);

// ---------------------------------------------------------------------------
// MaxAvgCut -> ThinTreeValid^C

struct VertexRange {
  VertexId start = 0;
  std::size_t length = 0;

  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

// The blown-up graph without tree or threshold.
struct GadgetGraph {
  Multigraph g_prime;
  Multigraph source;
  std::size_t multiplier = kDefaultMultiplier;
  std::size_t clique_size = 0;
  std::vector<VertexRange> clique_of;          // per source vertex
  std::vector<std::array<EdgeId, 3>> triplet_of;  // per source edge, ascending

  // Source vertex owning a G' vertex.
  VertexId OwnerOf(VertexId v) const {
    return static_cast<VertexId>(v / clique_size);
  }
  // Edge id of the clique-internal edge {i, j} (clique-local indices, i < j).
  EdgeId CliqueEdgeId(VertexId source_vertex, std::size_t i,
                      std::size_t j) const;
  bool IsCliqueInternal(EdgeId e) const {
    return e < source.vertex_count() * clique_edges_per_clique();
  }
  std::size_t clique_edges_per_clique() const {
    return clique_size * (clique_size - 1) / 2;
  }
};

struct GadgetInstance {
  GadgetGraph gadget;
  SpanningTree tree;
  Rational alpha;
  SignedWeights source_weights;
  Rational k;

  // The clique-respecting oracle is only exact for multiplier >= 24.
  bool sound() const { return gadget.multiplier >= kDefaultMultiplier; }
};

// One clique of multiplier*m vertices per source vertex (clique v occupies
// [v*s, (v+1)*s)); clique edges first, clique by clique in lexicographic pair
// order, then three inter-clique edges per source edge between the lowest
// unused vertices of the two cliques.
GadgetGraph BuildGadgetGraph(const Multigraph& g,
                             std::size_t multiplier = kDefaultMultiplier);

// Path through each clique plus the w_e + 2 lowest-id edges of each triplet,
// minus clique-internal edges that would close a cycle.
SpanningTree BuildGadgetTree(const GadgetGraph& gadget, const SignedWeights& w);

// Largest p/q with 0 <= p <= q, 1 <= q <= edge_count and p/q < (k + 2)/3.
Rational ComputeAlpha(const Rational& k, std::size_t edge_count);

GadgetInstance ReduceMacToTtvc(const Multigraph& g, const SignedWeights& w,
                               const Rational& k,
                               std::size_t multiplier = kDefaultMultiplier);

// Union of the cliques of c's side.
Cut LiftCut(const GadgetGraph& gadget, const Cut& c);
// Throws Error(kNotCliqueRespecting) if some clique is split.
Cut ProjectCut(const GadgetGraph& gadget, const Cut& c_prime);
bool SplitsAClique(const GadgetGraph& gadget, const Cut& c_prime);

struct TtvcAnswer {
  bool yes = false;                 // T is not alpha-thin
  std::optional<Cut> certificate;   // lifted cut in G', set iff yes
  std::optional<Cut> source_cut;    // its projection, set iff yes
  Rational max_lifted_thickness;
  bool soundness_warning = false;   // multiplier < 24
};

// Decides ThinTreeValid^C on a gadget by examining only the lifted cuts.
TtvcAnswer TtvcCliqueRespectingOracle(
    const GadgetInstance& gi, std::size_t vertex_limit = kDefaultVertexLimit);

// MaxAvgCut oracle answered through the gadget reduction.
MacOracle GadgetMacOracle(std::size_t multiplier = kDefaultMultiplier);

// ---------------------------------------------------------------------------
// Gadget files: graph + tree in the graph text format, plus a sidecar with
//   c <orig_vertex> <start> <len>
//   d <orig_edge> <eid1> <eid2> <eid3>
//   a <p> <q>

void WriteGadgetMap(std::ostream& out, const GadgetInstance& gi);

struct GadgetMap {
  std::vector<VertexRange> clique_of;
  std::vector<std::array<EdgeId, 3>> triplet_of;
  Rational alpha;
};
GadgetMap ParseGadgetMap(std::istream& in, const std::string& source);

// Writes gadget.graph, gadget.tree and gadget.map into `dir` (created if
// missing). Throws Error(kIo) on failure.
void WriteGadgetFiles(const std::string& dir, const GadgetInstance& gi);

}  // namespace thintree
