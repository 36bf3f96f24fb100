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

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

#include "thintree/errors.hpp"
#include "thintree/reductions.hpp"

namespace thintree {

namespace {

void RequireConnectedPair(const Multigraph& g, const char* what) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + ": need at least 2 vertices");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + ": graph is not connected");
  }
}

SignedWeights RunningCutWeights(const Multigraph& g,
                                const std::optional<Cut>& running) {
  std::vector<int> w(g.edge_count(), 1);
  if (running) {
    for (EdgeId e : Delta(g, *running)) w[e] = -1;
  }
  return SignedWeights(std::move(w));
}

std::size_t CutEdges(const Multigraph& g, const std::optional<Cut>& c) {
  return c ? DeltaSize(g, *c) : 0;
}

std::optional<Cut> Xor(const Multigraph& g, const std::optional<Cut>& running,
                       const Cut& answer) {
  if (!running) return answer;
  return SymmetricDifference(g, *running, answer);
}

// Tracks which source vertices were merged into each current vertex.
struct ContractionState {
  Multigraph graph;
  SignedWeights weights;
  std::vector<VertexId> class_of;  // source vertex -> current vertex

  ContractionState Contracted(VertexId u, VertexId v) const {
    Contraction c = Contract(graph, u, v);
    std::vector<int> w(c.graph.edge_count(), 1);
    for (EdgeId old = 0; old < c.edge_map.size(); ++old) {
      if (c.edge_map[old]) w[*c.edge_map[old]] = weights[old];
    }
    ContractionState next{std::move(c.graph), SignedWeights(std::move(w)),
                          class_of};
    for (auto& x : next.class_of) x = c.vertex_map[x];
    return next;
  }

  Cut InducedCut() const {
    std::vector<VertexId> side;
    for (VertexId x = 0; x < class_of.size(); ++x) {
      if (class_of[x] == 1) side.push_back(x);
    }
    return Cut::FromVertices(class_of.size(), side);
  }
};

const char* StepName(StepKind kind) {
  switch (kind) {
    case StepKind::kMaxCutIteration: return "maxcut-iteration";
    case StepKind::kThresholdSearch: return "threshold-search";
    case StepKind::kContraction: return "contraction";
  }
  return "?";
}

}  // namespace

MacoOracle BruteForceMacoOracle(std::size_t vertex_limit) {
  return [vertex_limit](const Multigraph& g,
                        const SignedWeights& w) -> std::optional<Cut> {
    return MaxAvgCutOptBruteForce(g, w, vertex_limit).cut;
  };
}

MacOracle BruteForceMacOracle(std::size_t vertex_limit) {
  return [vertex_limit](const Multigraph& g, const SignedWeights& w,
                        const Rational& k) {
    return MaxAvgCutDecisionBruteForce(g, w, k, vertex_limit);
  };
}

MaxCutReduction Alg1MaxCut(const Multigraph& g, std::int64_t k,
                           const MacoOracle& maco) {
  RequireConnectedPair(g, "max cut reduction");
  MaxCutReduction out;
  ReductionTranscript& tr = out.transcript;
  tr.algorithm = StepKind::kMaxCutIteration;
  tr.source = g;
  tr.max_cut_threshold = k;

  const std::size_t bound = g.vertex_count() * g.vertex_count();
  std::optional<Cut> running;
  std::optional<Cut> previous;
  while (true) {
    if (tr.steps.size() >= bound) {
      throw ReductionError(ErrorCode::kInvariantViolation,
                           "max cut reduction exceeded " +
                               std::to_string(bound) +
                               " iterations; the oracle is not returning "
                               "maximum average cuts",
                           tr);
    }
    TranscriptStep step;
    step.kind = StepKind::kMaxCutIteration;
    step.graph = g;
    step.weights = RunningCutWeights(g, running);
    std::optional<Cut> answer = maco(g, step.weights);
    if (!answer) {
      throw ReductionError(ErrorCode::kProtocol,
                           "MaxAvgCutOpt oracle returned a trivial partition",
                           tr);
    }
    if (answer->vertex_count() != g.vertex_count()) {
      throw ReductionError(ErrorCode::kProtocol,
                           "MaxAvgCutOpt oracle returned a cut of another "
                           "graph",
                           tr);
    }
    step.cut_answer = answer;
    step.answer_weight = CutWeightSum(g, step.weights, *answer);
    previous = running;
    running = Xor(g, running, *answer);
    step.running_cut = running;
    step.running_cut_edges = CutEdges(g, running);
    const bool stop = step.answer_weight <= 0;
    tr.steps.push_back(std::move(step));
    if (stop) break;
  }
  out.answer = static_cast<std::int64_t>(CutEdges(g, previous)) >= k;
  tr.final_decision = out.answer;
  tr.final_cut = previous;
  return out;
}

std::vector<Rational> EnumerateCandidateAvgWeights(const Multigraph& g) {
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= m; ++q) {
    for (std::int64_t p = -q; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MaxAvgCutReduction Alg2Maco(const Multigraph& g, const SignedWeights& w,
                            const MacOracle& mac) {
  RequireConnectedPair(g, "max average cut reduction");
  CheckWeights(g, w);
  ReductionTranscript tr;
  tr.algorithm = StepKind::kThresholdSearch;
  tr.source = g;
  tr.source_weights = w;

  std::optional<Rational> best;
  for (const Rational& candidate : EnumerateCandidateAvgWeights(g)) {
    TranscriptStep step;
    step.kind = StepKind::kThresholdSearch;
    step.graph = g;
    step.weights = w;
    step.threshold = candidate;
    step.decision_answer = mac(g, w, candidate);
    if (*step.decision_answer) best = candidate;
    tr.steps.push_back(std::move(step));
  }
  if (!best) {
    throw ReductionError(
        ErrorCode::kProtocol,
        "MaxAvgCut oracle rejected every candidate, including -1", tr);
  }
  const Rational target = *best;

  ContractionState state{g, w, {}};
  state.class_of.resize(g.vertex_count());
  std::iota(state.class_of.begin(), state.class_of.end(), VertexId{0});
  while (state.graph.vertex_count() > 2) {
    bool contracted = false;
    const auto n = static_cast<VertexId>(state.graph.vertex_count());
    for (VertexId u = 0; u < n && !contracted; ++u) {
      for (VertexId v = u + 1; v < n && !contracted; ++v) {
        ContractionState next = state.Contracted(u, v);
        TranscriptStep step;
        step.kind = StepKind::kContraction;
        step.graph = next.graph;
        step.weights = next.weights;
        step.threshold = target;
        step.pair = {u, v};
        step.decision_answer = mac(next.graph, next.weights, target);
        if (*step.decision_answer) {
          state = std::move(next);
          contracted = true;
        }
        tr.steps.push_back(std::move(step));
      }
    }
    if (!contracted) {
      throw ReductionError(ErrorCode::kInvariantViolation,
                           "no contractible vertex pair keeps average weight " +
                               target.ToString() + " reachable",
                           tr);
    }
  }

  Cut cut = state.InducedCut();
  const Rational value = AverageCutWeight(g, w, cut);
  if (value != target) {
    throw ReductionError(ErrorCode::kProtocol,
                         "contracted cut has average weight " +
                             value.ToString() + " but the oracle reported " +
                             target.ToString(),
                         tr);
  }
  tr.final_decision = true;
  tr.final_cut = cut;
  tr.final_value = value;
  return {std::move(cut), value, std::move(tr)};
}

bool ReplayTranscript(const ReductionTranscript& tr, const MacoOracle& maco) {
  if (tr.algorithm != StepKind::kMaxCutIteration || tr.steps.empty()) {
    return false;
  }
  const Multigraph& g = tr.source;
  std::optional<Cut> running;
  std::optional<Cut> previous;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const TranscriptStep& step = tr.steps[i];
    if (!step.cut_answer) return false;
    if (!(step.weights == RunningCutWeights(g, running))) return false;
    if (maco(step.graph, step.weights) != step.cut_answer) return false;
    const std::int64_t weight = CutWeightSum(g, step.weights, *step.cut_answer);
    previous = running;
    running = Xor(g, running, *step.cut_answer);
    const bool last = i + 1 == tr.steps.size();
    if ((weight <= 0) != last) return false;
  }
  const bool decision =
      static_cast<std::int64_t>(CutEdges(g, previous)) >= tr.max_cut_threshold;
  return decision == tr.final_decision && previous == tr.final_cut;
}

bool ReplayTranscript(const ReductionTranscript& tr, const MacOracle& mac) {
  if (tr.algorithm != StepKind::kThresholdSearch) return false;
  std::optional<Rational> best;
  ContractionState state{tr.source, tr.source_weights, {}};
  state.class_of.resize(tr.source.vertex_count());
  std::iota(state.class_of.begin(), state.class_of.end(), VertexId{0});
  for (const TranscriptStep& step : tr.steps) {
    if (!step.threshold || !step.decision_answer) return false;
    if (mac(step.graph, step.weights, *step.threshold) !=
        *step.decision_answer) {
      return false;
    }
    if (step.kind == StepKind::kThresholdSearch) {
      if (*step.decision_answer) best = step.threshold;
      continue;
    }
    if (!best || *step.threshold != *best) return false;
    ContractionState next = state.Contracted(step.pair.first, step.pair.second);
    if (!(next.graph == step.graph) || !(next.weights == step.weights)) {
      return false;
    }
    if (*step.decision_answer) state = std::move(next);
  }
  if (state.graph.vertex_count() != 2) return false;
  return state.InducedCut() == tr.final_cut && best == tr.final_value;
}

void ReductionTranscript::Print(std::ostream& out) const {
  out << "transcript " << StepName(algorithm) << " n=" << source.vertex_count()
      << " m=" << source.edge_count();
  if (algorithm == StepKind::kMaxCutIteration) {
    out << " k=" << max_cut_threshold;
  }
  out << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TranscriptStep& s = steps[i];
    out << "step " << i << ' ' << StepName(s.kind);
    switch (s.kind) {
      case StepKind::kMaxCutIteration:
        out << " answer=" << (s.cut_answer ? s.cut_answer->ToString() : "-")
            << " weight=" << s.answer_weight << " running="
            << (s.running_cut ? s.running_cut->ToString() : "{}")
            << " edges=" << s.running_cut_edges;
        break;
      case StepKind::kThresholdSearch:
        out << " k=" << *s.threshold
            << " answer=" << (*s.decision_answer ? "YES" : "NO");
        break;
      case StepKind::kContraction:
        out << " pair=" << s.pair.first << ',' << s.pair.second
            << " k=" << *s.threshold
            << " answer=" << (*s.decision_answer ? "YES" : "NO");
        break;
    }
    out << '\n';
  }
  out << "final " << (final_decision ? "YES" : "NO");
  if (final_cut) out << " cut=" << final_cut->ToString();
  if (final_value) out << " value=" << *final_value;
  out << '\n';
}

}  // namespace thintree
