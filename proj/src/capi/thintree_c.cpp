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

#include "thintree/thintree.h"

#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "thintree/errors.hpp"
#include "thintree/graph_io.hpp"
#include "thintree/harness.hpp"
#include "thintree/oracles.hpp"
#include "thintree/reductions.hpp"

struct tt_graph {
  thintree::Multigraph graph;
  thintree::SignedWeights weights;
};

struct tt_tree {
  thintree::SpanningTree tree;
};

struct tt_gadget {
  thintree::GadgetInstance instance;
};

struct tt_report {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string g_last_error;

tt_status Fail(tt_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

tt_status FromCode(thintree::ErrorCode code) {
  return static_cast<tt_status>(static_cast<int>(code));
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
tt_status Guarded(Body&& body) {
  try {
    body();
    return TT_OK;
  } catch (const thintree::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(TT_ERR_INTERNAL, "unknown error");
  }
}

#define TT_REQUIRE(ptr)                                             \
  do {                                                              \
    if ((ptr) == nullptr) {                                         \
      return Fail(TT_ERR_NULL_POINTER, "null argument: " #ptr);     \
    }                                                               \
  } while (0)

thintree::Rational ToRational(tt_rational r) {
  return thintree::Rational(r.num, r.den);
}

tt_rational FromRational(const thintree::Rational& r) {
  return {r.num(), r.den()};
}

std::size_t Limit(std::size_t vertex_limit) {
  return vertex_limit == 0 ? thintree::kDefaultVertexLimit : vertex_limit;
}

std::size_t Multiplier(std::size_t multiplier) {
  return multiplier == 0 ? thintree::kDefaultMultiplier : multiplier;
}

tt_report* MakeReport(std::initializer_list<const thintree::LemmaReport*> parts) {
  auto* report = new tt_report;
  for (const auto* part : parts) {
    report->text += part->ToString();
    report->passed = report->passed && part->passed();
  }
  return report;
}

}  // namespace

extern "C" {

const char* tt_version(void) { return "0.1.0"; }

const char* tt_status_name(tt_status status) {
  switch (status) {
    case TT_OK: return "ok";
    case TT_ERR_NULL_POINTER: return "null-pointer";
    case TT_ERR_INTERNAL: return "internal";
    default:
      if (status >= TT_ERR_INVALID_ARGUMENT && status <= TT_ERR_OVERFLOW) {
        return thintree::ErrorCodeName(
            static_cast<thintree::ErrorCode>(static_cast<int>(status)));
      }
      return "unknown";
  }
}

const char* tt_last_error_message(void) { return g_last_error.c_str(); }

tt_status tt_rational_parse(const char* text, tt_rational* out) {
  TT_REQUIRE(text);
  TT_REQUIRE(out);
  return Guarded([&] { *out = FromRational(thintree::Rational::Parse(text)); });
}

tt_status tt_graph_load(const char* path, tt_graph** out) {
  TT_REQUIRE(path);
  TT_REQUIRE(out);
  return Guarded([&] {
    auto wg = thintree::ReadGraphFile(path);
    *out = new tt_graph{std::move(wg.graph), std::move(wg.weights)};
  });
}

tt_status tt_graph_parse(const char* text, size_t length,
                         const char* source_name, tt_graph** out) {
  TT_REQUIRE(text);
  TT_REQUIRE(out);
  return Guarded([&] {
    std::istringstream in(std::string(text, length));
    auto wg = thintree::ParseGraph(in, source_name ? source_name : "<memory>");
    *out = new tt_graph{std::move(wg.graph), std::move(wg.weights)};
  });
}

tt_status tt_graph_create(size_t vertex_count, size_t edge_count,
                          const uint32_t* endpoints, const int* weights,
                          tt_graph** out) {
  TT_REQUIRE(out);
  if (edge_count > 0) TT_REQUIRE(endpoints);
  return Guarded([&] {
    thintree::Multigraph g(vertex_count);
    std::vector<int> w(edge_count, 1);
    for (size_t i = 0; i < edge_count; ++i) {
      g.AddEdge(endpoints[2 * i], endpoints[2 * i + 1]);
      if (weights != nullptr) w[i] = weights[i];
    }
    *out = new tt_graph{std::move(g), thintree::SignedWeights(std::move(w))};
  });
}

void tt_graph_free(tt_graph* graph) { delete graph; }

size_t tt_graph_vertex_count(const tt_graph* graph) {
  return graph ? graph->graph.vertex_count() : 0;
}

size_t tt_graph_edge_count(const tt_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

int tt_graph_is_connected(const tt_graph* graph) {
  return graph && thintree::IsConnected(graph->graph) ? 1 : 0;
}

tt_status tt_tree_load(const tt_graph* graph, const char* path, tt_tree** out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(path);
  TT_REQUIRE(out);
  return Guarded([&] {
    auto ids = thintree::ReadEdgeSubsetFile(path);
    try {
      *out = new tt_tree{thintree::SpanningTree(graph->graph, std::move(ids))};
    } catch (const thintree::Error& e) {
      throw thintree::Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

tt_status tt_tree_create(const tt_graph* graph, const uint32_t* edge_ids,
                         size_t count, tt_tree** out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(out);
  if (count > 0) TT_REQUIRE(edge_ids);
  return Guarded([&] {
    std::vector<thintree::EdgeId> ids(edge_ids, edge_ids + count);
    *out = new tt_tree{thintree::SpanningTree(graph->graph, std::move(ids))};
  });
}

void tt_tree_free(tt_tree* tree) { delete tree; }

tt_status tt_thickness(const tt_graph* graph, const tt_tree* tree,
                       uint64_t cut_mask, tt_rational* out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(tree);
  TT_REQUIRE(out);
  return Guarded([&] {
    const auto cut =
        thintree::Cut::FromMask(graph->graph.vertex_count(), cut_mask);
    *out = FromRational(thintree::Thickness(graph->graph, tree->tree, cut));
  });
}

tt_status tt_verify_thin(const tt_graph* graph, const tt_tree* tree,
                         tt_rational alpha, size_t vertex_limit,
                         tt_verdict* out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(tree);
  TT_REQUIRE(out);
  return Guarded([&] {
    const auto v = thintree::ThinTreeVerifyBruteForce(
        graph->graph, tree->tree, ToRational(alpha), Limit(vertex_limit));
    out->is_thin = v.is_thin ? 1 : 0;
    out->worst_thickness = FromRational(v.worst_thickness);
    out->worst_cut_mask = v.worst_cut ? v.worst_cut->Mask() : 0;
  });
}

tt_status tt_max_cut(const tt_graph* graph, size_t vertex_limit,
                     int64_t* value, uint64_t* cut_mask) {
  TT_REQUIRE(graph);
  TT_REQUIRE(value);
  TT_REQUIRE(cut_mask);
  return Guarded([&] {
    const auto r = thintree::MaxCutBruteForce(graph->graph, Limit(vertex_limit));
    *value = r.value;
    *cut_mask = r.cut.Mask();
  });
}

tt_status tt_max_avg_cut(const tt_graph* graph, size_t vertex_limit,
                         tt_rational* value, uint64_t* cut_mask) {
  TT_REQUIRE(graph);
  TT_REQUIRE(value);
  TT_REQUIRE(cut_mask);
  return Guarded([&] {
    const auto r = thintree::MaxAvgCutOptBruteForce(
        graph->graph, graph->weights, Limit(vertex_limit));
    *value = FromRational(r.value);
    *cut_mask = r.cut.Mask();
  });
}

tt_status tt_max_avg_cut_decide(const tt_graph* graph, tt_rational k,
                                size_t vertex_limit, int* answer) {
  TT_REQUIRE(graph);
  TT_REQUIRE(answer);
  return Guarded([&] {
    *answer = thintree::MaxAvgCutDecisionBruteForce(
                  graph->graph, graph->weights, ToRational(k),
                  Limit(vertex_limit))
                  ? 1
                  : 0;
  });
}

tt_status tt_reduce_max_cut(const tt_graph* graph, int64_t k, int* answer,
                            size_t* iterations) {
  TT_REQUIRE(graph);
  TT_REQUIRE(answer);
  return Guarded([&] {
    const auto r = thintree::Alg1MaxCut(graph->graph, k,
                                        thintree::BruteForceMacoOracle());
    *answer = r.answer ? 1 : 0;
    if (iterations != nullptr) *iterations = r.transcript.iterations();
  });
}

tt_status tt_reduce_max_avg_cut(const tt_graph* graph, tt_rational* value,
                                uint64_t* cut_mask) {
  TT_REQUIRE(graph);
  TT_REQUIRE(value);
  TT_REQUIRE(cut_mask);
  return Guarded([&] {
    const auto r = thintree::Alg2Maco(graph->graph, graph->weights,
                                      thintree::BruteForceMacOracle());
    *value = FromRational(r.value);
    *cut_mask = r.cut.Mask();
  });
}

tt_status tt_reduce(const tt_graph* graph, tt_rational k, size_t multiplier,
                    tt_gadget** out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(out);
  return Guarded([&] {
    *out = new tt_gadget{thintree::ReduceMacToTtvc(
        graph->graph, graph->weights, ToRational(k), Multiplier(multiplier))};
  });
}

void tt_gadget_free(tt_gadget* gadget) { delete gadget; }

size_t tt_gadget_vertex_count(const tt_gadget* gadget) {
  return gadget ? gadget->instance.gadget.g_prime.vertex_count() : 0;
}

size_t tt_gadget_edge_count(const tt_gadget* gadget) {
  return gadget ? gadget->instance.gadget.g_prime.edge_count() : 0;
}

size_t tt_gadget_clique_size(const tt_gadget* gadget) {
  return gadget ? gadget->instance.gadget.clique_size : 0;
}

tt_rational tt_gadget_alpha(const tt_gadget* gadget) {
  return gadget ? FromRational(gadget->instance.alpha) : tt_rational{0, 1};
}

int tt_gadget_is_sound(const tt_gadget* gadget) {
  return gadget && gadget->instance.sound() ? 1 : 0;
}

tt_status tt_gadget_write(const tt_gadget* gadget, const char* dir) {
  TT_REQUIRE(gadget);
  TT_REQUIRE(dir);
  return Guarded([&] { thintree::WriteGadgetFiles(dir, gadget->instance); });
}

tt_status tt_gadget_decide(const tt_gadget* gadget, tt_ttvc_answer* out) {
  TT_REQUIRE(gadget);
  TT_REQUIRE(out);
  return Guarded([&] {
    const auto a = thintree::TtvcCliqueRespectingOracle(gadget->instance);
    out->yes = a.yes ? 1 : 0;
    out->max_lifted_thickness = FromRational(a.max_lifted_thickness);
    out->source_cut_mask = a.source_cut ? a.source_cut->Mask() : 0;
    out->soundness_warning = a.soundness_warning ? 1 : 0;
  });
}

tt_status tt_check_lemmas(const tt_graph* graph, tt_rational k,
                          size_t multiplier, size_t samples, uint64_t seed,
                          tt_report** out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(out);
  return Guarded([&] {
    const auto gi = thintree::ReduceMacToTtvc(
        graph->graph, graph->weights, ToRational(k), Multiplier(multiplier));
    const auto lemma1 = thintree::Lemma1Check(gi);
    const auto lemma2 = thintree::Lemma2Check(gi, samples, seed);
    *out = MakeReport({&lemma1, &lemma2});
  });
}

tt_status tt_end_to_end(const tt_graph* graph, int64_t k, size_t multiplier,
                        tt_report** out) {
  TT_REQUIRE(graph);
  TT_REQUIRE(out);
  return Guarded([&] {
    const auto r =
        thintree::EndToEndCheck(graph->graph, k, Multiplier(multiplier));
    *out = MakeReport({&r});
  });
}

tt_status tt_fuzz(const tt_fuzz_config* config, tt_report** out) {
  TT_REQUIRE(config);
  TT_REQUIRE(out);
  return Guarded([&] {
    thintree::FuzzConfig fc;
    fc.seed = config->seed;
    fc.count = config->count;
    fc.max_vertices = config->max_vertices;
    fc.max_edges = config->max_edges;
    fc.multiplier = Multiplier(config->multiplier);
    fc.all_thresholds = config->all_thresholds != 0;
    const auto r = thintree::RunFuzzCampaign(fc);
    *out = MakeReport({&r});
  });
}

const char* tt_report_text(const tt_report* report) {
  return report ? report->text.c_str() : "";
}

int tt_report_passed(const tt_report* report) {
  return report && report->passed ? 1 : 0;
}

void tt_report_free(tt_report* report) { delete report; }

}  // extern "C"
