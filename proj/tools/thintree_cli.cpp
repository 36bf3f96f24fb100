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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 thin / pass, 1 counterexample found, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "thintree/thintree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

// Thrown out of a subcommand to leave with a diagnostic and exit code 2.
struct CliFailure {
  std::string message;
};

void Check(tt_status status) {
  if (status != TT_OK) {
    throw CliFailure{std::string(tt_status_name(status)) + ": " +
                     tt_last_error_message()};
  }
}

std::string FormatRational(tt_rational r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string FormatMask(uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 64; ++v) {
    if (!((mask >> v) & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

tt_rational ParseRational(const std::string& text) {
  tt_rational r{0, 1};
  Check(tt_rational_parse(text.c_str(), &r));
  return r;
}

// RAII holders for the opaque handles.
template <class T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr_); }

  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using GraphHandle = Handle<tt_graph, tt_graph_free>;
using TreeHandle = Handle<tt_tree, tt_tree_free>;
using GadgetHandle = Handle<tt_gadget, tt_gadget_free>;
using ReportHandle = Handle<tt_report, tt_report_free>;

int RunVerify(const std::string& graph_path, const std::string& tree_path,
              const std::string& alpha_text, std::size_t vertex_limit) {
  const tt_rational alpha = ParseRational(alpha_text);
  GraphHandle graph;
  Check(tt_graph_load(graph_path.c_str(), graph.out()));
  TreeHandle tree;
  Check(tt_tree_load(graph.get(), tree_path.c_str(), tree.out()));
  tt_verdict verdict{};
  Check(tt_verify_thin(graph.get(), tree.get(), alpha, vertex_limit, &verdict));
  std::cout << "alpha " << FormatRational(alpha) << '\n'
            << "worst_thickness " << FormatRational(verdict.worst_thickness)
            << '\n';
  if (verdict.is_thin) {
    std::cout << "verdict THIN\n";
    return kExitOk;
  }
  std::cout << "verdict NOT-THIN\n"
            << "certificate " << FormatMask(verdict.worst_cut_mask) << '\n';
  return kExitCounterexample;
}

int RunSolve(const std::string& problem, const std::string& graph_path,
             const std::string& k_text, std::size_t vertex_limit) {
  GraphHandle graph;
  Check(tt_graph_load(graph_path.c_str(), graph.out()));
  if (problem == "maxcut") {
    int64_t value = 0;
    uint64_t mask = 0;
    Check(tt_max_cut(graph.get(), vertex_limit, &value, &mask));
    std::cout << "max_cut " << value << '\n' << "cut " << FormatMask(mask) << '\n';
    if (!k_text.empty()) {
      const tt_rational k = ParseRational(k_text);
      const bool yes = static_cast<__int128>(value) * k.den >= k.num;
      std::cout << "decision " << (yes ? "YES" : "NO") << '\n';
    }
    return kExitOk;
  }
  if (!k_text.empty()) {
    int answer = 0;
    Check(tt_max_avg_cut_decide(graph.get(), ParseRational(k_text),
                                vertex_limit, &answer));
    std::cout << "decision " << (answer ? "YES" : "NO") << '\n';
    return kExitOk;
  }
  tt_rational value{0, 1};
  uint64_t mask = 0;
  Check(tt_max_avg_cut(graph.get(), vertex_limit, &value, &mask));
  std::cout << "max_avg_cut " << FormatRational(value) << '\n'
            << "cut " << FormatMask(mask) << '\n';
  return kExitOk;
}

int RunReduce(const std::string& graph_path, const std::string& k_text,
              std::size_t multiplier, const std::string& out_dir) {
  const tt_rational k = ParseRational(k_text);
  GraphHandle graph;
  Check(tt_graph_load(graph_path.c_str(), graph.out()));
  GadgetHandle gadget;
  Check(tt_reduce(graph.get(), k, multiplier, gadget.out()));
  Check(tt_gadget_write(gadget.get(), out_dir.c_str()));
  std::cout << "vertices " << tt_gadget_vertex_count(gadget.get()) << '\n'
            << "edges " << tt_gadget_edge_count(gadget.get()) << '\n'
            << "clique_size " << tt_gadget_clique_size(gadget.get()) << '\n'
            << "alpha " << FormatRational(tt_gadget_alpha(gadget.get())) << '\n';
  if (!tt_gadget_is_sound(gadget.get())) {
    std::cout << "warning multiplier below 24: clique-splitting bound not "
                 "established\n";
  }
  std::cout << "wrote " << out_dir << "/gadget.{graph,tree,map}\n";
  return kExitOk;
}

int RunCheckLemmas(const std::string& graph_path, const std::string& k_text,
                   std::size_t multiplier, std::size_t samples,
                   uint64_t seed) {
  const tt_rational k = ParseRational(k_text);
  GraphHandle graph;
  Check(tt_graph_load(graph_path.c_str(), graph.out()));
  ReportHandle report;
  Check(tt_check_lemmas(graph.get(), k, multiplier, samples, seed,
                        report.out()));
  std::cout << tt_report_text(report.get());
  return tt_report_passed(report.get()) ? kExitOk : kExitCounterexample;
}

int RunFuzz(const tt_fuzz_config& config) {
  ReportHandle report;
  Check(tt_fuzz(&config, report.out()));
  std::cout << tt_report_text(report.get());
  return tt_report_passed(report.get()) ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin spanning tree verification and its hardness reduction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tt_version());

  std::size_t vertex_limit = 0;

  std::string graph_path, tree_path, alpha_text;
  auto* verify = app.add_subcommand(
      "verify", "Decide whether a spanning tree is alpha-thin (exhaustive)");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("tree", tree_path, "tree file")->required();
  verify->add_option("alpha", alpha_text, "threshold p/q")->required();
  verify->add_option("--vertex-limit", vertex_limit,
                     "enumeration guard (default 26)");

  std::string problem, k_text;
  auto* solve = app.add_subcommand("solve", "Exhaustive max cut oracles");
  solve->add_option("problem", problem, "maxcut | maxavgcut")
      ->required()
      ->check(CLI::IsMember({"maxcut", "maxavgcut"}));
  solve->add_option("graph", graph_path, "graph file")->required();
  solve->add_option("--k", k_text, "decision threshold p/q");
  solve->add_option("--vertex-limit", vertex_limit,
                    "enumeration guard (default 26)");

  std::size_t multiplier = 24;
  std::string out_dir;
  auto* reduce = app.add_subcommand(
      "reduce", "Build the gadget instance (G', T, alpha) for (G, w, k)");
  reduce->add_option("graph", graph_path, "weighted graph file")->required();
  reduce->add_option("--k", k_text, "threshold p/q")->required();
  reduce->add_option("--multiplier", multiplier, "clique size per edge")
      ->capture_default_str();
  reduce->add_option("--out", out_dir, "output directory")->required();

  std::size_t samples = 1000;
  uint64_t seed = 1;
  auto* lemmas = app.add_subcommand(
      "check-lemmas", "Check the threshold and clique-splitting lemmas");
  lemmas->add_option("graph", graph_path, "weighted graph file")->required();
  lemmas->add_option("--k", k_text, "threshold p/q")->required();
  lemmas->add_option("--multiplier", multiplier, "clique size per edge")
      ->capture_default_str();
  lemmas->add_option("--samples", samples, "random splitting cuts")
      ->capture_default_str();
  lemmas->add_option("--seed", seed, "sampling seed")->capture_default_str();

  tt_fuzz_config fuzz_config{1, 100, 5, 6, 24, 1};
  bool decisive_only = false;
  auto* fuzz = app.add_subcommand(
      "fuzz", "End-to-end campaign: max cut through the whole chain");
  fuzz->add_option("--seed", fuzz_config.seed, "campaign seed")
      ->capture_default_str();
  fuzz->add_option("--count", fuzz_config.count, "instances")
      ->capture_default_str();
  fuzz->add_option("--max-n", fuzz_config.max_vertices, "max vertices (<= 7)")
      ->capture_default_str();
  fuzz->add_option("--max-m", fuzz_config.max_edges, "max edges (0: no cap)")
      ->capture_default_str();
  fuzz->add_option("--multiplier", fuzz_config.multiplier,
                   "clique size per edge")
      ->capture_default_str();
  fuzz->add_flag("--decisive-only", decisive_only,
                 "only pose k = maxcut and k = maxcut + 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*verify) return RunVerify(graph_path, tree_path, alpha_text, vertex_limit);
    if (*solve) return RunSolve(problem, graph_path, k_text, vertex_limit);
    if (*reduce) return RunReduce(graph_path, k_text, multiplier, out_dir);
    if (*lemmas) {
      return RunCheckLemmas(graph_path, k_text, multiplier, samples, seed);
    }
    if (*fuzz) {
      fuzz_config.all_thresholds = decisive_only ? 0 : 1;
      return RunFuzz(fuzz_config);
    }
  } catch (const CliFailure& failure) {
    std::cerr << "error: " << failure.message << '\n';
    return kExitError;
  }
  return kExitError;
}
