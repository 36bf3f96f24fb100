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

#include "thintree/harness.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "thintree/errors.hpp"
#include "thintree/oracles.hpp"

namespace thintree {

namespace {

using Clock = std::chrono::steady_clock;

void CheckProbability(const Rational& p, const char* what) {
  if (p < Rational(0) || p > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " " + p.ToString() + " is outside [0, 1]");
  }
}

Cut CutOfVertexSet(std::size_t n, const std::vector<char>& side) {
  std::vector<VertexId> members;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v]) members.push_back(v);
  }
  return Cut::FromVertices(n, members);
}

bool IsTrivialSide(const std::vector<char>& side) {
  const auto on = std::count(side.begin(), side.end(), 1);
  return on == 0 || on == static_cast<long>(side.size());
}

}  // namespace

std::string GeneratorConfig::ToString() const {
  std::ostringstream out;
  out << "seed=" << seed << " vertices=" << min_vertices << ".."
      << max_vertices << " extra_edge_probability=" << extra_edge_probability
      << " allow_parallel=" << (allow_parallel ? 1 : 0)
      << " weight_bias=" << weight_bias << " max_edges=" << max_edges;
  return out.str();
}

InstanceGenerator::InstanceGenerator(const GeneratorConfig& config)
    : config_(config), rng_(config.seed) {
  if (config.min_vertices < 2 || config.max_vertices < config.min_vertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex range must satisfy 2 <= min <= max");
  }
  CheckProbability(config.extra_edge_probability, "extra edge probability");
  CheckProbability(config.weight_bias, "weight bias");
}

std::uint64_t InstanceGenerator::UniformBelow(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % bound;
}

bool InstanceGenerator::Bernoulli(const Rational& p) {
  return static_cast<std::int64_t>(
             UniformBelow(static_cast<std::uint64_t>(p.den()))) < p.num();
}

WeightedGraph InstanceGenerator::Next() {
  const std::size_t n =
      config_.min_vertices +
      UniformBelow(config_.max_vertices - config_.min_vertices + 1);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[UniformBelow(i + 1)]);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::set<std::pair<VertexId, VertexId>> used;
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId a = order[UniformBelow(i)];
    const VertexId b = order[i];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
    used.insert(pairs.back());
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!Bernoulli(config_.extra_edge_probability)) continue;
      if (!config_.allow_parallel && used.count({u, v})) continue;
      if (config_.max_edges != 0 && pairs.size() >= config_.max_edges) continue;
      pairs.emplace_back(u, v);
      used.insert({u, v});
    }
  }
  for (std::size_t i = pairs.size(); i-- > 1;) {
    std::swap(pairs[i], pairs[UniformBelow(i + 1)]);
  }

  Multigraph g(n);
  std::vector<int> weights;
  for (const auto& [u, v] : pairs) {
    g.AddEdge(u, v);
    weights.push_back(Bernoulli(config_.weight_bias) ? 1 : -1);
  }
  return {std::move(g), SignedWeights(std::move(weights))};
}

WeightedGraph GenerateConnected(const GeneratorConfig& config) {
  return InstanceGenerator(config).Next();
}

std::string DescribeInstance(const Multigraph& g, const SignedWeights* w) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " edges=";
  for (const Edge& e : g.edges()) {
    if (e.id != 0) out << ',';
    out << e.u << '-' << e.v;
    if (w != nullptr) out << ':' << ((*w)[e.id] > 0 ? "+1" : "-1");
  }
  return out.str();
}

void LemmaReport::Print(std::ostream& out) const {
  out << "# report " << name << '\n';
  out << "# instance " << descriptor << '\n';
  for (const auto& [key, value] : header) {
    out << "# " << key << ' ' << value << '\n';
  }
  for (const LemmaViolation& v : violations) {
    out << "FAIL";
    if (v.cut) out << " cut=" << v.cut->ToString();
    out << " expected=" << v.expected << " observed=" << v.observed << '\n';
    std::istringstream lines(v.context);
    std::string line;
    while (std::getline(lines, line)) out << "#   " << line << '\n';
  }
  if (passed()) {
    out << "PASS checks=" << checks_run << '\n';
  } else {
    out << "FAIL checks=" << checks_run << " violations=" << violations.size()
        << '\n';
  }
}

std::string LemmaReport::ToString() const {
  std::ostringstream out;
  Print(out);
  return out.str();
}

LemmaReport Lemma1Check(const GadgetInstance& gi) {
  const auto start = Clock::now();
  const Multigraph& g = gi.gadget.source;
  const SignedWeights& w = gi.source_weights;
  const std::size_t n = g.vertex_count();
  if (n > kLemmaVertexLimit) {
    throw Error(ErrorCode::kGuardExceeded,
                "lemma check enumerates 2^(n-1) cuts; n=" + std::to_string(n) +
                    " exceeds " + std::to_string(kLemmaVertexLimit));
  }
  LemmaReport report;
  report.name = "lemma1";
  report.descriptor = DescribeInstance(g, &w);
  report.header = {{"k", gi.k.ToString()},
                   {"multiplier", std::to_string(gi.gadget.multiplier)},
                   {"alpha", gi.alpha.ToString()}};
  const std::uint64_t total = n < 2 ? 1 : std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const Cut c = Cut::FromMask(n, bits << 1);
    const Rational avg = AverageCutWeight(g, w, c);
    const Rational thick =
        Thickness(gi.gadget.g_prime, gi.tree, LiftCut(gi.gadget, c));
    const bool reaches_k = avg >= gi.k;
    const bool thick_enough = thick > gi.alpha;
    ++report.checks_run;
    if (reaches_k != thick_enough) {
      report.violations.push_back(
          {c, std::string(reaches_k ? "avg>=k" : "avg<k") + "(avg=" +
                  avg.ToString() + ")",
           std::string(thick_enough ? "thickness>alpha" : "thickness<=alpha") +
               "(thickness=" + thick.ToString() + ")",
           ""});
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

LemmaReport Lemma1Check(const Multigraph& g, const SignedWeights& w,
                        const Rational& k, std::size_t multiplier) {
  if (g.vertex_count() > kLemmaVertexLimit) {
    throw Error(ErrorCode::kGuardExceeded,
                "lemma check enumerates 2^(n-1) cuts; n=" +
                    std::to_string(g.vertex_count()) + " exceeds " +
                    std::to_string(kLemmaVertexLimit));
  }
  return Lemma1Check(ReduceMacToTtvc(g, w, k, multiplier));
}

LemmaReport Lemma2Check(const GadgetInstance& gi, std::size_t samples,
                        std::uint64_t seed) {
  const auto start = Clock::now();
  const GadgetGraph& gd = gi.gadget;
  const std::size_t np = gd.g_prime.vertex_count();
  const std::size_t n = gd.source.vertex_count();
  const Rational bound(1, 3);

  LemmaReport report;
  report.name = "lemma2";
  report.descriptor = DescribeInstance(gd.source, &gi.source_weights);
  report.header = {{"multiplier", std::to_string(gd.multiplier)},
                   {"samples", std::to_string(samples)},
                   {"seed", std::to_string(seed)}};

  auto check = [&](const std::vector<char>& side, const char* family) {
    if (IsTrivialSide(side)) return;
    const Cut c = CutOfVertexSet(np, side);
    if (!SplitsAClique(gd, c)) return;
    ++report.checks_run;
    const Rational t = Thickness(gd.g_prime, gi.tree, c);
    if (t >= bound) {
      report.violations.push_back(
          {c, "thickness<1/3", "thickness=" + t.ToString(),
           std::string("family ") + family});
    }
  };

  // Clique-local vertices with an inter-clique edge, ascending.
  std::vector<std::vector<VertexId>> endpoints(n);
  for (const auto& triplet : gd.triplet_of) {
    for (EdgeId id : triplet) {
      const Edge& e = gd.g_prime.edge(id);
      endpoints[gd.OwnerOf(e.u)].push_back(e.u);
      endpoints[gd.OwnerOf(e.v)].push_back(e.v);
    }
  }

  // (a) one vertex peeled off a clique, as a singleton and as its complement
  // within the clique.
  for (VertexId v = 0; v < n; ++v) {
    const VertexRange& r = gd.clique_of[v];
    std::vector<VertexId> peel = endpoints[v];
    peel.push_back(r.start);
    peel.push_back(static_cast<VertexId>(r.start + r.length - 1));
    std::sort(peel.begin(), peel.end());
    peel.erase(std::unique(peel.begin(), peel.end()), peel.end());
    for (VertexId x : peel) {
      std::vector<char> single(np, 0);
      single[x] = 1;
      check(single, "a");
      std::vector<char> rest(np, 0);
      for (std::size_t i = r.start; i < r.start + r.length; ++i) rest[i] = 1;
      rest[x] = 0;
      check(rest, "a");
    }
  }

  // (b) balanced splits of one clique: low half, high half, alternating.
  for (VertexId v = 0; v < n; ++v) {
    const VertexRange& r = gd.clique_of[v];
    std::vector<char> low(np, 0), high(np, 0), alternating(np, 0);
    for (std::size_t i = 0; i < r.length; ++i) {
      (i < r.length / 2 ? low : high)[r.start + i] = 1;
      alternating[r.start + i] = i % 2;
    }
    check(low, "b");
    check(high, "b");
    check(alternating, "b");
  }

  // (c) every clique split in half, alone and on top of each lifted cut.
  {
    std::vector<char> low(np, 0), alternating(np, 0);
    for (VertexId v = 0; v < n; ++v) {
      const VertexRange& r = gd.clique_of[v];
      for (std::size_t i = 0; i < r.length; ++i) {
        low[r.start + i] = i < r.length / 2;
        alternating[r.start + i] = i % 2;
      }
    }
    check(low, "c");
    check(alternating, "c");
    const std::uint64_t total = std::uint64_t{1} << std::min<std::size_t>(n - 1, 6);
    for (std::uint64_t bits = 1; bits < total; ++bits) {
      std::vector<char> side = low;
      for (VertexId v = 1; v < n; ++v) {
        if (!((bits >> (v - 1)) & 1U)) continue;
        const VertexRange& r = gd.clique_of[v];
        for (std::size_t i = r.start; i < r.start + r.length; ++i) side[i] ^= 1;
      }
      check(side, "c");
    }
  }

  std::mt19937_64 rng(seed);
  // (d) uniform random subsets of V(G'), redrawn until one splits a clique.
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<char> side(np, 0);
    while (true) {
      for (std::size_t x = 0; x < np; x += 64) {
        const std::uint64_t bits = rng();
        for (std::size_t b = 0; b < 64 && x + b < np; ++b) {
          side[x + b] = (bits >> b) & 1U;
        }
      }
      if (!IsTrivialSide(side) &&
          SplitsAClique(gd, CutOfVertexSet(np, side))) {
        break;
      }
    }
    check(side, "d");
  }

  // (e) lifted cuts with 1..3 vertices moved across.
  {
    const std::uint64_t total = std::uint64_t{1} << std::min<std::size_t>(n - 1, 6);
    for (std::uint64_t bits = 1; bits < total; ++bits) {
      const Cut lifted = LiftCut(gd, Cut::FromMask(n, bits << 1));
      for (int moved = 1; moved <= 3; ++moved) {
        std::vector<char> side(np, 0);
        for (VertexId x : lifted.Vertices()) side[x] = 1;
        std::set<std::size_t> picked;
        while (picked.size() < static_cast<std::size_t>(moved)) {
          picked.insert(static_cast<std::size_t>(rng() % np));
        }
        for (std::size_t x : picked) side[x] ^= 1;
        check(side, "e");
      }
    }
  }

  report.elapsed = Clock::now() - start;
  return report;
}

LemmaReport EndToEndCheck(const Multigraph& g, std::int64_t k,
                          std::size_t multiplier) {
  const auto start = Clock::now();
  if (g.vertex_count() > kEndToEndVertexLimit) {
    throw Error(ErrorCode::kGuardExceeded,
                "end-to-end check supports at most " +
                    std::to_string(kEndToEndVertexLimit) + " vertices");
  }
  LemmaReport report;
  report.name = "end-to-end";
  report.descriptor = DescribeInstance(g, nullptr);
  report.header = {{"k", std::to_string(k)},
                   {"multiplier", std::to_string(multiplier)}};

  const MacOracle mac = GadgetMacOracle(multiplier);
  const MacoOracle maco = [&mac](const Multigraph& h,
                                 const SignedWeights& w) -> std::optional<Cut> {
    return Alg2Maco(h, w, mac).cut;
  };
  const bool expected = MaxCutBruteForce(g).value >= k;
  ++report.checks_run;
  try {
    const MaxCutReduction chain = Alg1MaxCut(g, k, maco);
    report.header.emplace_back("answer", chain.answer ? "YES" : "NO");
    if (chain.answer != expected) {
      std::ostringstream transcript;
      chain.transcript.Print(transcript);
      report.violations.push_back({std::nullopt, expected ? "YES" : "NO",
                                   chain.answer ? "YES" : "NO",
                                   transcript.str()});
    }
  } catch (const ReductionError& e) {
    report.header.emplace_back("answer", "error");
    std::ostringstream transcript;
    e.transcript().Print(transcript);
    report.violations.push_back({std::nullopt, expected ? "YES" : "NO",
                                 std::string("error:") + e.what(),
                                 transcript.str()});
  }
  report.elapsed = Clock::now() - start;
  return report;
}

LemmaReport RunFuzzCampaign(const FuzzConfig& config) {
  const auto start = Clock::now();
  GeneratorConfig gen;
  gen.seed = config.seed;
  gen.min_vertices = 2;
  gen.max_vertices = config.max_vertices;
  gen.extra_edge_probability = Rational(1, 2);
  gen.allow_parallel = false;
  gen.max_edges = config.max_edges;
  InstanceGenerator generator(gen);

  LemmaReport report;
  report.name = "fuzz";
  report.descriptor = "count=" + std::to_string(config.count);
  report.header = {{"config", gen.ToString()},
                   {"multiplier", std::to_string(config.multiplier)},
                   {"thresholds", config.all_thresholds ? "all" : "decisive"}};
  for (std::size_t i = 0; i < config.count; ++i) {
    const WeightedGraph inst = generator.Next();
    std::vector<std::int64_t> ks;
    if (config.all_thresholds) {
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(inst.graph.edge_count()) + 1; ++k) {
        ks.push_back(k);
      }
    } else {
      const std::int64_t best = MaxCutBruteForce(inst.graph).value;
      ks = {best, best + 1};
    }
    for (std::int64_t k : ks) {
      const LemmaReport one = EndToEndCheck(inst.graph, k, config.multiplier);
      report.checks_run += one.checks_run;
      for (LemmaViolation v : one.violations) {
        v.context = "instance " + std::to_string(i) + " k=" +
                    std::to_string(k) + " " + one.descriptor + "\n" + v.context;
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace thintree
