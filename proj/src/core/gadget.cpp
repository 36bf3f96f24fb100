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
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "thintree/errors.hpp"
#include "thintree/graph_io.hpp"
#include "thintree/reductions.hpp"

namespace thintree {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId Find(VertexId x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // False if a and b were already connected.
  bool Union(VertexId a, VertexId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

EdgeId GadgetGraph::CliqueEdgeId(VertexId source_vertex, std::size_t i,
                                 std::size_t j) const {
  const std::size_t s = clique_size;
  const std::size_t local = i * s - i * (i + 1) / 2 + (j - i - 1);
  return static_cast<EdgeId>(source_vertex * clique_edges_per_clique() + local);
}

GadgetGraph BuildGadgetGraph(const Multigraph& g, std::size_t multiplier) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m == 0) {
    throw Error(ErrorCode::kInvalidInstance, "gadget needs at least one edge");
  }
  if (multiplier == 0) {
    throw Error(ErrorCode::kInvalidArgument, "multiplier must be positive");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kInvalidInstance, "gadget source is not connected");
  }

  GadgetGraph out;
  out.source = g;
  out.multiplier = multiplier;
  out.clique_size = multiplier * m;
  const std::size_t s = out.clique_size;
  // Each triplet consumes three fresh vertices at both ends.
  if (3 * g.MaxDegree() > s) {
    throw Error(ErrorCode::kConstruction,
                "clique size " + std::to_string(s) +
                    " too small for 3 fresh endpoints per incident edge (max "
                    "degree " + std::to_string(g.MaxDegree()) + ")");
  }
  const long double total_edges =
      static_cast<long double>(n) * s * (s - 1) / 2 + 3.0L * m;
  if (static_cast<long double>(n) * s >= std::numeric_limits<VertexId>::max() ||
      total_edges >= std::numeric_limits<EdgeId>::max()) {
    throw Error(ErrorCode::kConstruction, "gadget graph too large");
  }

  out.g_prime = Multigraph(n * s);
  out.g_prime.ReserveEdges(n * out.clique_edges_per_clique() + 3 * m);
  out.clique_of.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto base = static_cast<VertexId>(v * s);
    out.clique_of[v] = {base, s};
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        out.g_prime.AddEdge(static_cast<VertexId>(base + i),
                            static_cast<VertexId>(base + j));
      }
    }
  }
  std::vector<std::size_t> next_free(n, 0);
  out.triplet_of.resize(m);
  for (const Edge& e : g.edges()) {
    for (std::size_t t = 0; t < 3; ++t) {
      const auto x = static_cast<VertexId>(e.u * s + next_free[e.u]++);
      const auto y = static_cast<VertexId>(e.v * s + next_free[e.v]++);
      out.triplet_of[e.id][t] = out.g_prime.AddEdge(x, y);
    }
  }
  return out;
}

SpanningTree BuildGadgetTree(const GadgetGraph& gadget,
                             const SignedWeights& w) {
  CheckWeights(gadget.source, w);
  const Multigraph& gp = gadget.g_prime;
  UnionFind uf(gp.vertex_count());
  std::vector<EdgeId> chosen;
  chosen.reserve(gp.vertex_count());

  for (EdgeId e = 0; e < gadget.source.edge_count(); ++e) {
    const int take = w[e] + 2;
    for (int t = 0; t < take; ++t) {
      const EdgeId id = gadget.triplet_of[e][t];
      const Edge& edge = gp.edge(id);
      if (!uf.Union(edge.u, edge.v)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "cycle made only of inter-clique edges at edge " +
                        std::to_string(id));
      }
      chosen.push_back(id);
    }
  }
  // Clique paths; a path edge that closes a cycle is the clique-internal
  // edge removed from that cycle.
  for (VertexId v = 0; v < gadget.source.vertex_count(); ++v) {
    for (std::size_t i = 0; i + 1 < gadget.clique_size; ++i) {
      const EdgeId id = gadget.CliqueEdgeId(v, i, i + 1);
      const Edge& edge = gp.edge(id);
      if (uf.Union(edge.u, edge.v)) chosen.push_back(id);
    }
  }
  if (chosen.size() + 1 != gp.vertex_count()) {
    throw Error(ErrorCode::kInvalidInstance,
                "gadget tree does not span; is the source graph connected?");
  }
  return SpanningTree(gp, std::move(chosen));
}

Rational ComputeAlpha(const Rational& k, std::size_t edge_count) {
  if (k < Rational(-1)) {
    throw Error(ErrorCode::kDomain,
                "threshold " + k.ToString() + " is below -1");
  }
  if (edge_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "edge count must be positive");
  }
  // Threshold (k + 2) / 3 = a / b with a > 0.
  const __int128 a = static_cast<__int128>(k.num()) + 2 * static_cast<__int128>(k.den());
  const __int128 b = 3 * static_cast<__int128>(k.den());
  __int128 best_p = 0;
  __int128 best_q = 1;
  for (std::size_t qi = 1; qi <= edge_count; ++qi) {
    const auto q = static_cast<__int128>(qi);
    // Largest p with p * b < q * a.
    __int128 p = (q * a - 1) / b;
    p = std::clamp<__int128>(p, 0, q);
    if (p * best_q > best_p * q) {
      best_p = p;
      best_q = q;
    }
  }
  return Rational(static_cast<std::int64_t>(best_p),
                  static_cast<std::int64_t>(best_q));
}

GadgetInstance ReduceMacToTtvc(const Multigraph& g, const SignedWeights& w,
                               const Rational& k, std::size_t multiplier) {
  CheckWeights(g, w);
  if (k < Rational(-1)) {
    throw Error(ErrorCode::kDomain,
                "threshold " + k.ToString() + " is below -1");
  }
  GadgetInstance gi;
  gi.gadget = BuildGadgetGraph(g, multiplier);
  gi.tree = BuildGadgetTree(gi.gadget, w);
  gi.alpha = ComputeAlpha(k, gi.gadget.g_prime.edge_count());
  gi.source_weights = w;
  gi.k = k;
  return gi;
}

Cut LiftCut(const GadgetGraph& gadget, const Cut& c) {
  CheckCut(gadget.source, c);
  const std::size_t np = gadget.g_prime.vertex_count();
  std::vector<std::uint64_t> words((np + 63) / 64, 0);
  for (VertexId v : c.Vertices()) {
    const VertexRange& r = gadget.clique_of[v];
    for (std::size_t i = r.start; i < r.start + r.length; ++i) {
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  return *Cut::TryFromBits(np, std::move(words));
}

bool SplitsAClique(const GadgetGraph& gadget, const Cut& c_prime) {
  CheckCut(gadget.g_prime, c_prime);
  for (const VertexRange& r : gadget.clique_of) {
    const bool side = c_prime.Contains(r.start);
    for (std::size_t i = r.start + 1; i < r.start + r.length; ++i) {
      if (c_prime.Contains(static_cast<VertexId>(i)) != side) return true;
    }
  }
  return false;
}

Cut ProjectCut(const GadgetGraph& gadget, const Cut& c_prime) {
  if (SplitsAClique(gadget, c_prime)) {
    throw Error(ErrorCode::kNotCliqueRespecting,
                "cut splits a clique of the gadget graph");
  }
  std::vector<VertexId> side;
  for (VertexId v = 0; v < gadget.clique_of.size(); ++v) {
    if (c_prime.Contains(gadget.clique_of[v].start)) side.push_back(v);
  }
  return Cut::FromVertices(gadget.source.vertex_count(), side);
}

TtvcAnswer TtvcCliqueRespectingOracle(const GadgetInstance& gi,
                                      std::size_t vertex_limit) {
  const Multigraph& g = gi.gadget.source;
  TtvcAnswer answer;
  answer.soundness_warning = !gi.sound();
  const std::size_t n = g.vertex_count();
  if (n < 2) return answer;
  const std::size_t limit = std::min(vertex_limit, kMaxVertexLimit);
  if (n > limit) {
    throw Error(ErrorCode::kGuardExceeded,
                "clique-respecting oracle: source graph has " +
                    std::to_string(n) + " vertices, limit " +
                    std::to_string(limit));
  }
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::optional<Cut> best_cut;
  std::optional<Cut> best_source;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Cut source_cut = Cut::FromMask(n, bits << 1);
    Cut lifted = LiftCut(gi.gadget, source_cut);
    Rational t = Thickness(gi.gadget.g_prime, gi.tree, lifted);
    if (!best_cut || t > answer.max_lifted_thickness) {
      answer.max_lifted_thickness = t;
      best_cut = std::move(lifted);
      best_source = std::move(source_cut);
    }
  }
  answer.yes = answer.max_lifted_thickness > gi.alpha;
  if (answer.yes) {
    answer.certificate = std::move(best_cut);
    answer.source_cut = std::move(best_source);
  }
  return answer;
}

MacOracle GadgetMacOracle(std::size_t multiplier) {
  return [multiplier](const Multigraph& g, const SignedWeights& w,
                      const Rational& k) {
    return TtvcCliqueRespectingOracle(ReduceMacToTtvc(g, w, k, multiplier)).yes;
  };
}

void WriteGadgetMap(std::ostream& out, const GadgetInstance& gi) {
  const GadgetGraph& gd = gi.gadget;
  for (VertexId v = 0; v < gd.clique_of.size(); ++v) {
    out << "c " << v << ' ' << gd.clique_of[v].start << ' '
        << gd.clique_of[v].length << '\n';
  }
  for (EdgeId e = 0; e < gd.triplet_of.size(); ++e) {
    const auto& d = gd.triplet_of[e];
    out << "d " << e << ' ' << d[0] << ' ' << d[1] << ' ' << d[2] << '\n';
  }
  out << "a " << gi.alpha.num() << ' ' << gi.alpha.den() << '\n';
}

GadgetMap ParseGadgetMap(std::istream& in, const std::string& source) {
  GadgetMap map;
  bool have_alpha = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(source, line_no, msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    std::vector<long long> fields;
    long long x = 0;
    while (ss >> x) fields.push_back(x);
    if (!ss.eof()) fail("non-integer field");
    for (long long f : fields) {
      if (tag != "a" && f < 0) fail("negative field");
    }
    if (tag == "c") {
      if (fields.size() != 3) fail("expected 'c <vertex> <start> <len>'");
      if (fields[0] != static_cast<long long>(map.clique_of.size())) {
        fail("clique records out of order");
      }
      map.clique_of.push_back({static_cast<VertexId>(fields[1]),
                               static_cast<std::size_t>(fields[2])});
    } else if (tag == "d") {
      if (fields.size() != 4) fail("expected 'd <edge> <e1> <e2> <e3>'");
      if (fields[0] != static_cast<long long>(map.triplet_of.size())) {
        fail("triplet records out of order");
      }
      map.triplet_of.push_back({static_cast<EdgeId>(fields[1]),
                                static_cast<EdgeId>(fields[2]),
                                static_cast<EdgeId>(fields[3])});
    } else if (tag == "a") {
      if (fields.size() != 2 || fields[1] <= 0) fail("expected 'a <p> <q>'");
      if (have_alpha) fail("duplicate alpha record");
      map.alpha = Rational(fields[0], fields[1]);
      have_alpha = true;
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!have_alpha) throw ParseError(source, 0, "missing alpha record");
  return map;
}

void WriteGadgetFiles(const std::string& dir, const GadgetInstance& gi) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  }
  auto open = [&](const char* name) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    return out;
  };
  {
    auto out = open("gadget.graph");
    WriteGraph(out, gi.gadget.g_prime, nullptr);
  }
  {
    auto out = open("gadget.tree");
    WriteEdgeSubset(out, gi.tree.edge_ids());
  }
  {
    auto out = open("gadget.map");
    WriteGadgetMap(out, gi);
    if (!out) throw Error(ErrorCode::kIo, "write failed in " + dir);
  }
}

}  // namespace thintree
