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

#include "thintree/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "thintree/errors.hpp"

namespace thintree {

namespace {

// Splits a record line into whitespace-separated tokens.
std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

class RecordReader {
 public:
  RecordReader(std::istream& in, const std::string& source)
      : in_(in), source_(source) {}

  // Next non-blank, non-comment record; empty at end of input.
  std::vector<std::string_view> Next() {
    while (std::getline(in_, line_)) {
      ++line_no_;
      auto tokens = Tokenize(line_);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return {};
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(source_, line_no_, message);
  }
  // Reported against the last line of the input.
  [[noreturn]] void FailAtEnd(const std::string& message) const {
    throw ParseError(source_, line_no_, "unexpected end of input: " + message);
  }

  long long Integer(std::string_view token, const char* what) const {
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Fail(std::string("expected integer ") + what + ", got '" +
           std::string(token) + "'");
    }
    return value;
  }

  long long NonNegative(std::string_view token, const char* what) const {
    const long long value = Integer(token, what);
    if (value < 0) Fail(std::string(what) + " must be non-negative");
    return value;
  }

 private:
  std::istream& in_;
  const std::string& source_;
  std::string line_;
  int line_no_ = 0;
};

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open file");
  return in;
}

}  // namespace

WeightedGraph ParseGraph(std::istream& in, const std::string& source) {
  RecordReader reader(in, source);
  auto header = reader.Next();
  if (header.empty()) reader.FailAtEnd("missing 'p <n> <m>' header");
  if (header[0] != "p" || header.size() != 3) {
    reader.Fail("expected header 'p <n> <m>'");
  }
  const long long n = reader.NonNegative(header[1], "vertex count");
  const long long m = reader.NonNegative(header[2], "edge count");
  if (n > std::numeric_limits<VertexId>::max() ||
      m > std::numeric_limits<EdgeId>::max()) {
    reader.Fail("graph too large");
  }

  Multigraph g(static_cast<std::size_t>(n));
  g.ReserveEdges(static_cast<std::size_t>(m));
  std::vector<int> weights;
  weights.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    auto rec = reader.Next();
    if (rec.empty()) {
      reader.FailAtEnd("expected " + std::to_string(m) + " edge lines, found " +
                       std::to_string(i));
    }
    if (rec[0] != "e" || (rec.size() != 3 && rec.size() != 4)) {
      reader.Fail("expected edge line 'e <u> <v> [<w>]'");
    }
    const long long u = reader.NonNegative(rec[1], "endpoint");
    const long long v = reader.NonNegative(rec[2], "endpoint");
    if (u >= n || v >= n) reader.Fail("endpoint out of range");
    if (u == v) reader.Fail("self-loop on vertex " + std::to_string(u));
    int w = 1;
    if (rec.size() == 4) {
      const long long parsed = reader.Integer(rec[3], "weight");
      if (parsed != 1 && parsed != -1) reader.Fail("weight must be -1 or 1");
      w = static_cast<int>(parsed);
    }
    g.AddEdge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    weights.push_back(w);
  }
  if (!reader.Next().empty()) {
    reader.Fail("unexpected record after " + std::to_string(m) + " edges");
  }
  return {std::move(g), SignedWeights(std::move(weights))};
}

WeightedGraph ReadGraphFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseGraph(in, path);
}

std::vector<EdgeId> ParseEdgeSubset(std::istream& in,
                                    const std::string& source) {
  RecordReader reader(in, source);
  auto header = reader.Next();
  if (header.empty()) reader.FailAtEnd("missing 't <k>' header");
  if (header[0] != "t" || header.size() != 2) {
    reader.Fail("expected header 't <k>'");
  }
  const long long k = reader.NonNegative(header[1], "edge count");
  std::vector<EdgeId> ids;
  for (long long i = 0; i < k; ++i) {
    auto rec = reader.Next();
    if (rec.empty()) {
      reader.FailAtEnd("expected " + std::to_string(k) + " 'i' lines, found " +
                       std::to_string(i));
    }
    if (rec[0] != "i" || rec.size() != 2) {
      reader.Fail("expected 'i <edge_id>'");
    }
    const long long id = reader.NonNegative(rec[1], "edge id");
    if (id > std::numeric_limits<EdgeId>::max()) reader.Fail("edge id too large");
    ids.push_back(static_cast<EdgeId>(id));
  }
  if (!reader.Next().empty()) {
    reader.Fail("unexpected record after " + std::to_string(k) + " edge ids");
  }
  return ids;
}

std::vector<EdgeId> ReadEdgeSubsetFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseEdgeSubset(in, path);
}

void WriteGraph(std::ostream& out, const Multigraph& g,
                const SignedWeights* weights) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    if (weights != nullptr) out << ' ' << (*weights)[e.id];
    out << '\n';
  }
}

void WriteEdgeSubset(std::ostream& out, std::span<const EdgeId> edges) {
  out << "t " << edges.size() << '\n';
  for (EdgeId e : edges) out << "i " << e << '\n';
}

}  // namespace thintree
