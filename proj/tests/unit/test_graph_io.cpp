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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "thintree/errors.hpp"
#include "thintree/harness.hpp"

namespace thintree {
namespace {

WeightedGraph Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in, "mem");
}

std::string ParseFailure(const std::string& text) {
  try {
    Parse(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "parse succeeded: " << text;
  return "";
}

std::string DataPath(const std::string& name) {
  const char* dir = std::getenv("THINTREE_TEST_DATA");
  return std::string(dir ? dir : "data") + "/" + name;
}

TEST(GraphIoTest, ParsesWeightsCommentsAndBlankLines) {
  const WeightedGraph wg = Parse(
      "# triangle\n"
      "p 3 3\n"
      "\n"
      "e 0 1 1\n"
      "e 1 2 1\n"
      "  # comment\n"
      "e 0 2 -1\n");
  EXPECT_EQ(wg.graph.vertex_count(), 3u);
  EXPECT_EQ(wg.graph.edge_count(), 3u);
  EXPECT_EQ(wg.graph.edge(2).u, 0u);
  EXPECT_EQ(wg.graph.edge(2).v, 2u);
  EXPECT_EQ(wg.weights, SignedWeights({1, 1, -1}));
}

TEST(GraphIoTest, MissingWeightDefaultsToPlusOne) {
  const WeightedGraph wg = Parse("p 2 2\ne 0 1\ne 1 0\n");
  EXPECT_EQ(wg.weights, SignedWeights({1, 1}));
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  EXPECT_NE(ParseFailure("p 2 1\ne 0 1 3\n").find("mem:2:"), std::string::npos);
  EXPECT_NE(ParseFailure("p 2 1\ne 0 5\n").find("mem:2:"), std::string::npos);
  EXPECT_NE(ParseFailure("p 2 1\ne 1 1\n").find("mem:2:"), std::string::npos);
  EXPECT_NE(ParseFailure("e 0 1\n").find("mem:1:"), std::string::npos);
  EXPECT_NE(ParseFailure("p 2 1\ne 0 1\ne 0 1\n").find("mem:3:"),
            std::string::npos);
  EXPECT_NE(ParseFailure("p 3 2\n# only one\ne 0 1\n").find("mem:3:"),
            std::string::npos);
  EXPECT_NE(ParseFailure("p 2 1\nx 0 1\n").find("mem:2:"), std::string::npos);
  EXPECT_NE(ParseFailure("p 2 1\ne 0 1 1 9\n").find("mem:2:"),
            std::string::npos);
  EXPECT_NE(ParseFailure("p 2 x\n").find("mem:1:"), std::string::npos);
  ParseFailure("");
}

TEST(GraphIoTest, ReadsFixtureFiles) {
  const WeightedGraph c4 = ReadGraphFile(DataPath("c4.graph"));
  EXPECT_EQ(c4.graph.vertex_count(), 4u);
  EXPECT_EQ(c4.graph.edge_count(), 4u);
  EXPECT_EQ(ReadEdgeSubsetFile(DataPath("c4_path.tree")),
            (std::vector<EdgeId>{0, 1, 2}));
}

TEST(GraphIoTest, BadFixturesReportFileAndLine) {
  try {
    ReadGraphFile(DataPath("bad_weight.graph"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("bad_weight.graph:3:"),
              std::string::npos)
        << e.what();
  }
  EXPECT_THROW(ReadGraphFile(DataPath("bad_count.graph")), Error);
}

TEST(GraphIoTest, MissingFileIsIoError) {
  try {
    ReadGraphFile(DataPath("does_not_exist.graph"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(GraphIoTest, EdgeSubsetParsing) {
  std::istringstream ok("t 2\n# x\ni 4\ni 1\n");
  EXPECT_EQ(ParseEdgeSubset(ok, "t"), (std::vector<EdgeId>{4, 1}));
  std::istringstream short_file("t 2\ni 4\n");
  EXPECT_THROW(ParseEdgeSubset(short_file, "t"), Error);
  std::istringstream bad("t 1\ni -1\n");
  EXPECT_THROW(ParseEdgeSubset(bad, "t"), Error);
}

TEST(GraphIoTest, RoundTripOverGeneratedCorpus) {
  GeneratorConfig config;
  config.seed = 21;
  config.max_vertices = 9;
  config.allow_parallel = true;
  InstanceGenerator gen(config);
  for (int i = 0; i < 50; ++i) {
    const WeightedGraph wg = gen.Next();
    std::ostringstream out;
    WriteGraph(out, wg.graph, &wg.weights);
    const WeightedGraph back = Parse(out.str());
    EXPECT_EQ(back.graph, wg.graph);
    EXPECT_EQ(back.weights, wg.weights);
    std::ostringstream again;
    WriteGraph(again, back.graph, &back.weights);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(GraphIoTest, EdgeSubsetRoundTrip) {
  const std::vector<EdgeId> ids = {0, 7, 3};
  std::ostringstream out;
  WriteEdgeSubset(out, ids);
  std::istringstream in(out.str());
  EXPECT_EQ(ParseEdgeSubset(in, "t"), ids);
}

}  // namespace
}  // namespace thintree
