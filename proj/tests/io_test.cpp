// Copyright 2026 The twincsp Authors
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

#include <gtest/gtest.h>

#include "twincsp/csp.hpp"
#include "twincsp/io.hpp"

namespace twincsp {
namespace {

TEST(EdgeListTest, TabsSpacesCommentsAndWeights) {
  const Graph g = parse_edge_list(
      "# header\n"
      "New Zealand\tFiji\t12\n"
      "\n"
      "a b\n"
      "b   c  # trailing\n"
      "loner\n");
  EXPECT_EQ(g.names(), (std::vector<std::string>{"New Zealand", "Fiji", "a", "b", "c", "loner"}));
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.adjacent(g.at("a"), g.at("b")));
  EXPECT_EQ(g.degree(g.at("loner")), 0u);
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(parse_edge_list("a\ta\n"), InputError);
  EXPECT_THROW(parse_edge_list("a\tb\tc\td\n"), InputError);
  try {
    parse_edge_list("a\tb\n\nx\tx\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(read_file("/nonexistent/twincsp/file.tsv"), InputError);
}

TEST(PartitionTest, NamesAndIntegers) {
  const Graph g = parse_edge_list("x\ty\ny\tz\n");
  EXPECT_EQ(parse_partition("x\tcore\ny\ts\nz\tperiphery\n", g),
            (std::vector<int>{kCore, kSemiperiphery, kPeriphery}));
  EXPECT_EQ(parse_partition("z 7\nx 0\ny 3\n", g), (std::vector<int>{0, 3, 7}));
}

TEST(PartitionTest, Errors) {
  const Graph g = parse_edge_list("x\ty\n");
  EXPECT_THROW(parse_partition("x\tcore\n", g), InputError);
  EXPECT_THROW(parse_partition("x\tcore\ny\tcore\nx\tp\n", g), InputError);
  EXPECT_THROW(parse_partition("x\tcore\nw\tcore\n", g), InputError);
  EXPECT_THROW(parse_partition("x\tcore\ny\t-1\n", g), InputError);
  EXPECT_THROW(parse_partition("x\tcore\ny\n", g), InputError);
}

TEST(VolumeTest, Suffixes) {
  EXPECT_EQ(parse_volume("75M"), 75'000);
  EXPECT_EQ(parse_volume("125m"), 125'000);
  EXPECT_EQ(parse_volume("8B"), 8'000'000);
  EXPECT_EQ(parse_volume("2.5k"), 3);
  EXPECT_EQ(parse_volume("20366"), 20'366);
  EXPECT_EQ(parse_volume("0.5M"), 500);
  for (const char* bad : {"", "M", "-3", "7X", "1e"}) EXPECT_THROW(parse_volume(bad), InputError) << bad;
}

TEST(DotTest, ColoursAndQuoting) {
  const Graph g = parse_edge_list("Hong Kong\tJapan\nJapan\tsay \"hi\"\n");
  const std::string dot = to_dot(g, {kCore, kSemiperiphery, kPeriphery}, "q");
  EXPECT_EQ(dot,
            "graph \"q\" {\n"
            "  node [shape=circle, style=filled, fillcolor=white];\n"
            "  \"Hong Kong\" [fillcolor=black, fontcolor=white];\n"
            "  \"Japan\" [fillcolor=grey];\n"
            "  \"say \\\"hi\\\"\" [fillcolor=white];\n"
            "  \"Hong Kong\" -- \"Japan\";\n"
            "  \"Japan\" -- \"say \\\"hi\\\"\";\n"
            "}\n");
  EXPECT_EQ(to_dot(Graph(2, {{0, 1}})),
            "graph \"G\" {\n"
            "  node [shape=circle, style=filled, fillcolor=white];\n"
            "  \"0\";\n"
            "  \"1\";\n"
            "  \"0\" -- \"1\";\n"
            "}\n");
}

}  // namespace
}  // namespace twincsp
