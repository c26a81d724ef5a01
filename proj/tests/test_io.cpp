#include <doctest.h>

#include <string>

#include "treecodes/enumeration.hpp"
#include "treecodes/errors.hpp"
#include "treecodes/graph.hpp"
#include "treecodes/io.hpp"

using treecodes::from_edge_list;
using treecodes::Graph;
using treecodes::graph6_decode;
using treecodes::graph6_encode;
using treecodes::InvalidGraph;
using treecodes::ParseError;
using treecodes::to_dot;
using treecodes::to_edge_list;
using treecodes::VertexSet;

TEST_CASE("edge list with explicit header") {
  Graph g = from_edge_list("5 3\n0 1\n1 2\n3 4\n");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 4));
}

TEST_CASE("edge list without header infers the order") {
  Graph g = from_edge_list("0 1\n1 2\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  // An isolated top vertex can only come from a header, so inference uses
  // the largest endpoint.
  Graph h = from_edge_list("2 1\n0 1\n");  // header: n=2 m=1
  CHECK(h.order() == 2);
  CHECK(h.edge_count() == 1);
}

TEST_CASE("edge list ignores comments and blank lines") {
  Graph g = from_edge_list("# a triangle-free graph\n\n0 1\n# middle comment\n1 2\n\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list rejects malformed input") {
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("a b\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("0\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list(""), ParseError);
  CHECK_THROWS_AS(from_edge_list("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("0 1\n0 1\n"), InvalidGraph);   // duplicate edge
  CHECK_THROWS_AS(from_edge_list("3 1\n0 0\n"), InvalidGraph);   // loop
  CHECK_THROWS_AS(from_edge_list("2 1\n-1 1\n"), InvalidGraph);  // negative endpoint
  CHECK_THROWS_AS(from_edge_list("0 300\n"), InvalidGraph);      // order beyond the cap
}

TEST_CASE("edge list round trip") {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 2);
  std::string text = to_edge_list(g);
  CHECK(text == "4 2\n0 2\n2 3\n");
  Graph back = from_edge_list(text);
  CHECK(back.order() == 4);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("graph6 encodes known small graphs") {
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  CHECK(graph6_encode(k3) == "Bw");

  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(graph6_encode(k4) == "C~");

  Graph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK(graph6_encode(claw) == "Cs");
}

TEST_CASE("graph6 decode tolerates prefix and whitespace") {
  Graph g = graph6_decode(">>graph6<<Bw\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("C"), ParseError);     // truncated
  CHECK_THROWS_AS(graph6_decode("B\x01"), ParseError);  // byte out of range
}

TEST_CASE("graph6 round trips every small tree and larger orders") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : treecodes::free_trees(n)) {
      Graph back = graph6_decode(graph6_encode(t));
      CHECK(back.order() == t.order());
      CHECK(back.edges() == t.edges());
    }
  // n > 62 exercises the long-form order encoding.
  Graph big(100);
  for (int i = 0; i + 1 < 100; ++i) big.add_edge(i, i + 1);
  Graph back = graph6_decode(graph6_encode(big));
  CHECK(back.order() == 100);
  CHECK(back.edges() == big.edges());
}

TEST_CASE("dot export highlights the code") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  std::string plain = to_dot(g);
  CHECK(plain.find("graph") != std::string::npos);
  CHECK(plain.find("0 -- 1") != std::string::npos);
  CHECK(plain.find("1 -- 2") != std::string::npos);
  CHECK(plain.find("filled") == std::string::npos);

  std::string coded = to_dot(g, VertexSet::of(3, {0, 2}));
  CHECK(coded.find("filled") != std::string::npos);
}
