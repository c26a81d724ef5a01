#include <doctest.h>

#include <vector>

#include "treecodes/codes.hpp"
#include "treecodes/constructive.hpp"
#include "treecodes/enumeration.hpp"
#include "treecodes/graph.hpp"
#include "treecodes/solvers.hpp"

using namespace treecodes;

namespace {

Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("solver matches the exhaustive oracle on every tree up to ten vertices") {
  for (int n = 3; n <= 10; ++n) {
    for (const Graph& t : free_trees(n)) {
      CodeCertificate oracle = min_identifying_code_exhaustive(t);
      SolveResult solved = min_identifying_code(t);
      REQUIRE_FALSE(solved.budget_exceeded);
      CHECK(solved.optimum == oracle.size);
      CHECK(solved.witness.valid);
      CHECK(solved.witness.size == solved.optimum);
      CHECK(certify(t, solved.witness.code).valid);
      // With lex-min post-processing the witness is the numerically
      // smallest minimum code, which is exactly what the oracle returns.
      CHECK(solved.witness.code == oracle.code);
    }
  }
}

TEST_CASE("path laws: identifying code size and domination number") {
  CHECK(gamma_id_path(1) == 1);
  CHECK_THROWS_AS(gamma_id_path(2), DomainError);
  CHECK_THROWS_AS(gamma_id_path(0), DomainError);
  CHECK_THROWS_AS(gamma_path(0), DomainError);

  for (int n = 3; n <= 20; ++n) {
    CHECK(gamma_id_path(n) == n / 2 + 1);
    SolveResult solved = min_identifying_code(make_path(n));
    CHECK(solved.optimum == gamma_id_path(n));
  }

  for (int n = 1; n <= 20; ++n) {
    CHECK(gamma_path(n) == (n + 2) / 3);
    DominationResult dp = min_dominating_set_tree(make_path(n));
    CHECK(dp.size == gamma_path(n));
    if (n <= 16) CHECK(min_dominating_set_exact(make_path(n)).size == gamma_path(n));
  }
}

TEST_CASE("domination DP matches exhaustive search on every tree up to twelve vertices") {
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& t : free_trees(n)) {
      DominationResult dp = min_dominating_set_tree(t);
      DominationResult exact = min_dominating_set_exact(t);
      CHECK(dp.size == exact.size);
      CHECK(dp.witness.size() == dp.size);
      // The DP witness must itself dominate.
      for (int v = 0; v < n; ++v) CHECK_FALSE((t.closed_neighborhood(v) & dp.witness).empty());
    }
  }
}

TEST_CASE("domination guards") {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK_THROWS_AS(min_dominating_set_tree(triangle), NotATree);
  CHECK(min_dominating_set_exact(triangle).size == 1);
  CHECK_THROWS_AS(min_dominating_set_exact(Graph(21)), DomainError);
}

TEST_CASE("witnesses are reproducible lexicographic minima") {
  SolveResult p7 = min_identifying_code(make_path(7));
  CHECK(p7.optimum == 4);
  CHECK(p7.witness.code == VertexSet::of(7, {0, 2, 4, 6}));

  SolveOptions raw;
  raw.lex_min_witness = false;
  SolveResult p7_raw = min_identifying_code(make_path(7), raw);
  CHECK(p7_raw.optimum == 4);
  CHECK(p7_raw.witness.valid);
}

TEST_CASE("twin seeding changes the work, not the answer") {
  SolveOptions unseeded;
  unseeded.seed_forced_and_twins = false;
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& t : free_trees(n)) {
      SolveResult with = min_identifying_code(t);
      SolveResult without = min_identifying_code(t, unseeded);
      CHECK(with.optimum == without.optimum);
      CHECK(without.witness.valid);
    }
  }
}

TEST_CASE("a starved node budget degrades to a certified upper bound") {
  SolveOptions starved;
  starved.node_budget = 1;
  Graph t = two_corona(4).graph;  // 12 vertices, enough to need real search
  SolveResult res = min_identifying_code(t, starved);
  CHECK(res.budget_exceeded);
  CHECK(res.witness.valid);
  CHECK(res.optimum == res.witness.size);
  CHECK(res.optimum >= min_identifying_code(t).optimum);
}

TEST_CASE("bounded search separates feasible from infeasible sizes") {
  Graph z = graph_z().graph;
  BoundedSearchResult at8 = bounded_code_search(z, 8);
  CHECK(at8.found);
  CHECK(at8.code.size() <= 8);
  CHECK(certify(z, at8.code).valid);

  BoundedSearchResult at7 = bounded_code_search(z, 7);
  CHECK_FALSE(at7.found);
  CHECK(at7.complete);

  // A generous budget always succeeds on an identifiable graph.
  BoundedSearchResult loose = bounded_code_search(z, z.order());
  CHECK(loose.found);
}

TEST_CASE("solver handles forests") {
  Graph forest(6);  // two disjoint three-vertex paths
  forest.add_edge(0, 1);
  forest.add_edge(1, 2);
  forest.add_edge(3, 4);
  forest.add_edge(4, 5);
  SolveResult solved = min_identifying_code(forest);
  CodeCertificate oracle = min_identifying_code_exhaustive(forest);
  CHECK(solved.optimum == 4);
  CHECK(solved.optimum == oracle.size);
  CHECK(solved.witness.code == oracle.code);

  Graph with_isolated(4);  // isolated vertices still need domination
  with_isolated.add_edge(0, 1);
  with_isolated.add_edge(1, 2);
  SolveResult iso = min_identifying_code(with_isolated);
  CHECK(iso.optimum == min_identifying_code_exhaustive(with_isolated).size);
  CHECK(iso.witness.code.contains(3));
}

TEST_CASE("solver guards") {
  CHECK_THROWS_AS(min_identifying_code(make_path(2)), NotIdentifiable);
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK_THROWS_AS(min_identifying_code(triangle), NotIdentifiable);
  CHECK_THROWS_AS(min_identifying_code(Graph(65)), DomainError);
  CHECK_THROWS_AS(min_identifying_code_exhaustive(Graph(21)), DomainError);
  CHECK_THROWS_AS(min_identifying_code_exhaustive(make_path(2)), NotIdentifiable);
}

TEST_CASE("solved sizes on named instances") {
  CHECK(min_identifying_code(star(3).graph).optimum == 3);
  CHECK(min_identifying_code(star(8).graph).optimum == 8);
  CHECK(min_identifying_code(double_star(4).graph).optimum == 6);
  CHECK(min_identifying_code(graph_z().graph).optimum == 8);
  CHECK(min_identifying_code(complete_ary(3, 2).graph).optimum == 5);
}
