#include <doctest.h>

#include <random>
#include <utility>
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

VertexSet random_subset(int n, std::mt19937& rng) {
  VertexSet s(n);
  std::bernoulli_distribution coin(0.5);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) s.add(v);
  return s;
}

}  // namespace

TEST_CASE("a known-good code certifies with full evidence") {
  Graph p7 = make_path(7);
  VertexSet code = VertexSet::of(7, {0, 2, 4, 6});
  CodeCertificate cert = certify(p7, code);
  CHECK(cert.valid);
  CHECK(cert.dominating);
  CHECK(cert.separating);
  CHECK(cert.size == 4);
  CHECK(cert.code == code);
  CHECK(cert.conflict == std::pair<int, int>(-1, -1));
  REQUIRE(cert.signatures.size() == 7);
  for (int v = 0; v < 7; ++v) CHECK(cert.signatures[v] == (p7.closed_neighborhood(v) & code));
}

TEST_CASE("domination and separation failures are reported separately") {
  Graph p5 = make_path(5);

  // {0,1,2} separates every pair (one empty signature is fine) but leaves
  // vertex 4 undominated.
  CodeCertificate sep_only = certify(p5, VertexSet::of(5, {0, 1, 2}));
  CHECK_FALSE(sep_only.valid);
  CHECK_FALSE(sep_only.dominating);
  CHECK(sep_only.separating);
  CHECK(sep_only.conflict == std::pair<int, int>(-1, -1));

  // Two undominated vertices share the empty signature.
  Graph p6 = make_path(6);
  CodeCertificate two_empty = certify(p6, VertexSet::of(6, {0, 1, 2}));
  CHECK_FALSE(two_empty.valid);
  CHECK_FALSE(two_empty.dominating);
  CHECK_FALSE(two_empty.separating);
  auto [a, b] = two_empty.conflict;
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(a != b);
  CHECK(two_empty.signatures[a] == two_empty.signatures[b]);
  CHECK(two_empty.signatures[a].empty());

  // A dominated but unseparated pair is returned as the conflict.
  CodeCertificate clash = certify(p5, VertexSet::of(5, {0, 1, 3, 4}));
  CHECK(clash.dominating);
  CHECK_FALSE(clash.separating);
  auto [u, v] = clash.conflict;
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  CHECK(u != v);
  CHECK(clash.signatures[u] == clash.signatures[v]);
  CHECK_FALSE(clash.signatures[u].empty());
}

TEST_CASE("graphs with closed twins admit no identifying code") {
  Graph k2 = make_path(2);
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  Graph paw(4);  // triangle with a pendant; 0 and 1 stay closed twins
  paw.add_edge(0, 1);
  paw.add_edge(1, 2);
  paw.add_edge(0, 2);
  paw.add_edge(2, 3);

  for (const Graph* g : {&k2, &triangle, &paw}) {
    CHECK_FALSE(g->is_identifiable());
    CHECK_THROWS_AS(certify(*g, VertexSet::full(g->order())), NotIdentifiable);
    CHECK_THROWS_AS(certify_all_pairs_reference(*g, VertexSet::full(g->order())),
                    NotIdentifiable);
    CHECK_THROWS_AS(forced_vertices(*g), NotIdentifiable);
    CHECK_THROWS_AS(lower_bound(*g), NotIdentifiable);
  }
}

TEST_CASE("the distance-2 check agrees with the all-pairs reference") {
  std::mt19937 rng(6021023);
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& t : free_trees(n)) {
      std::vector<VertexSet> samples = {VertexSet(n), VertexSet::full(n),
                                        t.leaves(), t.supports()};
      for (int trial = 0; trial < 8; ++trial) samples.push_back(random_subset(n, rng));
      for (const VertexSet& code : samples) {
        CodeCertificate fast = certify(t, code);
        CodeCertificate slow = certify_all_pairs_reference(t, code);
        CHECK(fast.valid == slow.valid);
        CHECK(fast.dominating == slow.dominating);
        CHECK(fast.separating == slow.separating);
        CHECK(fast.size == slow.size);
        REQUIRE(fast.signatures.size() == slow.signatures.size());
        for (int v = 0; v < n; ++v) CHECK(fast.signatures[v] == slow.signatures[v]);
        // Each implementation may pick a different offending pair, but both
        // must be genuine.
        for (const CodeCertificate* c : {&fast, &slow}) {
          if (c->separating) {
            CHECK(c->conflict == std::pair<int, int>(-1, -1));
          } else {
            auto [x, y] = c->conflict;
            REQUIRE(x >= 0);
            REQUIRE(y >= 0);
            CHECK(x != y);
            CHECK(c->signatures[x] == c->signatures[y]);
          }
        }
      }
    }
  }
}

TEST_CASE("certify works on forests") {
  Graph forest(6);  // two disjoint three-vertex paths
  forest.add_edge(0, 1);
  forest.add_edge(1, 2);
  forest.add_edge(3, 4);
  forest.add_edge(4, 5);

  CodeCertificate good = certify(forest, VertexSet::of(6, {0, 2, 3, 5}));
  CHECK(good.valid);

  // A code confined to one component leaves the other component's vertices
  // sharing the empty signature.
  CodeCertificate bad = certify(forest, VertexSet::of(6, {0, 1, 2}));
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.separating);
  auto [x, y] = bad.conflict;
  CHECK(x >= 3);
  CHECK(y >= 3);
  CHECK(bad.signatures[x].empty());

  CodeCertificate ref = certify_all_pairs_reference(forest, VertexSet::of(6, {0, 1, 2}));
  CHECK(ref.valid == bad.valid);
  CHECK(ref.separating == bad.separating);
}

TEST_CASE("forced vertices of small named trees") {
  CHECK(forced_vertices(make_path(4)) == VertexSet::of(4, {1, 2}));
  CHECK(forced_vertices(make_path(5)) == VertexSet::of(5, {2}));
  CHECK(forced_vertices(star(3).graph).empty());
}

TEST_CASE("a vertex is forced exactly when dropping it from the full code breaks validity") {
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& t : free_trees(n)) {
      VertexSet forced = forced_vertices(t);
      VertexSet everything = VertexSet::full(n);
      for (int v = 0; v < n; ++v) {
        VertexSet without = everything;
        without.remove(v);
        CHECK(forced.contains(v) == !certify(t, without).valid);
      }
    }
  }
}

TEST_CASE("every valid code contains all forced vertices") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& t : free_trees(n)) {
      VertexSet forced = forced_vertices(t);
      for (unsigned long long word = 0; word < (1ull << n); ++word) {
        VertexSet code = VertexSet::from_word(n, word);
        if (certify(t, code).valid) CHECK((forced - code).empty());
      }
    }
  }
}

TEST_CASE("lower bound is sound and reaches the information-theoretic floor") {
  CHECK(lower_bound(make_path(4)) == 3);
  CHECK(lower_bound(make_path(3)) == 2);
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& t : free_trees(n)) {
      int lb = lower_bound(t);
      int log_floor = 0;
      while ((1 << log_floor) < n + 1) ++log_floor;
      CHECK(lb >= log_floor);
      CHECK(lb >= forced_vertices(t).size());
      CHECK(lb <= min_identifying_code_exhaustive(t).size);
    }
  }

  // Stars force nothing individually, yet all but one leaf must be present.
  CHECK(lower_bound(star(4).graph) == 3);
  CHECK(lower_bound(star(6).graph) == 5);
}
