#include <benchmark/benchmark.h>

#include "treecodes/canonical.hpp"
#include "treecodes/codes.hpp"
#include "treecodes/constructive.hpp"
#include "treecodes/enumeration.hpp"
#include "treecodes/graph.hpp"
#include "treecodes/solvers.hpp"

namespace {

treecodes::Graph path_graph(int n) {
  treecodes::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

void BM_CertifyPath60(benchmark::State& state) {
  treecodes::Graph g = path_graph(60);
  treecodes::VertexSet code = treecodes::path_identifying_code(60);
  for (auto _ : state) {
    auto cert = treecodes::certify(g, code);
    benchmark::DoNotOptimize(cert.valid);
  }
}
BENCHMARK(BM_CertifyPath60);

void BM_SolvePath16(benchmark::State& state) {
  treecodes::Graph g = path_graph(16);
  for (auto _ : state) {
    auto res = treecodes::min_identifying_code(g);
    benchmark::DoNotOptimize(res.optimum);
  }
}
BENCHMARK(BM_SolvePath16);

void BM_SolveTwoCorona5(benchmark::State& state) {
  treecodes::Graph g = treecodes::two_corona(5).graph;
  for (auto _ : state) {
    auto res = treecodes::min_identifying_code(g);
    benchmark::DoNotOptimize(res.optimum);
  }
}
BENCHMARK(BM_SolveTwoCorona5);

void BM_DominationDP(benchmark::State& state) {
  treecodes::Graph g = treecodes::complete_ary(3, 4).graph;  // 31 vertices
  for (auto _ : state) {
    auto res = treecodes::min_dominating_set_tree(g);
    benchmark::DoNotOptimize(res.size);
  }
}
BENCHMARK(BM_DominationDP);

void BM_EnumerateTrees12(benchmark::State& state) {
  for (auto _ : state) {
    treecodes::TreeStream stream(12);
    long long count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTrees12);

void BM_CanonicalForm(benchmark::State& state) {
  treecodes::Graph g = treecodes::big_construction(3, 4).graph;  // 30 vertices
  for (auto _ : state) {
    auto form = treecodes::canonical_form(g);
    benchmark::DoNotOptimize(form.hex());
  }
}
BENCHMARK(BM_CanonicalForm);

}  // namespace

BENCHMARK_MAIN();
