#include "treecodes/codes.hpp"

#include <bit>
#include <string>

namespace treecodes {

namespace {

// Applies f(u, v) to every pair u < v at distance <= 2, in lexicographic
// order. These are the only pairs that can ever share a nonempty signature
// or a closed neighborhood.
template <class F>
void for_each_close_pair(const Graph& g, F f) {
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    VertexSet cand = g.closed_neighborhood(u);
    for (int x : g.neighbors(u)) cand |= g.closed_neighborhood(x);
    cand.for_each([&](int v) {
      if (v > u) f(u, v);
    });
  }
}

std::vector<VertexSet> signatures_of(const Graph& g, const VertexSet& code) {
  std::vector<VertexSet> sig;
  sig.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) sig.push_back(g.closed_neighborhood(v) & code);
  return sig;
}

}  // namespace

CodeCertificate certify(const Graph& g, const VertexSet& code) {
  if (!g.is_identifiable())
    throw NotIdentifiable("the graph has closed twins, so no identifying code exists");
  CodeCertificate cert;
  cert.code = code;
  cert.size = code.size();
  cert.signatures = signatures_of(g, code);

  std::vector<int> empties;
  for (int v = 0; v < g.order(); ++v)
    if (cert.signatures[v].empty()) empties.push_back(v);
  cert.dominating = empties.empty();

  // Nonempty equal signatures share a code vertex, which puts their owners
  // at distance <= 2; so beyond those pairs only empty-vs-empty can clash.
  cert.separating = true;
  for_each_close_pair(g, [&](int u, int v) {
    if (cert.separating && cert.signatures[u] == cert.signatures[v]) {
      cert.separating = false;
      cert.conflict = {u, v};
    }
  });
  if (cert.separating && empties.size() >= 2) {
    cert.separating = false;
    cert.conflict = {empties[0], empties[1]};
  }

  cert.valid = cert.dominating && cert.separating;
  return cert;
}

CodeCertificate certify_all_pairs_reference(const Graph& g, const VertexSet& code) {
  if (!g.is_identifiable())
    throw NotIdentifiable("the graph has closed twins, so no identifying code exists");
  CodeCertificate cert;
  cert.code = code;
  cert.size = code.size();
  cert.signatures = signatures_of(g, code);
  cert.dominating = true;
  for (int v = 0; v < g.order(); ++v)
    if (cert.signatures[v].empty()) cert.dominating = false;
  cert.separating = true;
  for (int u = 0; u < g.order() && cert.separating; ++u)
    for (int v = u + 1; v < g.order() && cert.separating; ++v)
      if (cert.signatures[u] == cert.signatures[v]) {
        cert.separating = false;
        cert.conflict = {u, v};
      }
  cert.valid = cert.dominating && cert.separating;
  return cert;
}

VertexSet forced_vertices(const Graph& g) {
  VertexSet forced(g.order());
  for_each_close_pair(g, [&](int u, int v) {
    VertexSet diff = g.closed_neighborhood(u) ^ g.closed_neighborhood(v);
    if (diff.empty())
      throw NotIdentifiable("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " share a closed neighborhood");
    if (diff.size() == 1) forced.add(diff.first());
  });
  return forced;
}

int lower_bound(const Graph& g) {
  int n = g.order();
  int info = static_cast<int>(std::bit_width(static_cast<unsigned>(n)));
  VertexSet forced = forced_vertices(g);
  int structural = forced.size();
  // Of k leaves hanging on one support, any code misses at most one; count
  // the members of each such group that the forced set does not already pay
  // for.
  for (const auto& [s, leaves] : g.open_twin_leaf_classes()) {
    int k = static_cast<int>(leaves.size());
    int already = 0;
    for (int l : leaves)
      if (forced.contains(l)) ++already;
    structural += std::max(0, (k - 1) - already);
  }
  return std::max(info, structural);
}

}  // namespace treecodes
