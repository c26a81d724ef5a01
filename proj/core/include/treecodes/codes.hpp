#pragma once

#include <vector>

#include "treecodes/graph.hpp"
#include "treecodes/vertex_set.hpp"

namespace treecodes {

/// Outcome of checking a candidate identifying code, with the evidence
/// (per-vertex signatures) materialized so callers can inspect failures.
struct CodeCertificate {
  VertexSet code;
  /// signatures[v] = N[v] restricted to the code.
  std::vector<VertexSet> signatures;
  bool dominating = false;  ///< every signature nonempty
  bool separating = false;  ///< all signatures pairwise distinct
  bool valid = false;       ///< dominating && separating
  int size = 0;

  /// Vertices whose signatures coincide (first offending pair), valid only
  /// when !separating; (-1,-1) otherwise.
  std::pair<int, int> conflict{-1, -1};
};

/// Checks whether `code` is an identifying code of g: every vertex must be
/// dominated by the code and no two vertices may share a signature.
/// Works on disconnected graphs. Only pairs at distance <= 2 can share a
/// signature once both are dominated, so the check compares those pairs and
/// counts empty signatures instead of comparing all n^2 pairs.
CodeCertificate certify(const Graph& g, const VertexSet& code);

/// Reference implementation comparing all vertex pairs directly; used to
/// cross-check the distance-2 shortcut in tests.
CodeCertificate certify_all_pairs_reference(const Graph& g, const VertexSet& code);

/// Vertices contained in every identifying code: v is forced when some pair
/// u,w has N[u] ^ N[w] = {v}. Throws NotIdentifiable when two vertices share
/// a closed neighborhood (then no code exists at all).
VertexSet forced_vertices(const Graph& g);

/// Cheap lower bound on the minimum identifying code size: the largest of
/// the information-theoretic bound ceil(log2(n+1)) and the forced-vertex
/// count plus, per group of k leaves on a common support, however many of
/// the required k-1 group members are not already forced.
int lower_bound(const Graph& g);

}  // namespace treecodes
