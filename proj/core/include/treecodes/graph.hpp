#pragma once

#include <utility>
#include <vector>

#include "treecodes/errors.hpp"
#include "treecodes/vertex_set.hpp"

namespace treecodes {

/// Basic shape statistics of a connected graph.
struct GraphStats {
  int n = 0;
  int max_degree = 0;
  int leaf_count = 0;
  int support_count = 0;  ///< vertices adjacent to at least one leaf
  int diameter = 0;
  bool identifiable = false;  ///< no two vertices share a closed neighborhood
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Vertices are fixed at construction; edges are added one at a time and
/// validated (no loops, no duplicates, endpoints in range).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  /// All edges (u,v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// N[v] = {v} plus its neighbors.
  VertexSet closed_neighborhood(int v) const;

  bool is_connected() const;
  bool is_tree() const;

  /// BFS distances from src; unreachable vertices get -1.
  std::vector<int> bfs_distances(int src) const;

  /// Subgraph induced by `keep`, vertices renumbered 0..|keep|-1 in
  /// ascending original order. If old_of_new is non-null it receives the
  /// map from new indices back to original ones.
  Graph induced(const VertexSet& keep, std::vector<int>* old_of_new = nullptr) const;

  /// Connected components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> components() const;

  /// Degree-1 vertices. For n == 1 the lone vertex counts as a leaf.
  VertexSet leaves() const;

  /// Vertices adjacent to at least one leaf.
  VertexSet supports() const;

  /// Groups of leaves hanging off a common support, one entry per support
  /// with >= 2 leaf neighbors: (support, its leaf neighbors ascending),
  /// entries sorted by support. Such leaves pairwise share open
  /// neighborhoods, so any identifying code must contain all but at most
  /// one of each group.
  std::vector<std::pair<int, std::vector<int>>> open_twin_leaf_classes() const;

  /// True when all closed neighborhoods are pairwise distinct, i.e. some
  /// identifying code exists.
  bool is_identifiable() const;

  /// Shape statistics; throws Disconnected on a disconnected graph.
  GraphStats stats() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace treecodes
