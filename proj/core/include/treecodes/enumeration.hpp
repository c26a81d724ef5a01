#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treecodes/graph.hpp"

namespace treecodes {

/// Streams every unlabeled tree on n vertices exactly once, in a fixed
/// deterministic order, without materializing the whole list.
///
/// Trees with a single centroid are produced by walking canonical rooted
/// level sequences and keeping those rooted at the centroid (every
/// root-child subtree holds at most floor((n-1)/2) vertices); trees with two
/// adjacent centroids (even n only) follow as joins of unordered pairs of
/// rooted trees on n/2 vertices. Vertex labels are the preorder of the
/// level sequence, so label 0 is a centroid.
///
/// With `offset` o and `stride` s the stream yields the trees at positions
/// o, o+s, o+2s, ... of the (degree-filtered) global order, letting W
/// workers split the work disjointly via offsets 0..W-1 at stride W.
class TreeStream {
 public:
  /// max_degree 0 means unrestricted. Throws DomainError unless
  /// 1 <= n <= 20, offset >= 0 and stride >= 1.
  explicit TreeStream(int n, int max_degree = 0, long long offset = 0, long long stride = 1);

  /// Next tree in this worker's share, or nullopt when exhausted.
  std::optional<Graph> next();

 private:
  bool raw_next(Graph* out);
  bool advance_levels();

  int n_;
  int max_degree_;
  long long stride_, skip_;
  std::vector<int> levels_;  // current rooted level sequence (root depth 0)
  bool uni_phase_ = true;
  bool levels_fresh_ = true;
  std::vector<std::vector<int>> halves_;  // rooted level sequences on n/2
  size_t i_ = 0, j_ = 0;
};

/// All unlabeled trees on n vertices (optionally max degree bounded),
/// in stream order. Throws DomainError unless 1 <= n <= 20.
std::vector<Graph> free_trees(int n, int max_degree = 0);

/// The stream split into `chunks` disjoint interleaved slices whose
/// concatenation order is irrelevant to any per-tree computation; slice w
/// holds positions w, w+chunks, w+2*chunks, ...
std::vector<std::vector<Graph>> enumerate_chunked(int n, int chunks, int max_degree = 0);

/// Oracle enumerator: grows trees one leaf at a time and deduplicates by
/// canonical form. Quadratically slower; used to cross-check the stream.
std::vector<Graph> free_trees_naive(int n);

}  // namespace treecodes
