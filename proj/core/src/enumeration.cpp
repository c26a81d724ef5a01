#include "treecodes/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "treecodes/canonical.hpp"

namespace treecodes {

namespace {

// Builds the tree of a rooted level sequence: vertex i at depth L[i], its
// parent the nearest earlier vertex one level up.
Graph from_levels(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  Graph g(n);
  std::vector<int> last_at_depth(n, -1);
  last_at_depth[0] = 0;
  for (int i = 1; i < n; ++i) {
    g.add_edge(last_at_depth[levels[i] - 1], i);
    last_at_depth[levels[i]] = i;
  }
  return g;
}

// Joins two rooted trees at their roots: a keeps its labels, b is shifted
// by |a|, and the roots 0 and |a| become adjacent.
Graph join_at_roots(const std::vector<int>& a, const std::vector<int>& b) {
  int m = static_cast<int>(a.size());
  Graph ga = from_levels(a), gb = from_levels(b);
  Graph g(m + static_cast<int>(b.size()));
  for (auto [u, v] : ga.edges()) g.add_edge(u, v);
  for (auto [u, v] : gb.edges()) g.add_edge(u + m, v + m);
  g.add_edge(0, m);
  return g;
}

// True when every root-child subtree of the level sequence holds at most
// floor((n-1)/2) vertices, i.e. the root is the unique centroid.
bool rooted_at_centroid(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  int limit = (n - 1) / 2;
  int start = 1;
  for (int i = 2; i <= n; ++i)
    if (i == n || levels[i] == 1) {
      if (i - start > limit) return false;
      start = i;
    }
  return true;
}

bool degree_ok(const Graph& g, int max_degree) {
  if (max_degree <= 0) return true;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > max_degree) return false;
  return true;
}

}  // namespace

TreeStream::TreeStream(int n, int max_degree, long long offset, long long stride)
    : n_(n), max_degree_(max_degree), stride_(stride), skip_(offset) {
  if (n < 1 || n > 20)
    throw DomainError("tree enumeration supports 1 <= n <= 20, got " + std::to_string(n));
  if (offset < 0 || stride < 1) throw DomainError("need offset >= 0 and stride >= 1");
  levels_.resize(n);
  for (int i = 0; i < n; ++i) levels_[i] = i;  // the path, lexicographically largest
}

// Successor of the current canonical level sequence in decreasing
// lexicographic order: locate the last vertex p deeper than 1, reattach it
// one level up next to its parent's pattern by copying the block starting
// at that parent cyclically over the tail.
bool TreeStream::advance_levels() {
  int p = -1;
  for (int i = n_ - 1; i >= 0; --i)
    if (levels_[i] >= 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (levels_[i] == levels_[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
  return true;
}

// Next tree of the unfiltered global order (centroid-valid only), advancing
// through the unicentroid walk and then the bicentroid pair loop.
bool TreeStream::raw_next(Graph* out) {
  while (uni_phase_) {
    if (!levels_fresh_ && !advance_levels()) {
      uni_phase_ = false;
      break;
    }
    levels_fresh_ = false;
    if (rooted_at_centroid(levels_)) {
      *out = from_levels(levels_);
      return true;
    }
  }
  if (n_ % 2 != 0) return false;
  if (halves_.empty()) {
    // First entry: materialize all rooted level sequences on n/2.
    TreeStream walker(n_ / 2);
    halves_.push_back(walker.levels_);
    while (walker.advance_levels()) halves_.push_back(walker.levels_);
    i_ = 0;
    j_ = 0;
  }
  if (i_ >= halves_.size()) return false;
  *out = join_at_roots(halves_[i_], halves_[j_]);
  if (++j_ >= halves_.size()) {
    ++i_;
    j_ = i_;
  }
  return true;
}

std::optional<Graph> TreeStream::next() {
  Graph g;
  while (raw_next(&g)) {
    if (!degree_ok(g, max_degree_)) continue;
    if (skip_ > 0) {
      --skip_;
      continue;
    }
    skip_ = stride_ - 1;
    return g;
  }
  return std::nullopt;
}

std::vector<Graph> free_trees(int n, int max_degree) {
  TreeStream stream(n, max_degree);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<std::vector<Graph>> enumerate_chunked(int n, int chunks, int max_degree) {
  if (chunks < 1) throw DomainError("need at least one chunk");
  std::vector<std::vector<Graph>> out(chunks);
  for (int w = 0; w < chunks; ++w) {
    TreeStream stream(n, max_degree, w, chunks);
    while (auto g = stream.next()) out[w].push_back(std::move(*g));
  }
  return out;
}

std::vector<Graph> free_trees_naive(int n) {
  if (n < 1 || n > 20)
    throw DomainError("tree enumeration supports 1 <= n <= 20, got " + std::to_string(n));
  std::map<std::string, Graph> current;
  Graph single(1);
  current.emplace(canonical_form(single).bytes(), single);
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> grown;
    for (const auto& [key, g] : current)
      for (int v = 0; v < g.order(); ++v) {
        Graph h(g.order() + 1);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        h.add_edge(v, g.order());
        grown.emplace(canonical_form(h).bytes(), h);
      }
    current = std::move(grown);
  }
  std::vector<Graph> out;
  out.reserve(current.size());
  for (auto& [key, g] : current) out.push_back(std::move(g));
  return out;
}

}  // namespace treecodes
