#include "treecodes/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace treecodes {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
  if (n < 0 || n > VertexSet::kMaxVertices)
    throw InvalidGraph("graph order out of range: " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InvalidGraph("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n_));
  if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw InvalidGraph("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const { return adj_[v]; }

int Graph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s(n_);
  s.add(v);
  for (int u : adj_[v]) s.add(u);
  return s;
}

std::vector<int> Graph::bfs_distances(int src) const {
  std::vector<int> dist(n_, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto d = bfs_distances(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

bool Graph::is_tree() const { return is_connected() && m_ == n_ - 1; }

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_of_new) const {
  std::vector<int> new_of_old(n_, -1), old_list;
  keep.for_each([&](int v) {
    new_of_old[v] = static_cast<int>(old_list.size());
    old_list.push_back(v);
  });
  Graph g(static_cast<int>(old_list.size()));
  for (int u : old_list)
    for (int v : adj_[u])
      if (u < v && new_of_old[v] >= 0) g.add_edge(new_of_old[u], new_of_old[v]);
  if (old_of_new) *old_of_new = std::move(old_list);
  return g;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(n_, false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n_);
    std::queue<int> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.add(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    out.push_back(comp);
  }
  return out;
}

VertexSet Graph::leaves() const {
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v)
    if (degree(v) <= 1) s.add(v);
  return s;
}

VertexSet Graph::supports() const {
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) s.add(adj_[v][0]);
  return s;
}

std::vector<std::pair<int, std::vector<int>>> Graph::open_twin_leaf_classes() const {
  std::vector<std::vector<int>> leaves_of(n_);
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) leaves_of[adj_[v][0]].push_back(v);
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int s = 0; s < n_; ++s)
    if (leaves_of[s].size() >= 2) out.emplace_back(s, std::move(leaves_of[s]));
  return out;
}

bool Graph::is_identifiable() const {
  std::vector<VertexSet> nbhd;
  nbhd.reserve(n_);
  for (int v = 0; v < n_; ++v) nbhd.push_back(closed_neighborhood(v));
  // Two vertices can share a closed neighborhood only if they are adjacent,
  // so it suffices to compare along edges.
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v && nbhd[u] == nbhd[v]) return false;
  return true;
}

GraphStats Graph::stats() const {
  if (!is_connected()) throw Disconnected("stats requires a connected graph");
  GraphStats st;
  st.n = n_;
  for (int v = 0; v < n_; ++v) st.max_degree = std::max(st.max_degree, degree(v));
  st.leaf_count = leaves().size();
  st.support_count = supports().size();
  if (is_tree()) {
    // Double sweep: the eccentricity of a BFS-farthest vertex is the diameter.
    auto d0 = bfs_distances(0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_distances(a);
    st.diameter = *std::max_element(da.begin(), da.end());
  } else {
    for (int v = 0; v < n_; ++v) {
      auto d = bfs_distances(v);
      st.diameter = std::max(st.diameter, *std::max_element(d.begin(), d.end()));
    }
  }
  st.identifiable = is_identifiable();
  return st;
}

}  // namespace treecodes
