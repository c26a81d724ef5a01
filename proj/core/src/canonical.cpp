#include "treecodes/canonical.hpp"

#include <algorithm>

namespace treecodes {

namespace {

// Subtree encoding rooted at v (parent excluded), with v at depth d: the
// byte d followed by the children's encodings sorted descending. Equal
// encodings <=> isomorphic rooted subtrees.
std::string encode_subtree(const Graph& g, int v, int parent, int depth) {
  std::vector<std::string> child_encs;
  for (int c : g.neighbors(v))
    if (c != parent) child_encs.push_back(encode_subtree(g, c, v, depth + 1));
  std::sort(child_encs.begin(), child_encs.end(), std::greater<>());
  std::string enc(1, static_cast<char>(depth));
  for (const auto& ce : child_encs) enc += ce;
  return enc;
}

// Preorder walk of the canonical arrangement rooted at `root`, appending
// original vertex ids in canonical-position order.
void collect_order(const Graph& g, int v, int parent, int depth, std::vector<int>& out) {
  out.push_back(v);
  std::vector<std::pair<std::string, int>> kids;
  for (int c : g.neighbors(v))
    if (c != parent) kids.emplace_back(encode_subtree(g, c, v, depth + 1), c);
  std::sort(kids.begin(), kids.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [enc, c] : kids) collect_order(g, c, v, depth + 1, out);
}

// The center whose rooted encoding is lexicographically smallest (ties break
// to the first), plus that encoding.
std::pair<int, std::string> best_root(const Graph& g) {
  int root = -1;
  std::string best;
  for (int c : tree_centers(g)) {
    std::string enc = encode_subtree(g, c, -1, 0);
    if (root < 0 || enc < best) {
      root = c;
      best = std::move(enc);
    }
  }
  return {root, best};
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char b : bytes_) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  if (!g.is_tree()) throw NotATree("tree_centers requires a tree");
  int n = g.order();
  std::vector<int> deg(n), peel;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) peel.push_back(v);
  }
  int remaining = n;
  std::vector<int> layer = peel;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int u : g.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm(best_root(g).second); }

std::vector<int> canonical_order(const Graph& g) {
  auto [root, enc] = best_root(g);
  std::vector<int> order;
  order.reserve(g.order());
  collect_order(g, root, -1, 0, order);
  return order;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> tree_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || canonical_form(a) != canonical_form(b)) return std::nullopt;
  auto oa = canonical_order(a), ob = canonical_order(b);
  std::vector<int> m(a.order());
  for (int i = 0; i < a.order(); ++i) m[oa[i]] = ob[i];
  return m;
}

}  // namespace treecodes
