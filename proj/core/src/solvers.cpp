#include "treecodes/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

namespace treecodes {

namespace {

using std::uint64_t;

constexpr uint64_t bit_of(int v) { return uint64_t{1} << v; }

// Mask-level view of the instance for the exact search (n <= 64).
struct SearchContext {
  int n = 0;
  std::vector<uint64_t> nb;  // nb[v] = closed neighborhood of v
  struct ClosePair {
    int u, v;
    uint64_t diff;  // nb[u] ^ nb[v], never 0 on identifiable graphs
  };
  std::vector<ClosePair> pairs;  // distance <= 2 pairs, lexicographic
  long long budget = 0;
  long long nodes = 0;
  bool exceeded = false;
};

SearchContext build_context(const Graph& g, long long budget) {
  int n = g.order();
  if (n > 64) throw DomainError("exact search supports at most 64 vertices, got " +
                                std::to_string(n));
  SearchContext ctx;
  ctx.n = n;
  ctx.budget = budget;
  ctx.nb.reserve(n);
  for (int v = 0; v < n; ++v) ctx.nb.push_back(g.closed_neighborhood(v).word());
  for (int u = 0; u < n; ++u) {
    uint64_t cand = ctx.nb[u];
    for (int x : g.neighbors(u)) cand |= ctx.nb[x];
    cand &= ~(bit_of(u) | (bit_of(u) - 1));  // keep v > u
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      uint64_t diff = ctx.nb[u] ^ ctx.nb[v];
      if (diff == 0)
        throw NotIdentifiable("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                              " share a closed neighborhood");
      ctx.pairs.push_back({u, v, diff});
    }
  }
  return ctx;
}

// Forced vertices plus, per leaf group on a common support, the group's
// k-1 lowest members. Swapping two leaves of a group is an automorphism
// fixing everything else, so the numerically smallest optimum contains
// exactly this seed; in particular a code of size s exists iff one of size
// s through the seed does.
uint64_t seed_mask(const Graph& g, const SearchContext& ctx) {
  uint64_t seed = 0;
  for (const auto& p : ctx.pairs)
    if (std::popcount(p.diff) == 1) seed |= p.diff;
  for (const auto& [s, leaves] : g.open_twin_leaf_classes())
    for (size_t i = 0; i + 1 < leaves.size(); ++i) seed |= bit_of(leaves[i]);
  return seed;
}

// Searches for any valid code C with cur <= C <= ~excluded and |C| <= k;
// on success writes it to *out. Prunes via per-constraint resolver
// emptiness and a greedy disjoint-constraint packing bound, and branches on
// the constraint with fewest resolvers.
bool dfs(SearchContext& ctx, uint64_t cur, uint64_t excluded, int k, uint64_t* out) {
  if (ctx.exceeded) return false;
  if (++ctx.nodes > ctx.budget) {
    ctx.exceeded = true;
    return false;
  }

  // Open constraints: undominated vertices first (ascending), then
  // unseparated pairs (lexicographic). Each lists the vertices still
  // allowed to fix it.
  std::vector<uint64_t> resolvers;
  resolvers.reserve(16);
  int best = -1, best_pc = 65;
  auto add_constraint = [&](uint64_t allowed) {
    int pc = std::popcount(allowed);
    if (pc < best_pc) {
      best_pc = pc;
      best = static_cast<int>(resolvers.size());
    }
    resolvers.push_back(allowed);
    return pc > 0;
  };
  for (int v = 0; v < ctx.n; ++v)
    if ((ctx.nb[v] & cur) == 0)
      if (!add_constraint(ctx.nb[v] & ~excluded)) return false;
  for (const auto& p : ctx.pairs)
    if ((p.diff & cur) == 0)
      if (!add_constraint(p.diff & ~excluded)) return false;

  if (resolvers.empty()) {
    *out = cur;
    return true;
  }
  int used = std::popcount(cur);
  if (used >= k) return false;

  // Constraints with pairwise disjoint resolver sets need pairwise distinct
  // new vertices; smallest-first greedy packs tightly.
  std::vector<int> order(resolvers.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int pa = std::popcount(resolvers[a]), pb = std::popcount(resolvers[b]);
    return pa != pb ? pa < pb : a < b;
  });
  uint64_t taken = 0;
  int need = 0;
  for (int i : order)
    if ((resolvers[i] & taken) == 0) {
      ++need;
      taken |= resolvers[i];
    }
  if (used + need > k) return false;

  uint64_t rest = resolvers[best];
  uint64_t ex = excluded;
  while (rest) {
    uint64_t b = rest & (~rest + 1);
    rest ^= b;
    if (dfs(ctx, cur | b, ex, k, out)) return true;
    if (ctx.exceeded) return false;
    ex |= b;
  }
  return false;
}

// Deterministic fallback when the node budget runs out: start from the full
// vertex set (valid on any identifiable graph) and drop vertices from the
// highest id down while validity survives.
VertexSet greedy_code(const Graph& g) {
  int n = g.order();
  VertexSet code = VertexSet::full(n);
  for (int v = n - 1; v >= 0; --v) {
    code.remove(v);
    if (!certify(g, code).valid) code.add(v);
  }
  return code;
}

}  // namespace

SolveResult min_identifying_code(const Graph& g, const SolveOptions& opts) {
  int n = g.order();
  SearchContext ctx = build_context(g, opts.node_budget);
  uint64_t seed = opts.seed_forced_and_twins ? seed_mask(g, ctx) : 0;

  SolveResult res;
  uint64_t found = 0;
  int k = std::max(lower_bound(g), std::popcount(seed));
  bool ok = false;
  for (; k <= n; ++k) {
    if (dfs(ctx, seed, 0, k, &found)) {
      ok = true;
      break;
    }
    if (ctx.exceeded) break;
  }

  if (!ok) {
    VertexSet best = greedy_code(g);
    res.optimum = best.size();
    res.witness = certify(g, best);
    res.nodes_explored = ctx.nodes;
    res.budget_exceeded = true;
    return res;
  }

  uint64_t witness = found;
  if (opts.lex_min_witness && n > 0) {
    // Fix bits from the top: forbid a vertex when some optimum avoids it
    // together with everything forbidden so far, else commit to it. The
    // surviving set is the numerically smallest optimum.
    uint64_t must = seed, forbidden = 0;
    bool degraded = false;
    for (int v = n - 1; v >= 0; --v) {
      if ((must >> v) & 1) continue;
      uint64_t tmp = 0;
      if (dfs(ctx, must, forbidden | bit_of(v), k, &tmp)) {
        forbidden |= bit_of(v);
      } else if (ctx.exceeded) {
        degraded = true;
        break;
      } else {
        must |= bit_of(v);
      }
    }
    if (!degraded) witness = must;
  }

  res.optimum = k;
  res.witness = certify(g, VertexSet::from_word(n, witness));
  res.nodes_explored = ctx.nodes;
  res.budget_exceeded = ctx.exceeded;
  return res;
}

BoundedSearchResult bounded_code_search(const Graph& g, int size_budget,
                                        const SolveOptions& opts) {
  int n = g.order();
  SearchContext ctx = build_context(g, opts.node_budget);
  uint64_t seed = opts.seed_forced_and_twins ? seed_mask(g, ctx) : 0;

  BoundedSearchResult res;
  res.code = VertexSet(n);
  if (size_budget < 0 || std::popcount(seed) > size_budget ||
      lower_bound(g) > size_budget) {
    // Every code meets the seed size and the lower bound, so failure here
    // is already proven without search.
    res.complete = true;
    return res;
  }
  uint64_t out = 0;
  res.found = dfs(ctx, seed, 0, size_budget, &out);
  if (res.found) res.code = VertexSet::from_word(n, out);
  res.complete = !ctx.exceeded;
  res.nodes = ctx.nodes;
  return res;
}

DominationResult min_dominating_set_tree(const Graph& g) {
  if (!g.is_tree()) throw NotATree("domination DP requires a tree");
  int n = g.order();
  constexpr int kInf = 1 << 20;

  // States: 0 = in the set, 1 = out but dominated by a child, 2 = out and
  // not yet dominated (the parent must take it).
  std::vector<std::array<int, 3>> dp(n);
  std::vector<int> parent(n, -2), post;
  post.reserve(n);
  {
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      post.push_back(v);
      for (int c : g.neighbors(v))
        if (parent[c] == -2) {
          parent[c] = v;
          stack.push_back(c);
        }
    }
    std::reverse(post.begin(), post.end());  // children before parents
  }

  for (int v : post) {
    int take = 1, out_dominated = 0, out_waiting = 0;
    int flip = kInf;  // cheapest forced switch of one child to state 0
    bool covered = false, has_child = false;
    for (int c : g.neighbors(v)) {
      if (c == parent[v]) continue;
      has_child = true;
      take += std::min({dp[c][0], dp[c][1], dp[c][2]});
      out_dominated += std::min(dp[c][0], dp[c][1]);
      if (dp[c][0] <= dp[c][1]) covered = true;
      flip = std::min(flip, dp[c][0] - dp[c][1]);
      out_waiting += dp[c][1];
    }
    dp[v][0] = std::min(take, kInf);
    dp[v][1] = has_child ? std::min(out_dominated + (covered ? 0 : flip), kInf) : kInf;
    dp[v][2] = std::min(out_waiting, kInf);
  }

  DominationResult res;
  res.witness = VertexSet(n);
  std::vector<int> state(n, -1);
  state[0] = dp[0][0] <= dp[0][1] ? 0 : 1;
  res.size = dp[0][state[0]];
  for (auto it = post.rbegin(); it != post.rend(); ++it) {  // parents first
    int v = *it;
    if (state[v] == 0) {
      res.witness.add(v);
      for (int c : g.neighbors(v)) {
        if (c == parent[v]) continue;
        int best = std::min({dp[c][0], dp[c][1], dp[c][2]});
        state[c] = dp[c][0] == best ? 0 : (dp[c][1] == best ? 1 : 2);
      }
    } else if (state[v] == 1) {
      int flip_child = -1, flip_cost = kInf;
      bool covered = false;
      for (int c : g.neighbors(v)) {
        if (c == parent[v]) continue;
        state[c] = dp[c][0] <= dp[c][1] ? 0 : 1;
        if (state[c] == 0) covered = true;
        if (dp[c][0] - dp[c][1] < flip_cost) {
          flip_cost = dp[c][0] - dp[c][1];
          flip_child = c;
        }
      }
      if (!covered && flip_child >= 0) state[flip_child] = 0;
    } else {  // state 2: v waits for its parent, so no child sits in the set
      for (int c : g.neighbors(v))
        if (c != parent[v]) state[c] = 1;
    }
  }
  return res;
}

DominationResult min_dominating_set_exact(const Graph& g) {
  int n = g.order();
  if (n > 20) throw DomainError("exhaustive domination supports at most 20 vertices");
  if (n == 0) return {};
  std::vector<uint64_t> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.closed_neighborhood(v).word();
  uint64_t full = bit_of(n) - 1;
  for (int k = 1; k <= n; ++k) {
    for (uint64_t x = bit_of(k) - 1; x < bit_of(n);) {
      uint64_t cover = 0, m = x;
      while (m) {
        cover |= nb[std::countr_zero(m)];
        m &= m - 1;
      }
      if (cover == full) return {k, VertexSet::from_word(n, x)};
      uint64_t c = x & (~x + 1), r = x + c;  // Gosper's next same-popcount mask
      x = r | (((x ^ r) >> 2) / c);
    }
  }
  return {n, VertexSet::full(n)};  // unreachable: V always dominates
}

int gamma_path(int n) {
  if (n < 1) throw DomainError("paths need at least one vertex");
  return (n + 2) / 3;
}

int gamma_id_path(int n) {
  if (n < 1) throw DomainError("paths need at least one vertex");
  if (n == 2)
    throw DomainError("the two-vertex path has no identifying code (adjacent closed twins)");
  return n / 2 + 1;
}

CodeCertificate min_identifying_code_exhaustive(const Graph& g) {
  int n = g.order();
  if (n > 20) throw DomainError("exhaustive code search supports at most 20 vertices");
  if (n == 0) return certify(g, VertexSet(0));
  for (int k = 1; k <= n; ++k) {
    for (uint64_t x = bit_of(k) - 1; x < bit_of(n);) {
      CodeCertificate cert = certify_all_pairs_reference(g, VertexSet::from_word(n, x));
      if (cert.valid) return cert;
      uint64_t c = x & (~x + 1), r = x + c;
      x = r | (((x ^ r) >> 2) / c);
    }
  }
  throw NotIdentifiable("no identifying code exists: two vertices share a closed neighborhood");
}

}  // namespace treecodes
