#include "pretop/solvers.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace pretop {

namespace {

// Closed neighborhoods as 64-bit masks; callers guarantee n <= 64.
std::vector<std::uint64_t> closed_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (int u : g.neighbors(v)) m |= std::uint64_t{1} << u;
    masks[v] = m;
  }
  return masks;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

VertexSet mask_to_set(int n, std::uint64_t mask) {
  VertexSet s(n);
  while (mask) {
    s.set(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return s;
}

bool mask_connected(const std::vector<std::uint64_t>& open_adj, std::uint64_t members) {
  if (members == 0) return false;
  std::uint64_t reached = members & (-members);  // least member
  for (;;) {
    std::uint64_t frontier = reached;
    std::uint64_t grown = reached;
    while (frontier) {
      int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      grown |= open_adj[v] & members;
    }
    if (grown == reached) break;
    reached = grown;
  }
  return reached == members;
}

std::vector<std::uint64_t> open_adj_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
  return adj;
}

// Number of pairwise-disjoint closed balls centered at undominated
// vertices; every dominating set needs one distinct vertex per ball.
int disjoint_ball_bound(const std::vector<std::uint64_t>& closed, std::uint64_t undominated) {
  int count = 0;
  std::uint64_t used = 0;
  std::uint64_t rest = undominated;
  while (rest) {
    int u = __builtin_ctzll(rest);
    rest &= rest - 1;
    if (closed[u] & used) continue;
    used |= closed[u];
    ++count;
  }
  return count;
}

struct DominationSearch {
  const std::vector<std::uint64_t>& closed;
  std::uint64_t best_set;
  int best_size;
  std::unordered_map<std::uint64_t, int> memo;

  void run(std::uint64_t undominated, std::uint64_t chosen, int size) {
    if (undominated == 0) {
      if (size < best_size) {
        best_size = size;
        best_set = chosen;
      }
      return;
    }
    if (size + disjoint_ball_bound(closed, undominated) >= best_size) return;
    auto it = memo.find(undominated);
    if (it != memo.end() && it->second <= size) return;
    memo[undominated] = size;
    int u = __builtin_ctzll(undominated);
    std::uint64_t candidates = closed[u];
    while (candidates) {
      int w = __builtin_ctzll(candidates);
      candidates &= candidates - 1;
      run(undominated & ~closed[w], chosen | (std::uint64_t{1} << w), size + 1);
    }
  }
};

}  // namespace

DominatingSetResult greedy_dominating_set(const Graph& g) {
  const int n = g.order();
  DominatingSetResult r{VertexSet(n), 0, false, DominatingSetResult::Method::Greedy};
  VertexSet undominated = VertexSet::full(n);
  while (!undominated.empty()) {
    int best_v = -1, best_cover = -1;
    for (int v = 0; v < n; ++v) {
      VertexSet cover = closed_neighborhood(g, v);
      cover &= undominated;
      int c = cover.count();
      if (c > best_cover) {
        best_cover = c;
        best_v = v;
      }
    }
    r.set.set(best_v);
    undominated.subtract(closed_neighborhood(g, best_v));
  }
  r.size = r.set.count();
  return r;
}

DominatingSetResult min_dominating_set(const Graph& g, int exact_bound) {
  const int n = g.order();
  if (n > exact_bound || n > 64)
    throw size_error("min_dominating_set: order " + std::to_string(n) + " exceeds exact bound " + std::to_string(exact_bound));
  if (n == 0) return {VertexSet(0), 0, true, DominatingSetResult::Method::Exact};

  auto closed = closed_masks(g);
  DominatingSetResult greedy = greedy_dominating_set(g);
  std::uint64_t greedy_mask = 0;
  greedy.set.for_each([&](int v) { greedy_mask |= std::uint64_t{1} << v; });

  DominationSearch search{closed, greedy_mask, greedy.size, {}};
  search.run(full_mask(n), 0, 0);

  return {mask_to_set(n, search.best_set), search.best_size, true, DominatingSetResult::Method::Exact};
}

namespace {

// Builds the tree for a connected dominating set: a BFS tree inside the
// set plus every remaining vertex attached to its least dominator.
SpanningTreeResult tree_from_connected_dominating_set(const Graph& g, std::uint64_t set_mask) {
  const int n = g.order();
  SpanningTreeResult out;
  std::vector<int> tree_degree(n, 0);
  auto add = [&](int u, int v) {
    out.edges.emplace_back(std::min(u, v), std::max(u, v));
    ++tree_degree[u];
    ++tree_degree[v];
  };

  int root = __builtin_ctzll(set_mask);
  std::vector<bool> in_tree(n, false);
  in_tree[root] = true;
  std::vector<int> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int u : g.neighbors(order[i]))
      if (((set_mask >> u) & 1u) && !in_tree[u]) {
        in_tree[u] = true;
        add(order[i], u);
        order.push_back(u);
      }

  for (int v = 0; v < n; ++v) {
    if ((set_mask >> v) & 1u) continue;
    for (int u : g.neighbors(v))
      if ((set_mask >> u) & 1u) {
        add(u, v);
        break;
      }
  }

  out.internal = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if (tree_degree[v] >= 2) out.internal.set(v);
  out.leaf_count = n - out.internal.count();
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

struct ConnectedDominationSearch {
  const Graph& g;
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> open_adj;
  std::vector<std::uint64_t> suffix_cover;
  std::uint64_t full;
  std::uint64_t found = 0;

  explicit ConnectedDominationSearch(const Graph& graph)
      : g(graph), closed(closed_masks(graph)), open_adj(open_adj_masks(graph)), full(full_mask(graph.order())) {
    suffix_cover.assign(g.order() + 1, 0);
    for (int v = g.order() - 1; v >= 0; --v) suffix_cover[v] = suffix_cover[v + 1] | closed[v];
  }

  // Lexicographically least connected dominating set of the target size,
  // or 0 when none exists.
  std::uint64_t find_of_size(int target) {
    found = 0;
    extend(0, 0, 0, target);
    return found;
  }

  bool extend(std::uint64_t chosen, std::uint64_t covered, int next, int remaining) {
    if (remaining == 0) {
      if (covered == full && mask_connected(open_adj, chosen)) {
        found = chosen;
        return true;
      }
      return false;
    }
    for (int v = next; v + remaining <= g.order(); ++v) {
      if ((covered | suffix_cover[v]) != full) return false;  // later picks cannot recover coverage
      if (extend(chosen | (std::uint64_t{1} << v), covered | closed[v], v + 1, remaining - 1)) return true;
    }
    return false;
  }
};

}  // namespace

SpanningTreeResult min_internal_spanning_tree(const Graph& g, int exact_bound) {
  const int n = g.order();
  if (!is_connected(g)) throw input_error("min_internal_spanning_tree: graph is not connected");
  if (n > exact_bound || n > 64)
    throw size_error("min_internal_spanning_tree: order " + std::to_string(n) + " exceeds exact bound " + std::to_string(exact_bound));

  if (n == 1) return {{}, VertexSet(1), 1};
  if (n == 2) return {{{0, 1}}, VertexSet(2), 2};

  ConnectedDominationSearch search(g);
  for (int size = 1; size <= n; ++size)
    if (std::uint64_t set = search.find_of_size(size))
      return tree_from_connected_dominating_set(g, set);
  throw input_error("min_internal_spanning_tree: unreachable for connected input");
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a(n), b(n);
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).set(v);
  return std::make_pair(a, b);
}

LocalIrregularityCheck is_locally_irregular(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.degree(u) == g.degree(v)) return {false, {u, v}};
  return {};
}

TwoColoringCount continuous_two_colorings(const Graph& g, int bound) {
  if (g.order() > bound)
    throw size_error("continuous_two_colorings: order exceeds bound " + std::to_string(bound));
  auto blocks = connected_components(g);
  TwoColoringCount out;
  out.count = std::uint64_t{1} << blocks.size();
  if (blocks.size() >= 2) out.nonconstant_witness = blocks.front();
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) throw input_error("is_two_connected: requires order >= 3");
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = VertexSet::full(g.order());
    rest.reset(v);
    if (!is_connected(induced_subgraph(g, rest).graph)) return false;
  }
  return true;
}

bool is_continuous_map(const VertexFunction& f, const Graph& g, const Graph& h) {
  if (f.domain_size != g.order() || f.codomain_size != h.order())
    throw input_error("is_continuous_map: dimension mismatch");
  for (int v = 0; v < g.order(); ++v) {
    int fv = f(v);
    for (int u : g.neighbors(v))
      if (f(u) != fv && !h.adjacent(f(u), fv)) return false;
  }
  return true;
}

}  // namespace pretop
