#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pretop/graph.hpp"

namespace pretop {

inline constexpr int kExactDominationBound = 32;
inline constexpr int kExactSpanningTreeBound = 20;
inline constexpr int kTwoColoringBound = 20;

struct DominatingSetResult {
  VertexSet set;
  int size = 0;
  bool optimal = false;
  enum class Method { Exact, Greedy } method = Method::Exact;
};

/// Exact minimum dominating set by branch and bound: branch over the
/// closed neighborhood of the least undominated vertex, upper bound from
/// the greedy solver, lower bound from pairwise-disjoint closed balls,
/// memoized on the undominated mask.
DominatingSetResult min_dominating_set(const Graph& g, int exact_bound = kExactDominationBound);

/// Repeatedly pick the vertex covering the most undominated vertices
/// (ties to the least index).
DominatingSetResult greedy_dominating_set(const Graph& g);

struct SpanningTreeResult {
  std::vector<std::pair<int, int>> edges;
  VertexSet internal;  // tree vertices of degree >= 2
  int leaf_count = 0;
};

/// Spanning tree minimizing the number of internal vertices (equivalently
/// maximizing leaves). Exact via search over connected dominating sets:
/// the internal vertices of a spanning tree form a connected dominating
/// set, and any such set extends back to a tree.
SpanningTreeResult min_internal_spanning_tree(const Graph& g, int exact_bound = kExactSpanningTreeBound);

/// Two-coloring by BFS layering; empty when an odd cycle exists. The
/// returned parts (A, B) satisfy N[v] ⊆ B ∪ {v} for v ∈ A and
/// symmetrically.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct LocalIrregularityCheck {
  bool locally_irregular = true;
  std::pair<int, int> witness_edge{-1, -1};  // least edge with equal endpoint degrees
};

LocalIrregularityCheck is_locally_irregular(const Graph& g);

struct TwoColoringCount {
  std::uint64_t count = 0;  // 2^(#components)
  /// A nonconstant continuous coloring (as the preimage of 1) when one
  /// exists, i.e. when the graph is disconnected with at least two blocks.
  std::optional<VertexSet> nonconstant_witness;
};

/// Continuous maps to the discrete two-point space are exactly the maps
/// constant on every component.
TwoColoringCount continuous_two_colorings(const Graph& g, int bound = kTwoColoringBound);

/// Connected and still connected after removing any single vertex.
/// Requires order >= 3.
bool is_two_connected(const Graph& g);

/// f is continuous iff f(N_G[v]) ⊆ N_H[f(v)] for every v; by Theorem
/// cat this coincides with being a homomorphism.
bool is_continuous_map(const VertexFunction& f, const Graph& g, const Graph& h);

}  // namespace pretop
