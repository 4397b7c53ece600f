#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pretop/errors.hpp"
#include "pretop/vertex_set.hpp"

namespace pretop {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// No loops, no multi-edges; adjacency is kept symmetric by construction.
/// Values are immutable once built (all mutation goes through add_edge
/// before the graph is shared), so instances are safe to share across
/// threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;

  /// Neighbors of v in ascending order, v excluded.
  const std::vector<int>& neighbors(int v) const;

  /// All edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

  static Graph edgeless(int n) { return Graph(n); }
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  /// Star K_{1,leaves}: vertex 0 is the center.
  static Graph star(int leaves);
  static Graph disjoint_union(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Total function between vertex sets of two graphs.
struct VertexFunction {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> values;

  VertexFunction(int dom, int cod, std::vector<int> vals);

  int operator()(int v) const { return values[v]; }

  static VertexFunction identity(int n);
  static VertexFunction constant(int dom, int cod, int c);
  /// The idx-th function in the lexicographic enumeration of all cod^dom maps.
  static VertexFunction from_index(int dom, int cod, std::uint64_t idx);
  /// cod^dom; throws size_error when it does not fit in 63 bits.
  static std::uint64_t function_count(int dom, int cod);
};

/// Exact rational in lowest terms; only used for step-path breakpoints.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Piecewise-constant path: `pieces[i]` is the value on the i-th constancy
/// interval of (0,1), with `breakpoints` the strictly increasing interval
/// boundaries. Consecutive pieces must be equal or adjacent.
struct StepPath {
  std::vector<int> pieces;
  std::vector<Rational> breakpoints;

  bool valid_in(const Graph& g) const;
};

// ---- operations ----

/// N[v] = adj(v) ∪ {v}.
VertexSet closed_neighborhood(const Graph& g, int v);

/// N[U] = U ∪ ⋃_{v∈U} adj(v).
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u);

/// Categorical (tensor) product: (u,v) ~ (u',v') iff uu'∈E(G) and vv'∈E(H).
/// Pair (u,v) gets index u*order(H)+v.
Graph tensor_product(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside W
  std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

bool is_homomorphism(const VertexFunction& f, const Graph& g, const Graph& h);

/// Path-equivalence classes, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Connected means non-empty and any two vertices joined by a path.
bool is_connected(const Graph& g);

bool is_spanning_subgraph(const Graph& h, const Graph& g);

struct TransitivityCheck {
  bool transitive = true;
  /// Lexicographically least (x,y,z) with xy,yz ∈ E, x≠z, xz ∉ E.
  std::array<int, 3> witness{-1, -1, -1};
};

TransitivityCheck is_transitive(const Graph& g);

// ---- labeled enumeration ----

inline constexpr int kDefaultEnumerationBound = 7;

/// Number of edge slots n(n-1)/2.
int edge_slot_count(int n);

/// 2^(n(n-1)/2); size_error if it exceeds 63 bits.
std::uint64_t labeled_graph_count(int n);

/// Graph whose edge set is the given bit mask over edge slots in
/// lexicographic order (0,1),(0,2),...,(0,n-1),(1,2),...
Graph graph_from_mask(int n, std::uint64_t mask);

/// Streams all 2^(n(n-1)/2) labeled graphs in ascending mask order.
class GraphStream {
 public:
  explicit GraphStream(int n, int max_n = kDefaultEnumerationBound);
  std::optional<Graph> next();
  std::uint64_t total() const { return total_; }

 private:
  int n_;
  std::uint64_t total_;
  std::uint64_t next_mask_ = 0;
};

/// BFS shortest path from u to v as a step path with uniform breakpoints;
/// empty when u and v lie in different components.
std::optional<StepPath> find_path(const Graph& g, int u, int v);

}  // namespace pretop
