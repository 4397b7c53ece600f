#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pretop/graph.hpp"

namespace pretop {

/// adh(A) = N[A].
VertexSet adherence(const Graph& g, const VertexSet& a);

/// adh applied k times; k=0 returns A. Stabilizes at the component
/// closure of A once k reaches the graph order.
VertexSet iterated_adherence(const Graph& g, const VertexSet& a, int k);

/// U is open iff N[v] ⊆ U for every v ∈ U.
bool is_open(const Graph& g, const VertexSet& u);

/// F is closed iff it is a union of connected components.
bool is_closed(const Graph& g, const VertexSet& f);

/// interior(A) = {v ∈ A : N[v] ⊆ A} = complement of adherence of complement.
VertexSet interior(const Graph& g, const VertexSet& a);

/// Topological modification of the graph convergence. Opens are exactly
/// the unions of connected components; the partition is stored instead of
/// the 2^(#blocks) open family.
class Topology {
 public:
  explicit Topology(const Graph& g);

  int space_size() const { return n_; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }

  bool is_open_set(const VertexSet& u) const;

  /// 2^(#blocks); size_error when the count does not fit in 63 bits.
  std::uint64_t opens_count() const;

 private:
  int n_;
  std::vector<VertexSet> blocks_;
};

Topology topological_modification(const Graph& g);

struct TopologicalityCheck {
  bool topological = true;
  /// Least failing triple when not topological (same as is_transitive).
  std::array<int, 3> witness{-1, -1, -1};
};

/// The graph convergence is topological iff the graph is transitive.
TopologicalityCheck is_convergence_topological(const Graph& g);

enum class ConvergenceOrder { Equal, StrictlyFiner, StrictlyCoarser, Incomparable };

/// Position of H's convergence relative to G's, both on the same vertex
/// set. Finer (stronger) means every H-convergent net G-converges, which
/// holds exactly when H is a spanning subgraph of G.
ConvergenceOrder compare_convergence(const Graph& h, const Graph& g);

}  // namespace pretop
