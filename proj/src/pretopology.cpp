#include "pretop/pretopology.hpp"

namespace pretop {

VertexSet adherence(const Graph& g, const VertexSet& a) {
  return neighborhood_of_set(g, a);
}

VertexSet iterated_adherence(const Graph& g, const VertexSet& a, int k) {
  if (k < 0) throw input_error("iterated_adherence: negative iteration count");
  VertexSet cur = a;
  for (int i = 0; i < k; ++i) {
    VertexSet next = adherence(g, cur);
    if (next == cur) break;  // stabilized
    cur = std::move(next);
  }
  return cur;
}

bool is_open(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order()) throw input_error("is_open: universe mismatch");
  bool open = true;
  u.for_each([&](int v) {
    if (!open) return;
    for (int w : g.neighbors(v))
      if (!u.test(w)) {
        open = false;
        return;
      }
  });
  return open;
}

bool is_closed(const Graph& g, const VertexSet& f) {
  if (f.universe() != g.order()) throw input_error("is_closed: universe mismatch");
  for (const auto& block : connected_components(g)) {
    if (!f.intersects(block)) continue;
    if (!block.is_subset_of(f)) return false;
  }
  return true;
}

VertexSet interior(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.order()) throw input_error("interior: universe mismatch");
  VertexSet out(g.order());
  a.for_each([&](int v) {
    if (closed_neighborhood(g, v).is_subset_of(a)) out.set(v);
  });
  return out;
}

Topology::Topology(const Graph& g) : n_(g.order()), blocks_(connected_components(g)) {}

bool Topology::is_open_set(const VertexSet& u) const {
  if (u.universe() != n_) throw input_error("Topology: universe mismatch");
  for (const auto& block : blocks_)
    if (u.intersects(block) && !block.is_subset_of(u)) return false;
  return true;
}

std::uint64_t Topology::opens_count() const {
  if (blocks_.size() > 62) throw size_error("Topology: open family exceeds 63-bit count");
  return std::uint64_t{1} << blocks_.size();
}

Topology topological_modification(const Graph& g) {
  return Topology(g);
}

TopologicalityCheck is_convergence_topological(const Graph& g) {
  auto t = is_transitive(g);
  return {t.transitive, t.witness};
}

ConvergenceOrder compare_convergence(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) throw input_error("compare_convergence: vertex-count mismatch");
  bool h_finer = is_spanning_subgraph(h, g);  // E(H) ⊆ E(G)
  bool g_finer = is_spanning_subgraph(g, h);
  if (h_finer && g_finer) return ConvergenceOrder::Equal;
  if (h_finer) return ConvergenceOrder::StrictlyFiner;
  if (g_finer) return ConvergenceOrder::StrictlyCoarser;
  return ConvergenceOrder::Incomparable;
}

}  // namespace pretop
