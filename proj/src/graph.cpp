#include "pretop/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace pretop {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw input_error("Graph: negative order");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw input_error("Graph: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw input_error("Graph: loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

VertexFunction::VertexFunction(int dom, int cod, std::vector<int> vals)
    : domain_size(dom), codomain_size(cod), values(std::move(vals)) {
  if (dom < 0 || cod < 0 || static_cast<int>(values.size()) != dom)
    throw input_error("VertexFunction: value table does not match domain size");
  for (int y : values)
    if (y < 0 || y >= cod) throw input_error("VertexFunction: value outside codomain");
}

VertexFunction VertexFunction::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return VertexFunction(n, n, std::move(v));
}

VertexFunction VertexFunction::constant(int dom, int cod, int c) {
  return VertexFunction(dom, cod, std::vector<int>(dom, c));
}

VertexFunction VertexFunction::from_index(int dom, int cod, std::uint64_t idx) {
  std::vector<int> vals(dom);
  for (int i = 0; i < dom; ++i) {
    vals[i] = static_cast<int>(idx % cod);
    idx /= cod;
  }
  return VertexFunction(dom, cod, std::move(vals));
}

std::uint64_t VertexFunction::function_count(int dom, int cod) {
  std::uint64_t c = 1;
  for (int i = 0; i < dom; ++i) {
    if (cod != 0 && c > (std::uint64_t{1} << 62) / cod)
      throw size_error("function_count: cod^dom exceeds 63 bits");
    c *= static_cast<std::uint64_t>(cod);
  }
  return c;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw input_error("Rational: zero denominator");
  long long g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

bool StepPath::valid_in(const Graph& g) const {
  if (pieces.empty()) return false;
  if (breakpoints.size() + 1 != pieces.size()) return false;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto& a = breakpoints[i];
    const auto& b = breakpoints[i + 1];
    if (a.num * b.den >= b.num * a.den) return false;
  }
  for (const auto& t : breakpoints)
    if (t.num <= 0 || t.num >= t.den) return false;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (pieces[i] != pieces[i + 1] && !g.adjacent(pieces[i], pieces[i + 1])) return false;
  return true;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s(g.order());
  s.set(v);
  for (int u : g.neighbors(v)) s.set(u);
  return s;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order()) throw input_error("neighborhood_of_set: universe mismatch");
  VertexSet s = u;
  u.for_each([&](int v) {
    for (int w : g.neighbors(v)) s.set(w);
  });
  return s;
}

Graph tensor_product(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.order()) * h.order();
  if (n > (1LL << 30)) throw size_error("tensor_product: vertex count overflow");
  Graph p(static_cast<int>(n));
  for (auto [u, u2] : g.edges())
    for (auto [v, v2] : h.edges()) {
      // uu'∈E(G), vv'∈E(H) yields both (u,v)-(u',v') and (u,v')-(u',v)
      p.add_edge(u * h.order() + v, u2 * h.order() + v2);
      p.add_edge(u * h.order() + v2, u2 * h.order() + v);
    }
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order()) throw input_error("induced_subgraph: universe mismatch");
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), -1);
  w.for_each([&](int v) {
    out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  });
  out.graph = Graph(static_cast<int>(out.new_to_old.size()));
  for (int nv = 0; nv < static_cast<int>(out.new_to_old.size()); ++nv)
    for (int u : g.neighbors(out.new_to_old[nv]))
      if (out.old_to_new[u] > nv) out.graph.add_edge(nv, out.old_to_new[u]);
  return out;
}

bool is_homomorphism(const VertexFunction& f, const Graph& g, const Graph& h) {
  if (f.domain_size != g.order() || f.codomain_size != h.order())
    throw input_error("is_homomorphism: dimension mismatch");
  for (auto [x, y] : g.edges()) {
    if (f(x) == f(y)) return false;  // no loops in H
    if (!h.adjacent(f(x), f(y))) return false;
  }
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> blocks;
  std::vector<bool> seen(g.order(), false);
  for (int r = 0; r < g.order(); ++r) {
    if (seen[r]) continue;
    VertexSet block(g.order());
    std::queue<int> q;
    q.push(r);
    seen[r] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      block.set(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const Graph& g) {
  return g.order() >= 1 && connected_components(g).size() == 1;
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  for (auto [u, v] : h.edges())
    if (!g.adjacent(u, v)) return false;
  return true;
}

TransitivityCheck is_transitive(const Graph& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y : g.neighbors(x))
      for (int z : g.neighbors(y))
        if (z != x && !g.adjacent(x, z)) return {false, {x, y, z}};
  return {};
}

int edge_slot_count(int n) {
  return n * (n - 1) / 2;
}

std::uint64_t labeled_graph_count(int n) {
  int slots = edge_slot_count(n);
  if (slots > 62) throw size_error("labeled_graph_count: 2^" + std::to_string(slots) + " exceeds 63 bits");
  return std::uint64_t{1} << slots;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++slot)
      if ((mask >> slot) & 1u) g.add_edge(u, v);
  return g;
}

GraphStream::GraphStream(int n, int max_n) : n_(n) {
  if (n > max_n)
    throw size_error("GraphStream: n=" + std::to_string(n) + " exceeds enumeration bound " + std::to_string(max_n));
  total_ = labeled_graph_count(n);
}

std::optional<Graph> GraphStream::next() {
  if (next_mask_ >= total_) return std::nullopt;
  return graph_from_mask(n_, next_mask_++);
}

std::optional<StepPath> find_path(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw input_error("find_path: vertex out of range");
  std::vector<int> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::queue<int> q;
  q.push(u);
  seen[u] = true;
  while (!q.empty() && !seen[v]) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        q.push(y);
      }
  }
  if (!seen[v]) return std::nullopt;
  StepPath path;
  for (int x = v; x != -1; x = parent[x]) path.pieces.push_back(x);
  std::reverse(path.pieces.begin(), path.pieces.end());
  auto len = static_cast<long long>(path.pieces.size());
  for (long long i = 1; i < len; ++i) path.breakpoints.emplace_back(i, len);
  return path;
}

}  // namespace pretop
