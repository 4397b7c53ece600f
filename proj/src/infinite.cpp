#include "pretop/infinite.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace pretop {

std::string TriVerdict::kind_name() const {
  switch (kind) {
    case Kind::Verified: return "Verified";
    case Kind::Refuted: return "Refuted";
    default: return "UnknownUpTo(" + std::to_string(bound) + ")";
  }
}

namespace {

Neighborhood finite_nbhd(std::vector<long long> vs) {
  Neighborhood nb;
  std::sort(vs.begin(), vs.end());
  nb.finite_part = std::move(vs);
  return nb;
}

Neighborhood infinite_nbhd(std::vector<long long> exceptional, std::function<bool(long long)> member) {
  Neighborhood nb;
  nb.infinite = true;
  nb.finite_part = std::move(exceptional);
  nb.member = std::move(member);
  return nb;
}

long long checked(long long v) {
  if (v < 0) throw input_error("oracle vertex must be a natural number");
  return v;
}

Family ray_family() {
  Family f;
  f.name = "ray";
  f.description = "one-way infinite path 0-1-2-...";
  f.oracle.neighbors = [](long long v) {
    checked(v);
    std::vector<long long> ns;
    if (v > 0) ns.push_back(v - 1);
    ns.push_back(v + 1);
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v); };
  f.oracle.level_members = [](long long l) { return std::vector<long long>{l}; };
  f.oracle.level_size = [](long long) -> unsigned long long { return 1; };
  f.oracle.locally_finite = true;
  f.oracle.root = 0;
  f.escape_witness = [](const std::vector<long long>& d) {
    long long m = -1;
    for (long long v : d) m = std::max(m, v);
    return m + 2;
  };
  f.non_domination_tag = "locally finite and infinite: any finite D dominates only vertices up to max(D)+1";
  f.end_count = 1;
  f.edge_end_count = 1;
  return f;
}

// Integer line folded onto the naturals: 0, then 1,2 at distance 1, ...
long long double_ray_index(long long z) { return z == 0 ? 0 : (z > 0 ? 2 * z - 1 : -2 * z); }
long long double_ray_pos(long long i) { return i == 0 ? 0 : (i % 2 == 1 ? (i + 1) / 2 : -i / 2); }

Family double_ray_family() {
  Family f;
  f.name = "doubleray";
  f.description = "two-way infinite path";
  f.oracle.neighbors = [](long long v) {
    long long z = double_ray_pos(checked(v));
    return finite_nbhd({double_ray_index(z - 1), double_ray_index(z + 1)});
  };
  f.oracle.level = [](long long v) { return std::abs(double_ray_pos(checked(v))); };
  f.oracle.level_members = [](long long l) {
    return l == 0 ? std::vector<long long>{0} : std::vector<long long>{2 * l - 1, 2 * l};
  };
  f.oracle.level_size = [](long long l) -> unsigned long long { return l == 0 ? 1 : 2; };
  f.oracle.locally_finite = true;
  f.oracle.root = 0;
  f.escape_witness = [](const std::vector<long long>& d) {
    long long m = 0;
    for (long long v : d) m = std::max(m, std::abs(double_ray_pos(v)));
    return double_ray_index(m + 2);
  };
  f.non_domination_tag = "locally finite and infinite: any finite D reaches only a bounded segment";
  f.end_count = 2;
  f.edge_end_count = 2;
  RayPair pair;
  pair.a = {"forward", [](long long i) { return double_ray_index(i + 1); }};
  pair.b = {"backward", [](long long i) { return double_ray_index(-(i + 1)); }};
  pair.vertex_cert = {false, {0}, {}, "removing the origin separates the two half-lines"};
  pair.edge_cert = {false, {}, {{0, 1}}, "removing the first forward edge separates the half-lines"};
  f.canonical_pairs.push_back(std::move(pair));
  return f;
}

Family comb_family() {
  Family f;
  f.name = "comb";
  f.description = "spine ray with one pendant tooth per spine vertex";
  f.oracle.neighbors = [](long long v) {
    checked(v);
    if (v % 2 == 1) return finite_nbhd({v - 1});  // tooth hangs off its spine vertex
    long long i = v / 2;
    std::vector<long long> ns{v + 1};
    if (i > 0) ns.push_back(2 * (i - 1));
    ns.push_back(2 * (i + 1));
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v) / 2; };
  f.oracle.level_members = [](long long l) { return std::vector<long long>{2 * l, 2 * l + 1}; };
  f.oracle.level_size = [](long long) -> unsigned long long { return 2; };
  f.oracle.locally_finite = true;
  f.oracle.root = 0;
  f.escape_witness = [](const std::vector<long long>& d) {
    long long m = 0;
    for (long long v : d) m = std::max(m, v / 2);
    return 2 * (m + 2) + 1;  // a tooth beyond every dominator
  };
  f.non_domination_tag = "locally finite and infinite: teeth beyond max(D)+2 stay undominated";
  f.end_count = 1;
  f.edge_end_count = 1;
  return f;
}

Family binary_tree_family() {
  Family f;
  f.name = "binarytree";
  f.description = "rooted infinite binary tree";
  f.oracle.neighbors = [](long long v) {
    checked(v);
    std::vector<long long> ns{2 * v + 1, 2 * v + 2};
    if (v > 0) ns.push_back((v - 1) / 2);
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) {
    checked(v);
    long long d = 0;
    while (v > 0) {
      v = (v - 1) / 2;
      ++d;
    }
    return d;
  };
  f.oracle.level_members = [](long long l) {
    std::vector<long long> out;
    long long first = (1LL << l) - 1;
    for (long long v = first; v <= 2 * first; ++v) out.push_back(v);
    return out;
  };
  f.oracle.level_size = [](long long l) -> unsigned long long {
    return l >= 63 ? std::numeric_limits<unsigned long long>::max() : (1ULL << l);
  };
  f.oracle.locally_finite = true;
  f.oracle.root = 0;
  f.escape_witness = [&](const std::vector<long long>& d) {
    long long dmax = 0;
    auto depth = [](long long v) {
      long long k = 0;
      while (v > 0) {
        v = (v - 1) / 2;
        ++k;
      }
      return k;
    };
    for (long long v : d) dmax = std::max(dmax, depth(v));
    return (1LL << (dmax + 2)) - 1;  // leftmost vertex two levels below every dominator
  };
  f.non_domination_tag = "locally finite and infinite: vertices below depth max(D)+1 stay undominated";
  f.end_count = std::nullopt;
  f.edge_end_count = std::nullopt;
  return f;
}

Family fan_ray_family() {
  Family f;
  f.name = "fanray";
  f.description = "ray plus an apex adjacent to every ray vertex";
  f.oracle.neighbors = [](long long v) {
    checked(v);
    if (v == 0) return infinite_nbhd({}, [](long long u) { return u >= 1; });
    std::vector<long long> ns{0, v + 1};
    if (v > 1) ns.push_back(v - 1);
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v) == 0 ? 0 : v - 1; };
  f.oracle.level_members = [](long long l) {
    return l == 0 ? std::vector<long long>{0, 1} : std::vector<long long>{l + 1};
  };
  f.oracle.level_size = [](long long l) -> unsigned long long { return l == 0 ? 2 : 1; };
  f.oracle.locally_finite = false;
  f.oracle.root = 0;
  f.dominating_set = std::vector<long long>{0};
  f.end_count = 1;
  f.edge_end_count = 1;
  return f;
}

Family star_of_rays_family(int k) {
  if (k < 1) throw input_error("starofrays: needs at least one ray");
  Family f;
  f.name = "starofrays";
  f.description = std::to_string(k) + " rays from a common center, one dominating apex per ray";
  const long long kk = k;
  auto fan_of = [kk](long long v) { return (v - 1 - kk) % kk; };       // ray vertices only
  auto pos_of = [kk](long long v) { return (v - 1 - kk) / kk; };
  auto ray_vertex = [kk](long long fan, long long i) { return 1 + kk + i * kk + fan; };
  f.oracle.neighbors = [kk, fan_of, pos_of, ray_vertex](long long v) {
    checked(v);
    if (v == 0) {  // center: apexes and first ray vertices
      std::vector<long long> ns;
      for (long long j = 0; j < kk; ++j) {
        ns.push_back(1 + j);
        ns.push_back(ray_vertex(j, 0));
      }
      return finite_nbhd(std::move(ns));
    }
    if (v <= kk) {  // apex j dominates its entire ray and the center
      long long j = v - 1;
      return infinite_nbhd({0}, [kk, j](long long u) { return u >= 1 + kk && (u - 1 - kk) % kk == j; });
    }
    long long j = fan_of(v), i = pos_of(v);
    std::vector<long long> ns{1 + j, ray_vertex(j, i + 1)};
    ns.push_back(i == 0 ? 0 : ray_vertex(j, i - 1));
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [kk, pos_of](long long v) { return checked(v) <= kk ? 0 : pos_of(v) + 1; };
  f.oracle.level_members = [kk, ray_vertex](long long l) {
    std::vector<long long> out;
    if (l == 0) {
      for (long long v = 0; v <= kk; ++v) out.push_back(v);
    } else {
      for (long long j = 0; j < kk; ++j) out.push_back(ray_vertex(j, l - 1));
    }
    return out;
  };
  f.oracle.level_size = [kk](long long l) -> unsigned long long {
    return l == 0 ? static_cast<unsigned long long>(kk + 1) : static_cast<unsigned long long>(kk);
  };
  f.oracle.locally_finite = false;
  f.oracle.root = 0;
  std::vector<long long> apexes;
  for (long long j = 0; j < kk; ++j) apexes.push_back(1 + j);
  f.dominating_set = apexes;
  f.end_count = k;
  f.edge_end_count = k;
  if (k >= 2) {
    RayPair pair;
    pair.a = {"ray0", [ray_vertex](long long i) { return ray_vertex(0, i); }};
    pair.b = {"ray1", [ray_vertex](long long i) { return ray_vertex(1, i); }};
    pair.vertex_cert = {false, {0}, {}, "all paths between distinct fans pass the center"};
    pair.edge_cert = {false, {}, {{0, 1}, {0, 1 + kk}}, "cutting the center's two edges into fan 0 isolates it"};
    f.canonical_pairs.push_back(std::move(pair));
  }
  return f;
}

Family dominated_ladder_family() {
  Family f;
  f.name = "dominatedladder";
  f.description = "three parallel rays joined by rungs, two apexes covering assigned rows";
  auto row_vertex = [](long long r, long long i) { return 2 + 3 * i + r; };
  f.oracle.neighbors = [row_vertex](long long v) {
    checked(v);
    if (v == 0) return infinite_nbhd({}, [](long long u) { return u >= 2 && (u - 2) % 3 <= 1; });
    if (v == 1) return infinite_nbhd({}, [](long long u) { return u >= 2 && (u - 2) % 3 == 2; });
    long long r = (v - 2) % 3, i = (v - 2) / 3;
    std::vector<long long> ns{row_vertex(r, i + 1), r <= 1 ? 0 : 1};
    if (i > 0) ns.push_back(row_vertex(r, i - 1));
    if (r >= 1) ns.push_back(row_vertex(r - 1, i));  // rung up
    if (r <= 1) ns.push_back(row_vertex(r + 1, i));  // rung down
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v) <= 1 ? 0 : (v - 2) / 3; };
  f.oracle.level_members = [row_vertex](long long l) {
    std::vector<long long> out;
    if (l == 0) out = {0, 1};
    for (long long r = 0; r < 3; ++r) out.push_back(row_vertex(r, l));
    return out;
  };
  f.oracle.level_size = [](long long l) -> unsigned long long { return l == 0 ? 5 : 3; };
  f.oracle.locally_finite = false;
  f.oracle.root = 0;
  f.dominating_set = std::vector<long long>{0, 1};
  f.end_count = 1;
  f.edge_end_count = 1;
  RayPair pair;
  pair.a = {"row0", [row_vertex](long long i) { return row_vertex(0, i); }};
  pair.b = {"row1", [row_vertex](long long i) { return row_vertex(1, i); }};
  pair.vertex_cert = {true, {}, {}, "rungs give arbitrarily many disjoint connections"};
  pair.edge_cert = {true, {}, {}, "rungs give arbitrarily many edge-disjoint connections"};
  f.canonical_pairs.push_back(std::move(pair));
  return f;
}

Family ladder_family() {
  Family f;
  f.name = "ladder";
  f.description = "two parallel rails joined by a rung at every step";
  auto rail_vertex = [](long long r, long long i) { return 2 * i + r; };
  f.oracle.neighbors = [rail_vertex](long long v) {
    checked(v);
    long long r = v % 2, i = v / 2;
    std::vector<long long> ns{rail_vertex(r, i + 1), rail_vertex(1 - r, i)};
    if (i > 0) ns.push_back(rail_vertex(r, i - 1));
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v) / 2; };
  f.oracle.level_members = [](long long l) { return std::vector<long long>{2 * l, 2 * l + 1}; };
  f.oracle.level_size = [](long long) -> unsigned long long { return 2; };
  f.oracle.locally_finite = true;
  f.oracle.root = 0;
  f.escape_witness = [](const std::vector<long long>& d) {
    long long m = 0;
    for (long long v : d) m = std::max(m, v / 2);
    return 2 * (m + 2);
  };
  f.non_domination_tag = "locally finite and infinite: rungs beyond max(D)+2 stay undominated";
  f.end_count = 1;
  f.edge_end_count = 1;
  RayPair pair;
  pair.a = {"rail0", [rail_vertex](long long i) { return rail_vertex(0, i); }};
  pair.b = {"rail1", [rail_vertex](long long i) { return rail_vertex(1, i); }};
  pair.vertex_cert = {true, {}, {}, "rungs give arbitrarily many disjoint connections"};
  pair.edge_cert = {true, {}, {}, "rungs give arbitrarily many edge-disjoint connections"};
  f.canonical_pairs.push_back(std::move(pair));
  return f;
}

Family hub_rays_family() {
  Family f;
  f.name = "hubrays";
  f.description = "two rays, every vertex adjacent to one hub";
  auto ray_vertex = [](long long r, long long i) { return 1 + 2 * i + r; };
  f.oracle.neighbors = [ray_vertex](long long v) {
    checked(v);
    if (v == 0) return infinite_nbhd({}, [](long long u) { return u >= 1; });
    long long r = (v - 1) % 2, i = (v - 1) / 2;
    std::vector<long long> ns{0, ray_vertex(r, i + 1)};
    if (i > 0) ns.push_back(ray_vertex(r, i - 1));
    return finite_nbhd(std::move(ns));
  };
  f.oracle.level = [](long long v) { return checked(v) == 0 ? 0 : (v - 1) / 2; };
  f.oracle.level_members = [](long long l) {
    return l == 0 ? std::vector<long long>{0, 1, 2} : std::vector<long long>{2 * l + 1, 2 * l + 2};
  };
  f.oracle.level_size = [](long long l) -> unsigned long long { return l == 0 ? 3 : 2; };
  f.oracle.locally_finite = false;
  f.oracle.root = 0;
  f.dominating_set = std::vector<long long>{0};
  f.end_count = 2;       // the hub is a cutvertex between the rays
  f.edge_end_count = 1;  // but no finite edge set separates them
  RayPair pair;
  pair.a = {"raya", [ray_vertex](long long i) { return ray_vertex(0, i); }};
  pair.b = {"rayb", [ray_vertex](long long i) { return ray_vertex(1, i); }};
  pair.vertex_cert = {false, {0}, {}, "every path between the rays passes the hub"};
  pair.edge_cert = {true, {}, {}, "the hub has infinitely many edges into both rays"};
  f.canonical_pairs.push_back(std::move(pair));
  return f;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "ray", "doubleray", "comb", "binarytree", "starofrays",
      "fanray", "dominatedladder", "ladder", "hubrays"};
  return names;
}

Family make_family(const std::string& name, int rays) {
  if (name == "ray") return ray_family();
  if (name == "doubleray") return double_ray_family();
  if (name == "comb") return comb_family();
  if (name == "binarytree") return binary_tree_family();
  if (name == "starofrays") return star_of_rays_family(rays);
  if (name == "fanray") return fan_ray_family();
  if (name == "dominatedladder") return dominated_ladder_family();
  if (name == "ladder") return ladder_family();
  if (name == "hubrays") return hub_rays_family();
  throw input_error("unknown family: " + name);
}

Truncation truncate(const OracleGraph& o, long long radius, long long vertex_cap) {
  if (radius < 0) throw input_error("truncate: negative radius");

  unsigned long long budget = 0;
  for (long long l = 0; l <= radius; ++l) {
    unsigned long long s = o.level_size(l);
    if (s > static_cast<unsigned long long>(vertex_cap) || budget + s > static_cast<unsigned long long>(vertex_cap))
      throw size_error("truncate: window at radius " + std::to_string(radius) + " exceeds vertex cap " + std::to_string(vertex_cap));
    budget += s;
  }

  // window candidates: all vertices of level <= radius
  std::set<long long> window;
  for (long long l = 0; l <= radius; ++l)
    for (long long v : o.level_members(l)) window.insert(v);
  if (!window.count(o.root)) throw input_error("truncate: root outside its own level window");

  auto neighbors_in_window = [&](long long u) {
    std::vector<long long> out;
    Neighborhood nb = o.neighbors(u);
    if (nb.contains(u)) throw input_error("truncate: oracle reports a loop at " + std::to_string(u));
    if (nb.infinite && o.locally_finite)
      throw input_error("truncate: locally_finite flag contradicts infinite neighborhood at " + std::to_string(u));
    if (!nb.infinite) {
      for (long long v : nb.finite_part)
        if (window.count(v)) out.push_back(v);
    } else {
      for (long long v : window)
        if (v != u && nb.contains(v)) out.push_back(v);
    }
    return out;
  };

  // connected part of the window around the root
  std::set<long long> reached{o.root};
  std::queue<long long> q;
  q.push(o.root);
  while (!q.empty()) {
    long long u = q.front();
    q.pop();
    for (long long v : neighbors_in_window(u))
      if (reached.insert(v).second) q.push(v);
  }

  Truncation tr;
  tr.radius = radius;
  tr.new_to_old.assign(reached.begin(), reached.end());
  for (std::size_t i = 0; i < tr.new_to_old.size(); ++i)
    tr.old_to_new[tr.new_to_old[i]] = static_cast<int>(i);
  tr.graph = Graph(static_cast<int>(tr.new_to_old.size()));
  for (std::size_t i = 0; i < tr.new_to_old.size(); ++i) {
    long long u = tr.new_to_old[i];
    for (long long v : neighbors_in_window(u)) {
      auto it = tr.old_to_new.find(v);
      if (it == tr.old_to_new.end()) continue;
      if (static_cast<int>(i) < it->second) {
        if (!o.neighbors(v).contains(u))
          throw input_error("truncate: oracle asymmetry between " + std::to_string(u) + " and " + std::to_string(v));
        tr.graph.add_edge(static_cast<int>(i), it->second);
      }
    }
  }
  return tr;
}

namespace {

bool oracle_dominated(const OracleGraph& o, long long v, const std::vector<long long>& d) {
  for (long long u : d)
    if (u == v || o.adjacent(u, v)) return true;
  return false;
}

}  // namespace

TriVerdict is_dominating_oracle(const Family& f, const std::vector<long long>& d, long long bound) {
  Truncation tr = truncate(f.oracle, bound);
  for (long long v : tr.new_to_old)
    if (!oracle_dominated(f.oracle, v, d)) {
      TriVerdict out;
      out.kind = TriVerdict::Kind::Refuted;
      out.witness = v;
      out.bound = bound;
      out.detail = "window vertex " + std::to_string(v) + " outside N[D]";
      return out;
    }
  if (f.dominating_set) {
    bool covers = true;
    for (long long c : *f.dominating_set)
      if (std::find(d.begin(), d.end(), c) == d.end()) covers = false;
    if (covers) {
      TriVerdict out;
      out.kind = TriVerdict::Kind::Verified;
      out.certificate = d;
      out.bound = bound;
      out.detail = "D contains the family's analytic dominating certificate";
      return out;
    }
  }
  if (f.escape_witness) {
    long long w = f.escape_witness(d);
    if (!oracle_dominated(f.oracle, w, d)) {
      TriVerdict out;
      out.kind = TriVerdict::Kind::Refuted;
      out.witness = w;
      out.bound = bound;
      out.detail = f.non_domination_tag;
      return out;
    }
  }
  TriVerdict out;
  out.kind = TriVerdict::Kind::Unknown;
  out.bound = bound;
  out.detail = "window clean but no certificate applies";
  return out;
}

TriVerdict is_compact(const Family& f) {
  TriVerdict out;
  if (f.dominating_set) {
    // sanity: the certificate must dominate the default window
    Truncation tr = truncate(f.oracle, kDefaultTruncationRadius);
    for (long long v : tr.new_to_old)
      if (!oracle_dominated(f.oracle, v, *f.dominating_set))
        throw input_error("family " + f.name + ": certificate fails on window vertex " + std::to_string(v));
    out.kind = TriVerdict::Kind::Verified;
    out.certificate = *f.dominating_set;
    out.bound = kDefaultTruncationRadius;
    out.detail = "analytic dominating set of size " + std::to_string(f.dominating_set->size());
    return out;
  }
  out.kind = TriVerdict::Kind::Refuted;
  out.witness = f.escape_witness ? f.escape_witness({}) : -1;
  out.bound = kDefaultTruncationRadius;
  out.detail = f.non_domination_tag;
  return out;
}

namespace {

// Dinic with small integer capacities; node count stays in the hundreds.
struct MaxFlow {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> dist, it;

  explicit MaxFlow(int n) : g(n) {}

  void add(int u, int v, int cap) {
    g[u].push_back({v, cap, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0, static_cast<int>(g[u].size()) - 1});
  }

  bool bfs(int s, int t) {
    dist.assign(g.size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : g[u])
        if (a.cap > 0 && dist[a.to] < 0) {
          dist[a.to] = dist[u] + 1;
          q.push(a.to);
        }
    }
    return dist[t] >= 0;
  }

  int dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& i = it[u]; i < static_cast<int>(g[u].size()); ++i) {
      Arc& a = g[u][i];
      if (a.cap > 0 && dist[a.to] == dist[u] + 1) {
        int pushed = dfs(a.to, t, std::min(limit, a.cap));
        if (pushed > 0) {
          a.cap -= pushed;
          g[a.to][a.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      it.assign(g.size(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }
};

// Tail vertices of a ray inside the window, starting at the given depth;
// validates the ray along the way.
std::vector<int> ray_tail_indices(const OracleGraph& o, const Truncation& tr, const Ray& r, long long depth) {
  std::vector<int> out;
  std::set<long long> seen;
  for (long long i = 0;; ++i) {
    long long v = r.at(i);
    if (tr.index_of(v) < 0) break;
    if (!seen.insert(v).second) throw input_error("ray " + r.name + ": repeated vertex " + std::to_string(v));
    if (i > 0 && !o.adjacent(r.at(i - 1), v))
      throw input_error("ray " + r.name + ": consecutive vertices not adjacent at position " + std::to_string(i));
    if (i >= depth) out.push_back(tr.index_of(v));
  }
  return out;
}

int disjoint_path_count(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks, RayMode mode) {
  const int n = g.order();
  const int big = n + 2;
  if (mode == RayMode::Vertex) {
    // split vertices: in = 2v, out = 2v+1
    MaxFlow mf(2 * n + 2);
    int s = 2 * n, t = 2 * n + 1;
    for (int v = 0; v < n; ++v) mf.add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      mf.add(2 * u + 1, 2 * v, big);
      mf.add(2 * v + 1, 2 * u, big);
    }
    for (int v : sources) mf.add(s, 2 * v, 1);
    for (int v : sinks) mf.add(2 * v + 1, t, 1);
    return mf.run(s, t);
  }
  MaxFlow mf(n + 2);
  int s = n, t = n + 1;
  for (auto [u, v] : g.edges()) {
    mf.add(u, v, 1);
    mf.add(v, u, 1);
  }
  for (int v : sources) mf.add(s, v, big);
  for (int v : sinks) mf.add(v, t, big);
  return mf.run(s, t);
}

}  // namespace

TriVerdict rays_equivalent(const OracleGraph& o, const Ray& r1, const Ray& r2, RayMode mode, int k,
                           long long bound, const PairCertificate* cert) {
  if (k < 1) throw input_error("rays_equivalent: k must be positive");
  Truncation tr = truncate(o, bound);
  int min_flow = std::numeric_limits<int>::max();
  std::string depths_used;
  for (long long depth : {8LL, 16LL, 32LL}) {
    if (depth >= bound) continue;
    auto sources = ray_tail_indices(o, tr, r1, depth);
    auto sinks = ray_tail_indices(o, tr, r2, depth);
    if (sources.empty() || sinks.empty())
      throw size_error("rays_equivalent: ray tail at depth " + std::to_string(depth) + " leaves the truncation window");
    min_flow = std::min(min_flow, disjoint_path_count(tr.graph, sources, sinks, mode));
    depths_used += (depths_used.empty() ? "" : ",") + std::to_string(depth);
  }
  if (min_flow == std::numeric_limits<int>::max())
    throw size_error("rays_equivalent: bound too small for any tail depth");

  TriVerdict out;
  out.bound = bound;
  if (min_flow >= k) {
    out.kind = TriVerdict::Kind::Verified;
    out.detail = "level " + std::to_string(k) + ": >= " + std::to_string(k) + " disjoint paths at tail depths {" + depths_used + "} (window flow " + std::to_string(min_flow) + ")";
    return out;
  }
  if (cert) {
    if (cert->equivalent) {
      out.kind = TriVerdict::Kind::Verified;
      out.detail = "family certificate: " + cert->reason;
      return out;
    }
    if (cert->separator_size(mode) < static_cast<std::size_t>(k)) {
      out.kind = TriVerdict::Kind::Refuted;
      out.certificate = cert->separator_vertices;
      out.detail = "family-certified separator of size " + std::to_string(cert->separator_size(mode)) + ": " + cert->reason;
      return out;
    }
  }
  out.kind = TriVerdict::Kind::Unknown;
  out.detail = "window flow " + std::to_string(min_flow) + " below level " + std::to_string(k) + " without an applicable certificate";
  return out;
}

EdgeEndBoundReport edge_end_bound_check(const Family& f) {
  if (!f.dominating_set) throw input_error("edge_end_bound_check: family " + f.name + " is not compact");
  if (!f.edge_end_count) throw input_error("edge_end_bound_check: family " + f.name + " lacks a declared edge-end count");
  EdgeEndBoundReport r;
  r.edge_end_count = *f.edge_end_count;
  r.dominating_size = static_cast<long long>(f.dominating_set->size());
  r.holds = r.edge_end_count <= r.dominating_size;
  return r;
}

RaylessTreeResult rayless_spanning_tree(const Family& f, long long radius) {
  if (!f.dominating_set) throw input_error("rayless_spanning_tree: family " + f.name + " is not compact");
  Truncation tr = truncate(f.oracle, radius);
  const int n = tr.graph.order();
  const auto& dom = *f.dominating_set;

  std::vector<int> block(n, -1);
  for (std::size_t j = 0; j < dom.size(); ++j) {
    int idx = tr.index_of(dom[j]);
    if (idx < 0) throw size_error("rayless_spanning_tree: dominating vertex outside window");
    block[idx] = static_cast<int>(j);
  }

  RaylessTreeResult out;
  out.window_size = n;
  std::vector<int> degree(n, 0);
  auto add_edge = [&](int u, int v) {
    out.edges.emplace_back(std::min(tr.new_to_old[u], tr.new_to_old[v]),
                           std::max(tr.new_to_old[u], tr.new_to_old[v]));
    ++degree[u];
    ++degree[v];
  };

  // star forest: every vertex hangs off its least dominator
  for (int v = 0; v < n; ++v) {
    if (block[v] >= 0) continue;
    int parent = -1;
    for (long long d : dom) {
      int di = tr.index_of(d);
      if (di >= 0 && tr.graph.adjacent(v, di) && (parent < 0 || tr.new_to_old[di] < tr.new_to_old[parent]))
        parent = di;
    }
    if (parent < 0)
      throw input_error("rayless_spanning_tree: window vertex " + std::to_string(tr.new_to_old[v]) + " not dominated by the certificate");
    block[v] = block[parent];
    add_edge(parent, v);
  }

  // merge blocks along the least connecting edges (stable across radii:
  // the least edges live in every window)
  std::vector<int> head(dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) head[j] = static_cast<int>(j);
  std::function<int(int)> find = [&](int x) { return head[x] == x ? x : head[x] = find(head[x]); };
  auto window_edges = tr.graph.edges();
  std::vector<std::pair<std::pair<long long, long long>, std::pair<int, int>>> sorted;
  sorted.reserve(window_edges.size());
  for (auto [u, v] : window_edges)
    sorted.push_back({{std::min(tr.new_to_old[u], tr.new_to_old[v]), std::max(tr.new_to_old[u], tr.new_to_old[v])}, {u, v}});
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [key, e] : sorted) {
    int bu = find(block[e.first]), bv = find(block[e.second]);
    if (bu == bv) continue;
    head[std::max(bu, bv)] = std::min(bu, bv);
    add_edge(e.first, e.second);
  }

  for (int v = 0; v < n; ++v)
    if (degree[v] >= 2) out.internal.push_back(tr.new_to_old[v]);
  std::sort(out.internal.begin(), out.internal.end());
  out.leaf_count = n - static_cast<long long>(out.internal.size());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

EventualFinitenessReport eventually_finite_check(const OracleGraph& o, long long v, int bound) {
  EventualFinitenessReport r;
  r.vertex = v;
  Neighborhood nb = o.neighbors(v);
  if (!nb.infinite) {
    r.finite_degree = true;
    r.degree = static_cast<long long>(nb.finite_part.size());
    return r;
  }
  r.finite_degree = false;
  long long max_level = 4LL * bound + 16;
  for (long long l = 0; l <= max_level && static_cast<int>(r.injective_sequence.size()) < bound; ++l)
    for (long long u : o.level_members(l)) {
      if (static_cast<int>(r.injective_sequence.size()) >= bound) break;
      if (u != v && nb.contains(u)) r.injective_sequence.push_back(u);
    }
  return r;
}

}  // namespace pretop
