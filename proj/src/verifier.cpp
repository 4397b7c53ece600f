#include "pretop/verifier.hpp"

#include <chrono>
#include <sstream>

#include "pretop/nets.hpp"
#include "pretop/pretopology.hpp"

namespace pretop {

CoreOps CoreOps::standard() {
  CoreOps ops;
  ops.closed_nbhd = [](const Graph& g, int v) { return closed_neighborhood(g, v); };
  ops.adhere = [](const Graph& g, const VertexSet& a) { return adherence(g, a); };
  ops.min_dom = [](const Graph& g) { return min_dominating_set(g); };
  return ops;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0, std::uint64_t d = 0) {
  return splitmix(a ^ splitmix(b ^ splitmix(c ^ splitmix(d))));
}

VertexSet set_from_mask(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1u) s.set(v);
  return s;
}

// Oracle-side transitivity: plain triple loop, independent of the ops
// routing and of is_transitive's neighbor-list walk.
bool brute_transitive(const Graph& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      for (int z = 0; z < g.order(); ++z)
        if (x != z && g.adjacent(x, y) && g.adjacent(y, z) && !g.adjacent(x, z)) return false;
  return true;
}

// Net whose tail filter is exactly the principal filter of `s`: a chaotic
// domain (all elements mutually related) enumerating the members.
Net principal_net(int ambient, const VertexSet& s) {
  return Net(DirectedSet::chaotic(s.count()), ambient, s.members());
}

Net compose(const VertexFunction& f, const Net& net) {
  std::vector<int> vals(net.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f(net.values[i]);
  return Net(net.domain, f.codomain_size, std::move(vals));
}

// ---- per-theorem instance checks; empty string means the instance holds ----

struct Job {
  int nG = -1;
  std::uint64_t countG = 1;
  int nH = -1;  // -1: single-graph space
  std::uint64_t countH = 1;
  bool sampled = false;  // idx is a seeded trial, not a mask
};

using CheckFn = std::string (*)(const Job&, std::uint64_t, std::uint64_t, const CoreOps&);

std::string chk_idempotent_iff_transitive(const Job& j, std::uint64_t idx, std::uint64_t, const CoreOps& ops) {
  Graph g = graph_from_mask(j.nG, idx);
  int bad_v = -1;
  for (int v = 0; v < j.nG && bad_v < 0; ++v) {
    VertexSet s(j.nG);
    s.set(v);
    VertexSet a1 = ops.adhere(g, s);
    if (!(ops.adhere(g, a1) == a1)) bad_v = v;
  }
  bool idem = bad_v < 0;  // additivity reduces idempotence to singletons
  bool trans = brute_transitive(g);
  if (idem != trans) {
    std::ostringstream os;
    os << "idempotent=" << idem << " transitive=" << trans;
    if (!idem) os << " (adh^2 != adh at vertex " << bad_v << ")";
    return os.str();
  }
  if (j.nG <= 4) {  // cross-check the singleton shortcut against all subsets
    bool full_idem = true;
    std::uint64_t bad_mask = 0;
    for (std::uint64_t am = 0; am < (std::uint64_t{1} << j.nG) && full_idem; ++am) {
      VertexSet a1 = ops.adhere(g, set_from_mask(j.nG, am));
      if (!(ops.adhere(g, a1) == a1)) {
        full_idem = false;
        bad_mask = am;
      }
    }
    if (full_idem != idem)
      return "singleton shortcut disagrees with full-subset idempotence at mask " + std::to_string(bad_mask);
  }
  return {};
}

std::string chk_clopen_structure(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps& ops) {
  Graph g = graph_from_mask(j.nG, idx);
  Topology topo(g);
  for (std::uint64_t um = 0; um < (std::uint64_t{1} << j.nG); ++um) {
    VertexSet u = set_from_mask(j.nG, um);
    bool open_by_nbhd = true;
    u.for_each([&](int v) {
      if (open_by_nbhd && !ops.closed_nbhd(g, v).is_subset_of(u)) open_by_nbhd = false;
    });
    bool open_by_blocks = topo.is_open_set(u);
    bool closed_by_blocks = is_closed(g, u);
    bool adh_fixed = ops.adhere(g, u) == u;
    if (open_by_nbhd != open_by_blocks || open_by_nbhd != closed_by_blocks || open_by_nbhd != adh_fixed) {
      std::ostringstream os;
      os << "subset mask " << um << ": open(N)=" << open_by_nbhd << " open(blocks)=" << open_by_blocks
         << " closed=" << closed_by_blocks << " adh-fixed=" << adh_fixed;
      return os.str();
    }
    // net route: an open set belongs to the tail filter of every net
    // converging into it
    if (j.nG >= 1 && open_by_nbhd && !u.empty() && um % 3 == 0) {
      NetSampler sampler(j.nG, mix(seed, idx, um));
      int x = u.members()[sampler.raw() % u.count()];
      Net phi = sampler.random_net_into(closed_neighborhood(g, x));
      if (!tail_filter(phi).contains(u))
        return "open subset mask " + std::to_string(um) + " missing from a tail filter of a net converging to " + std::to_string(x);
    }
  }
  return {};
}

std::string chk_connected(const Job& j, std::uint64_t idx, std::uint64_t, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  bool conn = is_connected(g);
  auto tc = continuous_two_colorings(g);
  if ((tc.count == 2) != conn)
    return "connected=" + std::to_string(conn) + " but two-coloring count=" + std::to_string(tc.count);
  if (tc.nonconstant_witness) {
    const VertexSet& w = *tc.nonconstant_witness;
    if (conn) return "nonconstant coloring witness on a connected graph";
    if (w.empty() || w == VertexSet::full(j.nG) || !is_closed(g, w))
      return "witness coloring " + w.to_string() + " is not a nonconstant continuous map";
  } else if (j.nG >= 1 && !conn) {
    return "disconnected graph without a nonconstant coloring witness";
  }
  return {};
}

std::string hom_triple_check(const Graph& g, const Graph& h, const VertexFunction& f,
                             std::uint64_t net_seed) {
  bool hom = is_homomorphism(f, g, h);
  bool cont = is_continuous_map(f, g, h);
  if (hom != cont) {
    std::ostringstream os;
    os << "f=[";
    for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
    os << "] homomorphism=" << hom << " continuous=" << cont;
    return os.str();
  }
  if (g.order() >= 1 && h.order() >= 1) {
    // raw net route: continuity must transport sampled limits
    NetSampler sampler(g.order(), net_seed);
    for (int t = 0; t < 4; ++t) {
      Net phi = sampler.random_net();
      Net fphi = compose(f, phi);
      VertexSet lim = limits(g, phi);
      bool bad = false;
      int bad_v = -1;
      lim.for_each([&](int v) {
        if (!bad && cont && !net_converges(h, fphi, f(v))) {
          bad = true;
          bad_v = v;
        }
      });
      if (bad) return "continuous map fails raw net transport at vertex " + std::to_string(bad_v);
    }
    if (!cont) {
      // the discontinuity witness vertex yields a concrete failing net
      for (int v = 0; v < g.order(); ++v) {
        VertexSet img(h.order());
        closed_neighborhood(g, v).for_each([&](int u) { img.set(f(u)); });
        if (!img.is_subset_of(closed_neighborhood(h, f(v)))) {
          Net phi = principal_net(g.order(), closed_neighborhood(g, v));
          if (net_converges(h, compose(f, phi), f(v)))
            return "discontinuity witness at vertex " + std::to_string(v) + " not reproduced by its canonical net";
          break;
        }
      }
    }
  }
  return {};
}

std::string chk_hom_iff_continuous(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  std::uint64_t mG = idx / j.countH, mH = idx % j.countH;
  Graph g = graph_from_mask(j.nG, mG);
  Graph h = graph_from_mask(j.nH, mH);
  std::uint64_t fcount = VertexFunction::function_count(j.nG, j.nH);
  for (std::uint64_t fi = 0; fi < fcount; ++fi) {
    auto msg = hom_triple_check(g, h, VertexFunction::from_index(j.nG, j.nH, fi), mix(seed, idx, fi));
    if (!msg.empty()) return msg;
  }
  return {};
}

std::string chk_hom_sampled(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  std::mt19937_64 rng(mix(seed, 0x40f1, idx));
  std::uint64_t slots = labeled_graph_count(j.nG);
  Graph g = graph_from_mask(j.nG, rng() % slots);
  Graph h = graph_from_mask(j.nH, rng() % labeled_graph_count(j.nH));
  std::uint64_t fcount = VertexFunction::function_count(j.nG, j.nH);
  VertexFunction f = VertexFunction::from_index(j.nG, j.nH, rng() % fcount);
  return hom_triple_check(g, h, f, rng());
}

std::string chk_product(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps& ops) {
  std::uint64_t mG = idx / j.countH, mH = idx % j.countH;
  Graph g = graph_from_mask(j.nG, mG);
  Graph h = graph_from_mask(j.nH, mH);
  Graph p = tensor_product(g, h);
  for (int u = 0; u < j.nG; ++u)
    for (int v = 0; v < j.nH; ++v) {
      VertexSet lhs = ops.closed_nbhd(p, u * j.nH + v);
      VertexSet rhs(p.order());
      ops.closed_nbhd(g, u).for_each([&](int a) {
        ops.closed_nbhd(h, v).for_each([&](int b) { rhs.set(a * j.nH + b); });
      });
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "(u,v)=(" << u << "," << v << "): N_prod=" << lhs.to_string()
           << " N[u]xN[v]=" << rhs.to_string() << " (pair indices u*nH+v)";
        return os.str();
      }
    }
  if (p.order() >= 1) {
    // raw net route: product convergence versus componentwise convergence
    NetSampler sampler(p.order(), mix(seed, idx, 0x9d0d));
    for (int t = 0; t < 3; ++t) {
      Net phi = sampler.random_net();
      std::vector<int> gv(phi.values.size()), hv(phi.values.size());
      for (std::size_t i = 0; i < phi.values.size(); ++i) {
        gv[i] = phi.values[i] / j.nH;
        hv[i] = phi.values[i] % j.nH;
      }
      Net pg(phi.domain, j.nG, gv), ph(phi.domain, j.nH, hv);
      for (int u = 0; u < j.nG; ++u)
        for (int v = 0; v < j.nH; ++v) {
          bool in_graph = net_converges(p, phi, u * j.nH + v);
          bool in_product = net_converges(g, pg, u) && net_converges(h, ph, v);
          if (in_graph != in_product) {
            std::ostringstream os;
            os << "net trial " << t << " at (u,v)=(" << u << "," << v << "): graph-convergence=" << in_graph
               << " product-convergence=" << in_product;
            return os.str();
          }
        }
    }
  }
  return {};
}

std::string chk_subspace(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps& ops) {
  Graph g = graph_from_mask(j.nG, idx);
  for (std::uint64_t wm = 0; wm < (std::uint64_t{1} << j.nG); ++wm) {
    VertexSet w = set_from_mask(j.nG, wm);
    InducedSubgraph ind = induced_subgraph(g, w);
    bool bad = false;
    std::string msg;
    w.for_each([&](int v) {
      if (bad) return;
      VertexSet lhs = ops.closed_nbhd(ind.graph, ind.old_to_new[v]);
      VertexSet rhs_parent = ops.closed_nbhd(g, v) & w;
      VertexSet rhs(ind.graph.order());
      rhs_parent.for_each([&](int x) { rhs.set(ind.old_to_new[x]); });
      if (!(lhs == rhs)) {
        bad = true;
        msg = "W mask " + std::to_string(wm) + " vertex " + std::to_string(v) + ": N_sub=" + lhs.to_string() + " N∩W=" + rhs.to_string();
      }
    });
    if (bad) return msg;
    if (!w.empty() && wm % 5 == 0) {
      NetSampler sampler(j.nG, mix(seed, idx, wm));
      Net psi = sampler.random_net_into(w);
      std::vector<int> sub_vals(psi.values.size());
      for (std::size_t i = 0; i < psi.values.size(); ++i) sub_vals[i] = ind.old_to_new[psi.values[i]];
      Net psi_sub(psi.domain, ind.graph.order(), sub_vals);
      bool net_bad = false;
      std::string net_msg;
      w.for_each([&](int v) {
        if (net_bad) return;
        if (net_converges(ind.graph, psi_sub, ind.old_to_new[v]) != net_converges(g, psi, v)) {
          net_bad = true;
          net_msg = "W mask " + std::to_string(wm) + ": subspace net convergence differs at vertex " + std::to_string(v);
        }
      });
      if (net_bad) return net_msg;
    }
  }
  return {};
}

std::string chk_order(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  std::uint64_t mH = idx / j.countH, mG = idx % j.countH;
  Graph h = graph_from_mask(j.nG, mH);
  Graph g = graph_from_mask(j.nG, mG);
  ConvergenceOrder ord = compare_convergence(h, g);
  bool finer_or_equal = ord == ConvergenceOrder::Equal || ord == ConvergenceOrder::StrictlyFiner;
  bool spanning = true;
  for (auto [x, y] : h.edges())
    if (!g.adjacent(x, y)) spanning = false;
  if (finer_or_equal != spanning)
    return "H mask " + std::to_string(mH) + " vs G mask " + std::to_string(mG) + ": finer-or-equal=" + std::to_string(finer_or_equal) + " spanning=" + std::to_string(spanning);
  if (j.nG >= 1) {
    if (spanning) {
      NetSampler sampler(j.nG, mix(seed, idx));
      for (int t = 0; t < 3; ++t) {
        Net phi = sampler.random_net();
        for (int v = 0; v < j.nG; ++v)
          if (net_converges(h, phi, v) && !net_converges(g, phi, v))
            return "H-convergent net does not G-converge at vertex " + std::to_string(v);
      }
    } else {
      for (auto [x, y] : h.edges())
        if (!g.adjacent(x, y)) {
          Net c = Net::constant(DirectedSet::chain(2), j.nG, x);
          if (!net_converges(h, c, y) || net_converges(g, c, y))
            return "missing-edge witness (" + std::to_string(x) + "," + std::to_string(y) + ") fails the constant-net separation";
          break;
        }
    }
  }
  return {};
}

std::string chk_complete(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  bool complete = true;
  for (int u = 0; u < j.nG && complete; ++u)
    for (int v = u + 1; v < j.nG; ++v)
      if (!g.adjacent(u, v)) {
        complete = false;
        break;
      }
  bool all_nbhd_full = true;
  for (int v = 0; v < j.nG; ++v)
    if (!(closed_neighborhood(g, v) == VertexSet::full(j.nG))) all_nbhd_full = false;
  if (complete != all_nbhd_full)
    return "complete=" + std::to_string(complete) + " all-N[v]-full=" + std::to_string(all_nbhd_full);
  if (j.nG >= 1) {
    NetSampler sampler(j.nG, mix(seed, idx));
    if (complete) {
      for (int t = 0; t < 3; ++t) {
        Net phi = sampler.random_net();
        if (!(limits(g, phi) == VertexSet::full(j.nG)))
          return "net trial " + std::to_string(t) + " does not converge to every vertex of a complete graph";
      }
    } else {
      for (int u = 0; u < j.nG; ++u)
        for (int v = u + 1; v < j.nG; ++v)
          if (!g.adjacent(u, v)) {
            Net c = Net::constant(DirectedSet::chain(2), j.nG, u);
            if (net_converges(g, c, v))
              return "constant net at " + std::to_string(u) + " converges to non-neighbor " + std::to_string(v);
            return {};
          }
    }
  }
  return {};
}

std::string chk_bipartite(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  auto parts = bipartition(g);
  bool oracle = false;  // exhaustive proper-2-coloring search
  for (std::uint64_t am = 0; am < (std::uint64_t{1} << j.nG) && !oracle; ++am) {
    bool proper = true;
    for (auto [x, y] : g.edges())
      if (((am >> x) & 1u) == ((am >> y) & 1u)) {
        proper = false;
        break;
      }
    oracle = proper;
  }
  if (parts.has_value() != oracle)
    return "bipartition=" + std::to_string(parts.has_value()) + " exhaustive-2-coloring=" + std::to_string(oracle);
  if (parts) {
    const auto& [a, b] = *parts;
    if (!((a | b) == VertexSet::full(j.nG)) || a.intersects(b)) return "parts do not partition V";
    std::string msg;
    for (int v = 0; v < j.nG && msg.empty(); ++v) {
      const VertexSet& own = a.test(v) ? a : b;
      const VertexSet& other = a.test(v) ? b : a;
      VertexSet allowed = other;
      allowed.set(v);
      (void)own;
      if (!closed_neighborhood(g, v).is_subset_of(allowed))
        msg = "N[" + std::to_string(v) + "] escapes the opposite side";
    }
    if (!msg.empty()) return msg;
    if (j.nG >= 1) {
      NetSampler sampler(j.nG, mix(seed, idx));
      for (int t = 0; t < 3; ++t) {
        Net phi = sampler.random_net();
        FilterBase up = tail_filter(phi);
        for (int x = 0; x < j.nG; ++x) {
          if (!net_converges(g, phi, x)) continue;
          VertexSet expected = a.test(x) ? b : a;
          expected.set(x);
          if (!up.contains(expected))
            return "net converging to " + std::to_string(x) + " misses side-union B∪{x}";
        }
      }
    }
  }
  return {};
}

std::string chk_locally_irregular(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  auto check = is_locally_irregular(g);
  bool brute = true;
  std::pair<int, int> brute_witness{-1, -1};
  for (int u = 0; u < j.nG && brute; ++u)
    for (int v : g.neighbors(u))
      if (u < v && g.degree(u) == g.degree(v)) {
        brute = false;
        brute_witness = {u, v};
        break;
      }
  if (check.locally_irregular != brute) return "library and brute-force disagree";
  if (!brute && check.witness_edge != brute_witness) return "witness edge is not the least one";
  if (j.nG >= 1) {
    NetSampler sampler(j.nG, mix(seed, idx));
    if (check.locally_irregular) {
      // every convergent net eventually meets only degree-distinct vertices
      for (int t = 0; t < 4; ++t) {
        Net phi = sampler.random_net();
        for (int v = 0; v < j.nG; ++v) {
          if (!net_converges(g, phi, v)) continue;
          bool eventually = false;
          for (int a = 0; a < phi.domain.size() && !eventually; ++a) {
            VertexSet t_set = phi.tail(a);
            if (!t_set.is_subset_of(closed_neighborhood(g, v))) continue;
            bool all_diff = true;
            t_set.for_each([&](int u) {
              if (u != v && g.degree(u) == g.degree(v)) all_diff = false;
            });
            if (all_diff) eventually = true;
          }
          if (!eventually)
            return "converging net never reaches a degree-distinct tail at vertex " + std::to_string(v);
        }
      }
    } else {
      auto [x, y] = check.witness_edge;
      Net c = Net::constant(DirectedSet::chain(2), j.nG, x);
      if (!net_converges(g, c, y)) return "witness constant net does not converge across the witness edge";
      if (g.degree(x) != g.degree(y)) return "witness edge endpoints have distinct degrees";
    }
  }
  return {};
}

std::string chk_axioms(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  AxiomReport r = axiom_suite(g, mix(seed, j.nG, idx), 200);
  if (r.violations > 0)
    return "axiom violations=" + std::to_string(r.violations) + " first: " + r.counterexample;
  return {};
}

std::string chk_convergence_system(const Job& j, std::uint64_t idx, std::uint64_t seed, const CoreOps&) {
  if (j.nG == 0) return {};
  Graph g = graph_from_mask(j.nG, idx);
  std::mt19937_64 rng(mix(seed, idx, 0xc5));
  std::vector<std::vector<VertexSet>> families;
  std::vector<VertexSet> nbhds;
  for (int v = 0; v < j.nG; ++v) nbhds.push_back(closed_neighborhood(g, v));
  families.push_back(nbhds);
  families.push_back({VertexSet::full(j.nG)});
  families.push_back({VertexSet(j.nG)});  // the empty set covers nothing
  for (int t = 0; t < 5; ++t) {
    std::vector<VertexSet> fam;
    int sz = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < sz; ++i) fam.push_back(set_from_mask(j.nG, rng() & ((std::uint64_t{1} << j.nG) - 1)));
    families.push_back(std::move(fam));
  }
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const auto& fam = families[fi];
    auto check = is_convergence_system(g, fam);
    // direct route: for each vertex the canonical net with tail filter
    // exactly the principal filter of N[v]
    auto direct_at = [&](int v) {
      FilterBase up = tail_filter(principal_net(j.nG, closed_neighborhood(g, v)));
      for (const auto& c : fam)
        if (up.contains(c)) return true;
      return false;
    };
    bool direct = true;
    int direct_fail = -1;
    for (int v = 0; v < j.nG && direct; ++v)
      if (!direct_at(v)) {
        direct = false;
        direct_fail = v;
      }
    if (check.verdict != direct)
      return "family " + std::to_string(fi) + ": reduction verdict=" + std::to_string(check.verdict) + " direct net route=" + std::to_string(direct);
    if (!check.verdict && !direct && direct_at(check.failing_vertex))
      return "family " + std::to_string(fi) + ": reported failing vertex " + std::to_string(check.failing_vertex) + " does not reproduce (direct failure at " + std::to_string(direct_fail) + ")";
    if (check.verdict) {
      NetSampler sampler(j.nG, mix(seed, idx, fi));
      for (int t = 0; t < 5; ++t) {
        Net phi = sampler.random_net();
        FilterBase up = tail_filter(phi);
        for (int v = 0; v < j.nG; ++v) {
          if (!net_converges(g, phi, v)) continue;
          bool covered = false;
          for (const auto& c : fam)
            if (up.contains(c)) covered = true;
          if (!covered)
            return "family " + std::to_string(fi) + ": sampled net converging to " + std::to_string(v) + " carries no member";
        }
      }
    }
  }
  return {};
}

std::string chk_finite_compactness(const Job& j, std::uint64_t idx, std::uint64_t, const CoreOps& ops) {
  Graph g = graph_from_mask(j.nG, idx);
  for (int u = 0; u < j.nG; ++u) {
    FilterBase fb = principal_ultrafilter(j.nG, u);
    if (!is_ultrafilter(fb)) return "principal filter at " + std::to_string(u) + " not recognized as ultrafilter";
    bool converges = false;
    for (int v = 0; v < j.nG && !converges; ++v) {
      VertexSet nb = ops.closed_nbhd(g, v);
      VertexSet single(j.nG);
      single.set(u);
      if (single.is_subset_of(nb)) converges = true;
    }
    if (!converges) return "principal ultrafilter at " + std::to_string(u) + " converges nowhere";
  }
  std::vector<VertexSet> fam;
  for (int v = 0; v < j.nG; ++v) fam.push_back(ops.closed_nbhd(g, v));
  if (!is_convergence_system(g, fam).verdict)
    return "the closed-neighborhood family is not a convergence system";
  // quantitative route: least subcover of {N[v]} equals the solver minimum
  int brute = j.nG;
  for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << j.nG); ++sm) {
    VertexSet cover(j.nG);
    int size = 0;
    for (int v = 0; v < j.nG; ++v)
      if ((sm >> v) & 1u) {
        cover |= closed_neighborhood(g, v);
        ++size;
      }
    if (cover == VertexSet::full(j.nG)) brute = std::min(brute, size);
  }
  auto solved = ops.min_dom(g);
  if (solved.size != brute)
    return "solver minimum " + std::to_string(solved.size) + " != subcover minimum " + std::to_string(brute);
  if (!(neighborhood_of_set(g, solved.set) == VertexSet::full(j.nG)))
    return "solver set " + solved.set.to_string() + " does not dominate";
  return {};
}

std::string chk_path_connected(const Job& j, std::uint64_t idx, std::uint64_t, const CoreOps&) {
  Graph g = graph_from_mask(j.nG, idx);
  auto blocks = connected_components(g);
  std::vector<int> block_of(j.nG, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    blocks[b].for_each([&](int v) { block_of[v] = static_cast<int>(b); });
  for (int u = 0; u < j.nG; ++u)
    for (int v = 0; v < j.nG; ++v) {
      auto p = find_path(g, u, v);
      bool same = block_of[u] == block_of[v];
      if (p.has_value() != same)
        return "path existence mismatch for (" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (!p) continue;
      if (p->pieces.front() != u || p->pieces.back() != v) return "path endpoints wrong";
      if (!p->valid_in(g)) return "step path invalid";
      std::vector<bool> seen(j.nG, false);
      for (int x : p->pieces) {
        if (seen[x]) return "step path repeats vertex " + std::to_string(x);
        seen[x] = true;
      }
      auto len = static_cast<long long>(p->pieces.size());
      for (std::size_t i = 0; i < p->breakpoints.size(); ++i)
        if (!(p->breakpoints[i] == Rational(static_cast<long long>(i) + 1, len)))
          return "breakpoints not uniform";
    }
  return {};
}

// ---- catalog ----

struct TheoremSpec {
  std::string id;
  int default_n;
  int cap_n;
  enum class Space { Graphs, HomPairs, ProductPairs, SameOrderPairs } space;
  CheckFn check;
  CheckFn sampled_check = nullptr;
};

const std::vector<TheoremSpec>& specs() {
  using S = TheoremSpec::Space;
  static const std::vector<TheoremSpec> table = {
      {"idempotent_iff_transitive", 6, 7, S::Graphs, chk_idempotent_iff_transitive},
      {"clopen_structure", 5, 6, S::Graphs, chk_clopen_structure},
      {"connected_iff_convergence_connected", 6, 7, S::Graphs, chk_connected},
      {"hom_iff_continuous", 3, 4, S::HomPairs, chk_hom_iff_continuous, chk_hom_sampled},
      {"product_convergence", 4, 4, S::ProductPairs, chk_product},
      {"subspace_convergence", 4, 5, S::Graphs, chk_subspace},
      {"order_iff_spanning", 4, 5, S::SameOrderPairs, chk_order},
      {"complete_iff_all_limits", 6, 7, S::Graphs, chk_complete},
      {"bipartite_characterization", 5, 6, S::Graphs, chk_bipartite},
      {"locally_irregular_characterization", 6, 7, S::Graphs, chk_locally_irregular},
      {"limit_space_axioms", 4, 4, S::Graphs, chk_axioms},
      {"convergence_system_reduction", 4, 4, S::Graphs, chk_convergence_system},
      {"finite_compactness", 6, 6, S::Graphs, chk_finite_compactness},
      {"path_connected", 6, 7, S::Graphs, chk_path_connected},
  };
  return table;
}

const TheoremSpec& find_spec(const std::string& id) {
  for (const auto& s : specs())
    if (s.id == id) return s;
  throw input_error("unknown theorem id: " + id);
}

std::vector<Job> build_jobs(const TheoremSpec& spec, int n_max) {
  using S = TheoremSpec::Space;
  std::vector<Job> jobs;
  switch (spec.space) {
    case S::Graphs:
      for (int n = 0; n <= n_max; ++n) jobs.push_back({n, labeled_graph_count(n), -1, 1, false});
      break;
    case S::ProductPairs:
      for (int nG = 0; nG <= n_max; ++nG)
        for (int nH = 0; nH <= n_max; ++nH)
          jobs.push_back({nG, labeled_graph_count(nG), nH, labeled_graph_count(nH), false});
      break;
    case S::SameOrderPairs:
      for (int n = 0; n <= n_max; ++n)
        jobs.push_back({n, labeled_graph_count(n), n, labeled_graph_count(n), false});
      break;
    case S::HomPairs: {
      int exhaustive = std::min(n_max, 3);
      for (int nG = 0; nG <= exhaustive; ++nG)
        for (int nH = 0; nH <= exhaustive; ++nH)
          jobs.push_back({nG, labeled_graph_count(nG), nH, labeled_graph_count(nH), false});
      if (n_max >= 4) jobs.push_back({4, 10000, 4, 1, true});
      break;
    }
  }
  return jobs;
}

std::string describe_instance(const Job& job, std::uint64_t idx) {
  std::ostringstream os;
  if (job.sampled) {
    os << "sampled n=" << job.nG << " trial=" << idx << ": ";
  } else if (job.nH >= 0) {
    os << "nG=" << job.nG << " maskG=" << (idx / job.countH) << " nH=" << job.nH << " maskH=" << (idx % job.countH) << ": ";
  } else {
    os << "n=" << job.nG << " mask=" << idx << ": ";
  }
  return os.str();
}

constexpr std::uint64_t kNone = ~std::uint64_t{0};

// Serial reference sweep: kept alongside the parallel kernel so tests can
// assert identical results and the benchmark can compare them.
std::uint64_t sweep_serial(std::uint64_t total, const std::function<bool(std::uint64_t)>& ok) {
  for (std::uint64_t i = 0; i < total; ++i)
    if (!ok(i)) return i;
  return kNone;
}

std::uint64_t sweep_parallel(std::uint64_t total, const std::function<bool(std::uint64_t)>& ok) {
#ifdef _OPENMP
  std::uint64_t first_bad = kNone;
  const long long t = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad)
  for (long long i = 0; i < t; ++i)
    if (!ok(static_cast<std::uint64_t>(i)) && static_cast<std::uint64_t>(i) < first_bad)
      first_bad = static_cast<std::uint64_t>(i);
  return first_bad;
#else
  return sweep_serial(total, ok);
#endif
}

}  // namespace

const std::vector<std::string>& theorem_catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

int theorem_default_n(const std::string& id) { return find_spec(id).default_n; }
int theorem_cap_n(const std::string& id) { return find_spec(id).cap_n; }

TheoremCheck verify(const std::string& theorem_id, const VerifyOptions& opts) {
  const TheoremSpec& spec = find_spec(theorem_id);
  int n_max = opts.n_max < 0 ? spec.default_n : opts.n_max;
  if (n_max > spec.cap_n)
    throw input_error("verify: n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(spec.cap_n) + " for " + theorem_id);

  TheoremCheck out;
  out.theorem_id = theorem_id;
  out.n_max = n_max;
  auto t0 = std::chrono::steady_clock::now();

  for (const Job& job : build_jobs(spec, n_max)) {
    CheckFn fn = job.sampled ? spec.sampled_check : spec.check;
    std::uint64_t total = job.countG * job.countH;
    auto ok = [&](std::uint64_t idx) {
      try {
        return fn(job, idx, opts.seed, opts.ops).empty();
      } catch (const std::exception&) {
        return false;
      }
    };
    std::uint64_t bad = opts.parallel ? sweep_parallel(total, ok) : sweep_serial(total, ok);
    if (bad != kNone) {
      out.instances_checked += bad + 1;
      out.pass = false;
      std::string detail;
      try {
        detail = fn(job, bad, opts.seed, opts.ops);
      } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
      }
      out.counterexample = describe_instance(job, bad) + detail;
      break;
    }
    out.instances_checked += total;
  }

  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<TheoremCheck> verify_all(const VerifyOptions& opts) {
  std::vector<TheoremCheck> out;
  for (const auto& id : theorem_catalog()) {
    VerifyOptions per = opts;
    if (opts.n_max >= 0) per.n_max = std::min(opts.n_max, theorem_cap_n(id));
    out.push_back(verify(id, per));
  }
  return out;
}

}  // namespace pretop
