#include "pretop/report.hpp"

#include <sstream>

#include "pretop/pretopology.hpp"
#include "pretop/solvers.hpp"

namespace pretop {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) {
  return json(s.members());
}

// Runs a solver field, capturing bound violations as strings so one
// oversized field does not sink the whole report.
template <class F>
json guarded(F f) {
  try {
    return f();
  } catch (const size_error& e) {
    return json{{"error", std::string("size: ") + e.what()}};
  } catch (const input_error& e) {
    return json{{"error", std::string("input: ") + e.what()}};
  }
}

}  // namespace

json analyze_graph_report(const Graph& g, const std::string& input_name, bool skip_exact) {
  json r;
  r["format_version"] = kReportFormatVersion;
  r["kind"] = "graph";
  r["input"] = input_name;
  r["order"] = g.order();
  r["edge_count"] = g.edge_count();

  auto blocks = connected_components(g);
  json jblocks = json::array();
  for (const auto& b : blocks) jblocks.push_back(set_to_json(b));
  r["components"] = {{"count", blocks.size()}, {"blocks", jblocks}};
  r["connected"] = is_connected(g);

  if (auto parts = bipartition(g)) {
    r["bipartite"] = {{"value", true}, {"side_a", set_to_json(parts->first)}, {"side_b", set_to_json(parts->second)}};
  } else {
    r["bipartite"] = {{"value", false}};
  }

  auto topo = is_convergence_topological(g);
  r["topological"] = {{"value", topo.topological}};
  if (!topo.topological)
    r["topological"]["witness_triple"] = {topo.witness[0], topo.witness[1], topo.witness[2]};

  r["clopen"] = guarded([&]() -> json {
    Topology t = topological_modification(g);
    json j{{"component_count", t.blocks().size()}};
    if (t.blocks().size() <= 62) j["opens_count"] = t.opens_count();
    j["opens_log2"] = t.blocks().size();
    return j;
  });

  auto irr = is_locally_irregular(g);
  r["locally_irregular"] = {{"value", irr.locally_irregular}};
  if (!irr.locally_irregular)
    r["locally_irregular"]["witness_edge"] = {irr.witness_edge.first, irr.witness_edge.second};

  r["two_colorings"] = guarded([&]() -> json {
    auto tc = continuous_two_colorings(g);
    json j{{"count", tc.count}};
    if (tc.nonconstant_witness) j["nonconstant_witness"] = set_to_json(*tc.nonconstant_witness);
    return j;
  });

  r["two_connected"] = guarded([&]() -> json { return json{{"value", is_two_connected(g)}}; });

  if (skip_exact) {
    auto greedy = greedy_dominating_set(g);
    r["domination"] = {{"size", greedy.size}, {"set", set_to_json(greedy.set)}, {"method", "greedy"}, {"optimal", false}};
    r["spanning_tree"] = {{"skipped", true}};
  } else {
    r["domination"] = guarded([&]() -> json {
      auto d = min_dominating_set(g);
      return json{{"size", d.size}, {"set", set_to_json(d.set)}, {"method", "exact"}, {"optimal", d.optimal}};
    });
    if (r["domination"].contains("error")) {
      auto greedy = greedy_dominating_set(g);
      r["domination"]["fallback"] = {{"size", greedy.size}, {"set", set_to_json(greedy.set)}, {"method", "greedy"}, {"optimal", false}};
    }
    r["spanning_tree"] = guarded([&]() -> json {
      auto t = min_internal_spanning_tree(g);
      json edges = json::array();
      for (auto [u, v] : t.edges) edges.push_back({u, v});
      return json{{"internal_count", t.internal.count()},
                  {"internal", set_to_json(t.internal)},
                  {"leaf_count", t.leaf_count},
                  {"edges", edges}};
    });
  }
  return r;
}

namespace {

json verdict_to_json(const TriVerdict& v) {
  json j{{"kind", v.kind_name()}, {"detail", v.detail}};
  if (v.kind == TriVerdict::Kind::Verified && !v.certificate.empty()) j["certificate"] = v.certificate;
  if (v.kind == TriVerdict::Kind::Refuted) j["witness"] = v.witness;
  if (v.bound >= 0) j["bound"] = v.bound;
  return j;
}

}  // namespace

json analyze_family_report(const Family& f, long long radius) {
  json r;
  r["format_version"] = kReportFormatVersion;
  r["kind"] = "family";
  r["family"] = f.name;
  r["description"] = f.description;

  Truncation tr = truncate(f.oracle, radius);
  r["truncation"] = {{"radius", radius}, {"vertices", tr.graph.order()}, {"edges", tr.graph.edge_count()}};

  TriVerdict compact = is_compact(f);
  r["compact"] = verdict_to_json(compact);
  if (f.end_count)
    r["declared_end_count"] = *f.end_count;
  else
    r["declared_end_count"] = "infinite";
  if (f.edge_end_count)
    r["declared_edge_end_count"] = *f.edge_end_count;
  else
    r["declared_edge_end_count"] = "infinite";

  if (compact.verified()) {
    auto bound = edge_end_bound_check(f);
    r["edge_end_bound"] = {{"edge_end_count", bound.edge_end_count},
                           {"dominating_size", bound.dominating_size},
                           {"holds", bound.holds}};
    long long half = std::max<long long>(2, radius / 2);
    auto tree_half = rayless_spanning_tree(f, half);
    auto tree_full = rayless_spanning_tree(f, radius);
    r["rayless_tree"] = {{"internal", tree_full.internal},
                         {"internal_count", tree_full.internal.size()},
                         {"leaf_count", tree_full.leaf_count},
                         {"window", tree_full.window_size},
                         {"radius_stable",
                          json{{"radii", {half, radius}}, {"equal", tree_half.internal == tree_full.internal}}}};
  }

  json pairs = json::array();
  for (const auto& pair : f.canonical_pairs) {
    json p{{"rays", {pair.a.name, pair.b.name}}};
    for (int k : {2, 4}) {
      auto v = rays_equivalent(f.oracle, pair.a, pair.b, RayMode::Vertex, k, radius, &pair.vertex_cert);
      auto e = rays_equivalent(f.oracle, pair.a, pair.b, RayMode::Edge, k, radius, &pair.edge_cert);
      p["vertex_k" + std::to_string(k)] = verdict_to_json(v);
      p["edge_k" + std::to_string(k)] = verdict_to_json(e);
    }
    pairs.push_back(std::move(p));
  }
  r["ray_pairs"] = std::move(pairs);
  return r;
}

json verify_report(const std::vector<TheoremCheck>& checks) {
  json r;
  r["format_version"] = kReportFormatVersion;
  r["kind"] = "verify";
  bool all = true;
  json items = json::array();
  for (const auto& c : checks) {
    json j{{"theorem", c.theorem_id},
           {"n_max", c.n_max},
           {"instances", c.instances_checked},
           {"pass", c.pass},
           {"elapsed_seconds", c.elapsed_seconds}};
    if (!c.pass) j["counterexample"] = c.counterexample;
    all = all && c.pass;
    items.push_back(std::move(j));
  }
  r["checks"] = std::move(items);
  r["all_pass"] = all;
  return r;
}

namespace {

std::string field(const json& j, const char* key) {
  return j.contains(key) ? j[key].dump() : std::string("-");
}

}  // namespace

std::string render_graph_report(const json& r) {
  std::ostringstream os;
  os << "graph " << r["input"].get<std::string>() << ": n=" << r["order"] << " m=" << r["edge_count"] << "\n";
  os << "  components: " << r["components"]["count"] << "  connected: " << (r["connected"].get<bool>() ? "yes" : "no") << "\n";
  os << "  bipartite: " << (r["bipartite"]["value"].get<bool>() ? "yes" : "no");
  if (r["bipartite"]["value"].get<bool>())
    os << "  sides " << r["bipartite"]["side_a"].dump() << " / " << r["bipartite"]["side_b"].dump();
  os << "\n";
  os << "  topological (transitive): " << (r["topological"]["value"].get<bool>() ? "yes" : "no");
  if (!r["topological"]["value"].get<bool>()) os << "  witness " << r["topological"]["witness_triple"].dump();
  os << "\n";
  os << "  clopen: " << field(r["clopen"], "component_count") << " components, opens 2^" << field(r["clopen"], "opens_log2") << "\n";
  os << "  locally irregular: " << (r["locally_irregular"]["value"].get<bool>() ? "yes" : "no") << "\n";
  if (r["two_connected"].contains("value"))
    os << "  2-connected: " << (r["two_connected"]["value"].get<bool>() ? "yes" : "no") << "\n";
  if (r["domination"].contains("size"))
    os << "  domination: gamma=" << r["domination"]["size"] << " set " << r["domination"]["set"].dump()
       << " (" << r["domination"]["method"].get<std::string>() << ")\n";
  else
    os << "  domination: " << field(r["domination"], "error") << "\n";
  if (r["spanning_tree"].contains("internal_count"))
    os << "  min-internal spanning tree: " << r["spanning_tree"]["internal_count"] << " internal, "
       << r["spanning_tree"]["leaf_count"] << " leaves\n";
  return os.str();
}

std::string render_family_report(const json& r) {
  std::ostringstream os;
  os << "family " << r["family"].get<std::string>() << ": " << r["description"].get<std::string>() << "\n";
  os << "  truncation: radius " << r["truncation"]["radius"] << ", " << r["truncation"]["vertices"]
     << " vertices, " << r["truncation"]["edges"] << " edges\n";
  os << "  compact: " << r["compact"]["kind"].get<std::string>();
  if (r["compact"].contains("certificate")) os << "  D=" << r["compact"]["certificate"].dump();
  if (r["compact"].contains("witness")) os << "  witness " << r["compact"]["witness"].dump();
  os << "  (" << r["compact"]["detail"].get<std::string>() << ")\n";
  os << "  ends: " << field(r, "declared_end_count") << "  edge-ends: " << field(r, "declared_edge_end_count") << "\n";
  if (r.contains("edge_end_bound"))
    os << "  edge-end bound: " << r["edge_end_bound"]["edge_end_count"] << " <= |D|="
       << r["edge_end_bound"]["dominating_size"] << " : " << (r["edge_end_bound"]["holds"].get<bool>() ? "holds" : "VIOLATED") << "\n";
  if (r.contains("rayless_tree"))
    os << "  rayless tree: internal " << r["rayless_tree"]["internal"].dump() << " ("
       << r["rayless_tree"]["internal_count"] << "), radius-stable: "
       << (r["rayless_tree"]["radius_stable"]["equal"].get<bool>() ? "yes" : "NO") << " at radii "
       << r["rayless_tree"]["radius_stable"]["radii"].dump() << "\n";
  for (const auto& p : r["ray_pairs"]) {
    os << "  rays " << p["rays"][0].get<std::string>() << " ~ " << p["rays"][1].get<std::string>() << ":\n";
    for (int k : {2, 4}) {
      os << "    k=" << k << " vertex: " << p["vertex_k" + std::to_string(k)]["kind"].get<std::string>()
         << "  edge: " << p["edge_k" + std::to_string(k)]["kind"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

std::string render_verify_report(const json& r) {
  std::ostringstream os;
  for (const auto& c : r["checks"]) {
    os << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  " << c["theorem"].get<std::string>()
       << "  (n<=" << c["n_max"] << ", " << c["instances"] << " instances, "
       << c["elapsed_seconds"].get<double>() << "s)";
    if (!c["pass"].get<bool>()) os << "\n      counterexample: " << c["counterexample"].get<std::string>();
    os << "\n";
  }
  os << (r["all_pass"].get<bool>() ? "all checks passed" : "counterexamples found") << "\n";
  return os.str();
}

}  // namespace pretop
