#include "pretop/nets.hpp"

#include <algorithm>

namespace pretop {

DirectedSet::DirectedSet(std::vector<VertexSet> up_sets) : m_(static_cast<int>(up_sets.size())), up_(std::move(up_sets)) {
  if (m_ == 0) throw input_error("DirectedSet: empty");
  for (int a = 0; a < m_; ++a) {
    if (up_[a].universe() != m_) throw input_error("DirectedSet: up-set universe mismatch");
    if (!up_[a].test(a)) throw input_error("DirectedSet: relation not reflexive");
  }
  for (int a = 0; a < m_; ++a) {
    bool ok = true;
    up_[a].for_each([&](int b) {
      if (!up_[b].is_subset_of(up_[a])) ok = false;
    });
    if (!ok) throw input_error("DirectedSet: relation not transitive");
  }
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (!up_[a].intersects(up_[b])) throw input_error("DirectedSet: pair without upper bound");
}

DirectedSet DirectedSet::chain(int m) {
  std::vector<VertexSet> up;
  up.reserve(m);
  for (int a = 0; a < m; ++a) {
    VertexSet s(m);
    for (int b = a; b < m; ++b) s.set(b);
    up.push_back(std::move(s));
  }
  return DirectedSet(std::move(up));
}

DirectedSet DirectedSet::chaotic(int m) {
  return DirectedSet(std::vector<VertexSet>(m, VertexSet::full(m)));
}

Net::Net(DirectedSet dom, int amb, std::vector<int> vals)
    : domain(std::move(dom)), ambient(amb), values(std::move(vals)) {
  if (static_cast<int>(values.size()) != domain.size())
    throw input_error("Net: value table does not match domain size");
  for (int x : values)
    if (x < 0 || x >= ambient) throw input_error("Net: value outside ambient set");
}

Net Net::constant(const DirectedSet& dom, int ambient, int x) {
  return Net(dom, ambient, std::vector<int>(dom.size(), x));
}

VertexSet Net::tail(int a) const {
  VertexSet t(ambient);
  domain.up_set(a).for_each([&](int b) { t.set(values[b]); });
  return t;
}

Net Net::restrict_to_up_set(int a) const {
  auto members = domain.up_set(a).members();
  std::vector<int> pos(domain.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  std::vector<VertexSet> up;
  std::vector<int> vals;
  up.reserve(members.size());
  for (int b : members) {
    VertexSet s(static_cast<int>(members.size()));
    domain.up_set(b).for_each([&](int c) {
      if (pos[c] >= 0) s.set(pos[c]);
    });
    up.push_back(std::move(s));
    vals.push_back(values[b]);
  }
  return Net(DirectedSet(std::move(up)), ambient, std::move(vals));
}

FilterBase::FilterBase(int ambient, std::vector<VertexSet> base) : n_(ambient), base_(std::move(base)) {
  if (base_.empty()) throw input_error("FilterBase: empty base");
  for (const auto& b : base_) {
    if (b.universe() != n_) throw input_error("FilterBase: base set universe mismatch");
    if (b.empty()) throw input_error("FilterBase: improper (empty base set)");
  }
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  for (const auto& a : base_)
    for (const auto& b : base_) {
      VertexSet cap = a & b;
      bool witnessed = false;
      for (const auto& c : base_)
        if (c.is_subset_of(cap)) {
          witnessed = true;
          break;
        }
      if (!witnessed) throw input_error("FilterBase: base not compatible with finite intersections");
    }
}

bool FilterBase::contains(const VertexSet& s) const {
  for (const auto& b : base_)
    if (b.is_subset_of(s)) return true;
  return false;
}

bool FilterBase::subfilter_of(const FilterBase& other) const {
  for (const auto& b : base_)
    if (!other.contains(b)) return false;
  return true;
}

VertexSet FilterBase::kernel() const {
  VertexSet k = VertexSet::full(n_);
  for (const auto& b : base_) k &= b;
  return k;
}

FilterBase tail_filter(const Net& net) {
  std::vector<VertexSet> base;
  base.reserve(net.domain.size());
  for (int a = 0; a < net.domain.size(); ++a) base.push_back(net.tail(a));
  return FilterBase(net.ambient, std::move(base));
}

bool net_converges(const Graph& g, const Net& net, int v) {
  if (net.ambient != g.order()) throw input_error("net_converges: ambient mismatch");
  VertexSet nv = closed_neighborhood(g, v);
  for (int a = 0; a < net.domain.size(); ++a)
    if (net.tail(a).is_subset_of(nv)) return true;
  return false;
}

VertexSet limits(const Graph& g, const Net& net) {
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (net_converges(g, net, v)) out.set(v);
  return out;
}

bool filter_converges(const Graph& g, const FilterBase& fb, int v) {
  if (fb.ambient() != g.order()) throw input_error("filter_converges: ambient mismatch");
  return fb.contains(closed_neighborhood(g, v));
}

bool is_ultrafilter(const FilterBase& fb) {
  VertexSet k = fb.kernel();
  if (k.count() != 1) return false;
  VertexSet singleton(fb.ambient());
  singleton.set(k.least());
  return fb.contains(singleton);
}

FilterBase principal_ultrafilter(int n, int x) {
  VertexSet s(n);
  s.set(x);
  return FilterBase(n, {s});
}

ConvergenceSystemCheck is_convergence_system(const Graph& g, const std::vector<VertexSet>& family) {
  ConvergenceSystemCheck out;
  out.family = family;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet nv = closed_neighborhood(g, v);
    bool covered = false;
    for (const auto& c : family)
      if (nv.is_subset_of(c)) {
        covered = true;
        break;
      }
    if (!covered) {
      out.verdict = false;
      out.failing_vertex = v;
      return out;
    }
  }
  return out;
}

bool is_subnet(const Net& psi, const Net& phi) {
  if (psi.ambient != phi.ambient) throw input_error("is_subnet: ambient mismatch");
  return tail_filter(phi).subfilter_of(tail_filter(psi));
}

Net mix(const Net& phi, const Net& psi, int d_prime, const std::vector<MixChoice>& selector) {
  if (!(phi.domain == psi.domain) || phi.ambient != psi.ambient)
    throw input_error("mix: nets do not share a domain");
  if (d_prime < 0 || d_prime >= phi.domain.size()) throw input_error("mix: d' out of range");
  if (static_cast<int>(selector.size()) != phi.domain.size())
    throw input_error("mix: selector does not match domain size");
  std::vector<int> vals = phi.values;
  phi.domain.up_set(d_prime).for_each([&](int d) {
    vals[d] = selector[d] == MixChoice::Left ? phi.values[d] : psi.values[d];
  });
  return Net(phi.domain, phi.ambient, std::move(vals));
}

NetSampler::NetSampler(int ambient, std::uint64_t seed) : ambient_(ambient), rng_(seed) {
  if (ambient <= 0) throw input_error("NetSampler: ambient set must be nonempty");
}

DirectedSet NetSampler::random_domain(int max_domain) {
  std::uniform_int_distribution<int> size_dist(1, max_domain - 1);
  int m = size_dist(rng_);
  // random relation on a DAG skeleton, then reflexive-transitive closure
  std::vector<VertexSet> up(m + 1, VertexSet(m + 1));
  std::uniform_int_distribution<int> coin(0, 99);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (coin(rng_) < 40) up[a].set(b);
  for (int a = m - 1; a >= 0; --a) {
    VertexSet closure = up[a];
    up[a].for_each([&](int b) { closure |= up[b]; });
    up[a] = closure;
  }
  for (int a = 0; a <= m; ++a) {
    up[a].set(a);
    up[a].set(m);  // top element makes the preorder directed
  }
  return DirectedSet(std::move(up));
}

Net NetSampler::random_net(int max_domain) {
  DirectedSet dom = random_domain(max_domain);
  std::uniform_int_distribution<int> val(0, ambient_ - 1);
  std::vector<int> vals(dom.size());
  for (auto& x : vals) x = val(rng_);
  return Net(std::move(dom), ambient_, std::move(vals));
}

Net NetSampler::random_net_into(const VertexSet& values_from, int max_domain) {
  auto pool = values_from.members();
  if (pool.empty()) throw input_error("random_net_into: empty value pool");
  DirectedSet dom = random_domain(max_domain);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<int> vals(dom.size());
  for (auto& x : vals) x = pool[pick(rng_)];
  return Net(std::move(dom), ambient_, std::move(vals));
}

namespace {

std::string describe_net(const Net& net) {
  std::string s = "net(values=[";
  for (std::size_t i = 0; i < net.values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(net.values[i]);
  }
  return s + "])";
}

}  // namespace

AxiomReport axiom_suite(const Graph& g, std::uint64_t seed, int samples) {
  AxiomReport report;
  if (g.order() == 0) return report;
  NetSampler sampler(g.order(), seed);

  auto fail = [&](const std::string& what, const Net& net) {
    ++report.violations;
    if (report.counterexample.empty())
      report.counterexample = what + " " + describe_net(net);
  };

  // centered: constant nets converge to their constants
  for (int x = 0; x < g.order(); ++x) {
    Net c = Net::constant(DirectedSet::chain(3), g.order(), x);
    ++report.nets_sampled;
    if (!net_converges(g, c, x)) fail("centered violated at vertex " + std::to_string(x), c);
  }

  for (int i = 0; i < samples; ++i) {
    Net phi = sampler.random_net();
    ++report.nets_sampled;
    VertexSet lim = limits(g, phi);

    // isotone: restriction subnets inherit every limit
    int a = static_cast<int>(sampler.raw() % phi.domain.size());
    Net psi = phi.restrict_to_up_set(a);
    bool subnet_ok = is_subnet(psi, phi);
    if (!subnet_ok) fail("restriction is not a subnet", phi);
    lim.for_each([&](int v) {
      if (!net_converges(g, psi, v)) fail("isotone violated at vertex " + std::to_string(v), phi);
    });

    // pretopological: φ → v forces N[v] ∈ φ↑
    FilterBase up = tail_filter(phi);
    lim.for_each([&](int v) {
      if (!up.contains(closed_neighborhood(g, v)))
        fail("neighborhood filter not below tail filter at vertex " + std::to_string(v), phi);
    });

    // stable: mixing two nets with a common limit keeps that limit
    if (!lim.empty()) {
      int v = lim.least();
      Net rho_src = sampler.random_net_into(closed_neighborhood(g, v));
      // rebuild over phi's domain so the pair shares a directed set
      std::vector<int> vals(phi.domain.size());
      for (auto& x : vals) x = rho_src.values[sampler.raw() % rho_src.values.size()];
      Net psi2(phi.domain, g.order(), std::move(vals));
      if (net_converges(g, psi2, v)) {
        std::vector<MixChoice> sel(phi.domain.size());
        for (auto& c : sel) c = (sampler.raw() & 1) ? MixChoice::Left : MixChoice::Right;
        int d_prime = static_cast<int>(sampler.raw() % phi.domain.size());
        Net rho = mix(phi, psi2, d_prime, sel);
        ++report.nets_sampled;
        if (!net_converges(g, rho, v)) fail("stability violated at vertex " + std::to_string(v), rho);
      }
    }
  }
  return report;
}

}  // namespace pretop
