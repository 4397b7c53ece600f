#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pretop/graph.hpp"

namespace pretop {

/// Finite preordered set where every pair has an upper bound.
///
/// Stored as up-sets: up(a) = {b : a ≤ b}. Construction validates
/// reflexivity, transitivity and directedness.
class DirectedSet {
 public:
  /// le[a] is the up-set of a as a VertexSet over 0..m-1.
  explicit DirectedSet(std::vector<VertexSet> up_sets);

  static DirectedSet chain(int m);
  /// All elements mutually related (a ≤ b for every a,b).
  static DirectedSet chaotic(int m);

  int size() const { return m_; }
  bool le(int a, int b) const { return up_[a].test(b); }
  const VertexSet& up_set(int a) const { return up_[a]; }

  friend bool operator==(const DirectedSet& a, const DirectedSet& b) {
    return a.up_ == b.up_;
  }

 private:
  int m_;
  std::vector<VertexSet> up_;
};

/// Function from a directed set into vertex indices of an ambient set.
struct Net {
  DirectedSet domain;
  int ambient = 0;
  std::vector<int> values;

  Net(DirectedSet dom, int ambient, std::vector<int> vals);

  static Net constant(const DirectedSet& dom, int ambient, int x);

  /// Tail set φ[a↑] = {φ_b : b ≥ a}.
  VertexSet tail(int a) const;

  /// Restriction of the net to the up-set of `a`, reindexed; a subnet.
  Net restrict_to_up_set(int a) const;
};

/// Base of a proper filter on {0,...,n-1}: a nonempty family of nonempty
/// sets such that any two members contain a third member inside their
/// intersection. The generated filter is the family of supersets.
class FilterBase {
 public:
  FilterBase(int ambient, std::vector<VertexSet> base);

  int ambient() const { return n_; }
  const std::vector<VertexSet>& base() const { return base_; }

  /// Membership of S in the generated filter: some base set ⊆ S.
  bool contains(const VertexSet& s) const;

  /// Filter inclusion: every set of this filter belongs to `other`,
  /// decided on bases.
  bool subfilter_of(const FilterBase& other) const;

  /// Intersection of all base sets.
  VertexSet kernel() const;

 private:
  int n_;
  std::vector<VertexSet> base_;
};

/// Deduplicated family of tail sets of the net.
FilterBase tail_filter(const Net& net);

/// φ → v iff N[v] ∈ φ↑, i.e. some tail set ⊆ N[v].
bool net_converges(const Graph& g, const Net& net, int v);

/// All limits of the net.
VertexSet limits(const Graph& g, const Net& net);

/// F → v iff some base set ⊆ N[v].
bool filter_converges(const Graph& g, const FilterBase& fb, int v);

/// Maximality of the generated filter. On a finite ambient set this holds
/// exactly for principal ultrafilters: the kernel is a singleton {x} and
/// {x} belongs to the filter.
bool is_ultrafilter(const FilterBase& fb);

FilterBase principal_ultrafilter(int n, int x);

struct ConvergenceSystemCheck {
  std::vector<VertexSet> family;
  bool verdict = true;
  int failing_vertex = -1;
};

/// 𝒞 is a convergence system iff every vertex v has some C ∈ 𝒞 with
/// N[v] ⊆ C (the coarsest filter converging to v is the principal filter
/// of N[v], so the net-quantified condition reduces to this containment).
ConvergenceSystemCheck is_convergence_system(const Graph& g, const std::vector<VertexSet>& family);

/// ψ is a subnet of φ iff φ↑ ⊆ ψ↑.
bool is_subnet(const Net& psi, const Net& phi);

enum class MixChoice : std::uint8_t { Left, Right };

/// Mixing of φ and ψ over their shared domain: ρ_d = φ_d below d′ and
/// the selected value for d ≥ d′.
Net mix(const Net& phi, const Net& psi, int d_prime, const std::vector<MixChoice>& selector);

/// Seeded generator of random nets: the domain is a random preorder
/// completed to directedness by a top element, values uniform.
class NetSampler {
 public:
  NetSampler(int ambient, std::uint64_t seed);

  Net random_net(int max_domain = 5);
  /// Random net all of whose values lie in the given set (hence it
  /// converges to any v with set ⊆ N[v]).
  Net random_net_into(const VertexSet& values_from, int max_domain = 5);
  std::uint64_t raw() { return rng_(); }
  std::mt19937_64& rng() { return rng_; }

 private:
  DirectedSet random_domain(int max_domain);
  int ambient_;
  std::mt19937_64 rng_;
};

struct AxiomReport {
  int nets_sampled = 0;
  int violations = 0;
  std::string counterexample;  // first violation, reproduction data
};

/// Samples nets on V(G) and checks the limit-space axioms together with
/// pretopologicity: centered, isotone (subnets inherit limits), stable
/// (mixings keep common limits), and 𝒩_v ⊆ φ↑ whenever φ → v.
AxiomReport axiom_suite(const Graph& g, std::uint64_t seed, int samples = 200);

}  // namespace pretop
