#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pretop/graph.hpp"
#include "pretop/solvers.hpp"

namespace pretop {

/// Neighborhood of an oracle vertex. When declared infinite, the finite
/// list holds the exceptional part and `member` decides membership for
/// arbitrary vertices.
struct Neighborhood {
  bool infinite = false;
  std::vector<long long> finite_part;
  std::function<bool(long long)> member;

  bool contains(long long v) const {
    for (long long u : finite_part)
      if (u == v) return true;
    return infinite && member && member(v);
  }
};

/// Countable graph presented by a neighbor oracle on natural-number
/// vertices. Vertices are sliced into finite levels; truncation windows
/// are unions of levels, which keeps windows finite even at vertices of
/// declared-infinite degree. Symmetry and loop-freeness are checked
/// lazily on the pairs a window actually touches.
struct OracleGraph {
  std::function<Neighborhood(long long)> neighbors;
  std::function<long long(long long)> level;
  std::function<std::vector<long long>(long long)> level_members;
  /// Closed-form level cardinality; saturates instead of overflowing.
  std::function<unsigned long long(long long)> level_size;
  bool locally_finite = true;
  long long root = 0;

  bool adjacent(long long u, long long v) const { return u != v && neighbors(u).contains(v); }
};

/// One-way infinite path given by a closed-form index function.
struct Ray {
  std::string name;
  std::function<long long(long long)> at;
};

struct TriVerdict {
  enum class Kind { Verified, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<long long> certificate;  // Verified payload
  long long witness = -1;              // Refuted payload
  long long bound = -1;                // window bound the verdict was computed at
  std::string detail;

  bool verified() const { return kind == Kind::Verified; }
  bool refuted() const { return kind == Kind::Refuted; }
  std::string kind_name() const;
};

enum class RayMode { Vertex, Edge };

/// Analytic answer for a catalog ray pair in one mode.
struct PairCertificate {
  bool equivalent = false;
  std::vector<long long> separator_vertices;                 // vertex mode, when separable
  std::vector<std::pair<long long, long long>> separator_edges;  // edge mode, when separable
  std::string reason;

  std::size_t separator_size(RayMode mode) const {
    return mode == RayMode::Vertex ? separator_vertices.size() : separator_edges.size();
  }
};

struct RayPair {
  Ray a, b;
  PairCertificate vertex_cert;
  PairCertificate edge_cert;
};

/// Named infinite-graph family with its analytic certificates. Verified
/// verdicts always come from these certificates; finite windows alone can
/// only refute or report unknown.
struct Family {
  std::string name;
  std::string description;
  OracleGraph oracle;

  std::optional<std::vector<long long>> dominating_set;
  /// For non-compact families: maps any finite D to a vertex outside N[D].
  std::function<long long(const std::vector<long long>&)> escape_witness;
  std::string non_domination_tag;

  std::optional<long long> end_count;       // nullopt: infinitely many
  std::optional<long long> edge_end_count;  // nullopt: infinitely many

  std::vector<RayPair> canonical_pairs;
};

const std::vector<std::string>& family_names();

/// Builds a catalog family; `rays` parametrizes starofrays.
Family make_family(const std::string& name, int rays = 3);

inline constexpr long long kDefaultTruncationRadius = 64;
inline constexpr long long kTruncationVertexCap = 100000;

/// Finite window of an oracle graph: the connected part around the root
/// of the induced subgraph on vertices of level <= radius.
struct Truncation {
  Graph graph;
  std::vector<long long> new_to_old;  // ascending oracle indices
  std::unordered_map<long long, int> old_to_new;
  long long radius = 0;

  int index_of(long long oracle_vertex) const {
    auto it = old_to_new.find(oracle_vertex);
    return it == old_to_new.end() ? -1 : it->second;
  }
};

Truncation truncate(const OracleGraph& o, long long radius, long long vertex_cap = kTruncationVertexCap);

/// Scans the bound-window for a vertex outside N[D]; Verified only when
/// the family certificate covers D, Refuted analytically for non-compact
/// families even when the window is clean.
TriVerdict is_dominating_oracle(const Family& f, const std::vector<long long>& d, long long bound);

/// Compact iff a finite dominating set exists; decided by certificate.
TriVerdict is_compact(const Family& f);

/// Max disjoint-path evidence between tails of two rays inside the
/// truncation window, swept over tail depths {8,16,32}. Flow >= k at
/// every tested depth verifies level k; a smaller family-certified
/// separator refutes; otherwise unknown up to the bound.
TriVerdict rays_equivalent(const OracleGraph& o, const Ray& r1, const Ray& r2, RayMode mode, int k,
                           long long bound = kDefaultTruncationRadius,
                           const PairCertificate* cert = nullptr);

struct EdgeEndBoundReport {
  long long edge_end_count = 0;
  long long dominating_size = 0;
  bool holds = false;
};

/// Declared |Ω_E| against |D| for a compact family.
EdgeEndBoundReport edge_end_bound_check(const Family& f);

/// Spanning tree of the truncation whose internal vertices stay inside a
/// fixed core around the dominating certificate: every vertex hangs off
/// its least dominator and the star blocks are merged along the least
/// connecting edges. The internal set is reported in oracle indices so
/// that radius stability is directly comparable.
struct RaylessTreeResult {
  std::vector<std::pair<long long, long long>> edges;
  std::vector<long long> internal;
  long long window_size = 0;
  long long leaf_count = 0;
};

RaylessTreeResult rayless_spanning_tree(const Family& f, long long radius);

struct EventualFinitenessReport {
  long long vertex = 0;
  bool finite_degree = true;
  long long degree = -1;
  /// Injective sequence into N(v) when the degree is declared infinite: a
  /// converging net with no finite tail.
  std::vector<long long> injective_sequence;
};

EventualFinitenessReport eventually_finite_check(const OracleGraph& o, long long v, int bound);

}  // namespace pretop
