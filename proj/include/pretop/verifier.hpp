#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pretop/graph.hpp"
#include "pretop/solvers.hpp"

namespace pretop {

/// Implementation-side primitives the catalog checks route through. The
/// mutation suite swaps these for corrupted versions; the oracle side of
/// every check stays on independent brute-force code.
struct CoreOps {
  std::function<VertexSet(const Graph&, int)> closed_nbhd;
  std::function<VertexSet(const Graph&, const VertexSet&)> adhere;
  std::function<DominatingSetResult(const Graph&)> min_dom;

  static CoreOps standard();
};

struct TheoremCheck {
  std::string theorem_id;
  int n_max = 0;
  std::uint64_t instances_checked = 0;
  bool pass = true;
  std::string counterexample;  // reproduction data for the least failing instance
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  int n_max = -1;  // -1: per-theorem default
  std::uint64_t seed = 1;
  bool parallel = true;
  CoreOps ops = CoreOps::standard();
};

/// Stable theorem ids, in catalog order.
const std::vector<std::string>& theorem_catalog();

int theorem_default_n(const std::string& theorem_id);
int theorem_cap_n(const std::string& theorem_id);

/// Checks one theorem over every instance up to n_max (per-theorem default
/// when unset); deterministic in (theorem_id, n_max, seed), including the
/// choice of counterexample (lexicographically least instance).
TheoremCheck verify(const std::string& theorem_id, const VerifyOptions& opts = {});

/// Full catalog with per-theorem default bounds.
std::vector<TheoremCheck> verify_all(const VerifyOptions& opts = {});

}  // namespace pretop
