#pragma once

#include <string>

#include <json.hpp>

#include "pretop/graph.hpp"
#include "pretop/infinite.hpp"
#include "pretop/verifier.hpp"

namespace pretop {

inline constexpr int kReportFormatVersion = 1;

/// Machine-readable analysis of a finite graph. Exponential solvers honor
/// `skip_exact`; per-field size errors are captured in the report rather
/// than thrown.
nlohmann::json analyze_graph_report(const Graph& g, const std::string& input_name, bool skip_exact);

/// Compactness verdict, truncation stats, edge-end bound, rayless tree and
/// canonical ray-pair analysis for a catalog family.
nlohmann::json analyze_family_report(const Family& f, long long radius);

nlohmann::json verify_report(const std::vector<TheoremCheck>& checks);

std::string render_graph_report(const nlohmann::json& r);
std::string render_family_report(const nlohmann::json& r);
std::string render_verify_report(const nlohmann::json& r);

}  // namespace pretop
