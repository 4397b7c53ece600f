#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pretop/io.hpp"
#include "pretop/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysisFailure = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw pretop::input_error("cannot write file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph convergence toolkit: pretopological analysis, theorem verification, infinite families"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path, analyze_dot, analyze_export;
  bool analyze_json = false, skip_exact = false;
  auto* analyze = app.add_subcommand("analyze", "analyze a finite graph from an edge-list file");
  analyze->add_option("path", analyze_path, "edge-list file (first line 'n <count>', then 'u v' lines)")->required();
  analyze->add_flag("--json", analyze_json, "emit the versioned JSON report");
  analyze->add_flag("--skip-exact", skip_exact, "bypass exponential exact solvers");
  analyze->add_option("--dot", analyze_dot, "export the graph in DOT format to this path");
  analyze->add_option("--export", analyze_export, "write the graph back in canonical edge-list form");

  // verify
  int max_n = -1;
  std::uint64_t seed = 1;
  std::string theorem;
  bool verify_json = false, verify_serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem catalog on enumerated small graphs");
  verify_cmd->add_option("--max-n", max_n, "instance bound (default: per-theorem)");
  verify_cmd->add_option("--seed", seed, "seed for sampled nets and functions");
  verify_cmd->add_option("--theorem", theorem, "run a single catalog entry");
  verify_cmd->add_flag("--json", verify_json, "emit the versioned JSON report");
  verify_cmd->add_flag("--serial", verify_serial, "use the serial reference sweep");

  // family
  std::string family_name, family_dot;
  long long radius = pretop::kDefaultTruncationRadius;
  int rays = 3;
  bool family_json = false;
  auto* family_cmd = app.add_subcommand("family", "analyze a catalog infinite-graph family");
  family_cmd->add_option("name", family_name, "family name (see 'families')")->required();
  family_cmd->add_option("--radius", radius, "truncation window radius");
  family_cmd->add_option("--rays", rays, "ray count for starofrays");
  family_cmd->add_flag("--json", family_json, "emit the versioned JSON report");
  family_cmd->add_option("--dot", family_dot, "export the truncation in DOT format to this path");

  auto* families_cmd = app.add_subcommand("families", "list catalog family names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      pretop::Graph g;
      try {
        g = pretop::read_edge_list_file(analyze_path);
      } catch (const pretop::parse_error& e) {
        std::cerr << analyze_path << ": " << e.what() << "\n";
        return kExitUsage;
      }
      auto report = pretop::analyze_graph_report(g, analyze_path, skip_exact);
      if (!analyze_dot.empty()) write_file(analyze_dot, pretop::to_dot(g));
      if (!analyze_export.empty()) write_file(analyze_export, pretop::to_edge_list(g));
      std::cout << (analyze_json ? report.dump(2) + "\n" : pretop::render_graph_report(report));
      return kExitOk;
    }

    if (*verify_cmd) {
      pretop::VerifyOptions opts;
      opts.n_max = max_n;
      opts.seed = seed;
      opts.parallel = !verify_serial;
      std::vector<pretop::TheoremCheck> checks;
      if (theorem.empty()) {
        checks = pretop::verify_all(opts);
      } else {
        checks.push_back(pretop::verify(theorem, opts));
      }
      auto report = pretop::verify_report(checks);
      std::cout << (verify_json ? report.dump(2) + "\n" : pretop::render_verify_report(report));
      return report["all_pass"].get<bool>() ? kExitOk : kExitAnalysisFailure;
    }

    if (*family_cmd) {
      auto f = pretop::make_family(family_name, rays);
      auto report = pretop::analyze_family_report(f, radius);
      if (!family_dot.empty())
        write_file(family_dot, pretop::to_dot(pretop::truncate(f.oracle, radius).graph, f.name));
      std::cout << (family_json ? report.dump(2) + "\n" : pretop::render_family_report(report));
      return kExitOk;
    }

    if (*families_cmd) {
      for (const auto& name : pretop::family_names()) std::cout << name << "\n";
      return kExitOk;
    }
  } catch (const pretop::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pretop::size_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysisFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysisFailure;
  }
  return kExitUsage;
}
