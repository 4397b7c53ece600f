// Times the serial reference sweep against the OpenMP kernel over the
// theorem catalog and checks that both produce identical results.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "pretop/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  int n_max = -1;  // per-theorem defaults
  std::uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--max-n") && i + 1 < argc) n_max = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-38s %6s %12s %10s %10s %8s\n", "theorem", "n", "instances", "serial[s]", "parallel", "speedup");

  double total_serial = 0, total_parallel = 0;
  bool mismatch = false;
  for (const auto& id : pretop::theorem_catalog()) {
    pretop::VerifyOptions serial;
    serial.n_max = n_max < 0 ? -1 : std::min(n_max, pretop::theorem_cap_n(id));
    serial.seed = seed;
    serial.parallel = false;
    auto rs = pretop::verify(id, serial);

    pretop::VerifyOptions parallel = serial;
    parallel.parallel = true;
    auto rp = pretop::verify(id, parallel);

    if (rs.pass != rp.pass || rs.counterexample != rp.counterexample || (rs.pass && rs.instances_checked != rp.instances_checked)) {
      std::printf("MISMATCH on %s: serial and parallel sweeps disagree\n", id.c_str());
      mismatch = true;
    }
    total_serial += rs.elapsed_seconds;
    total_parallel += rp.elapsed_seconds;
    std::printf("%-38s %6d %12llu %10.3f %10.3f %7.2fx%s\n", id.c_str(), rs.n_max,
                static_cast<unsigned long long>(rs.instances_checked), rs.elapsed_seconds, rp.elapsed_seconds,
                rp.elapsed_seconds > 0 ? rs.elapsed_seconds / rp.elapsed_seconds : 0.0,
                rs.pass ? "" : "  [counterexample]");
  }
  std::printf("%-38s %6s %12s %10.3f %10.3f %7.2fx\n", "total", "", "", total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0);
  return mismatch ? 1 : 0;
}
