//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

// Exhaustive check that the kite is the unique maximiser among connected
// 4-chromatic planar graphs. Usage: demo_main_theorem [n_max]  (default 8)

#include <cstdio>
#include <cstdlib>

#include "distex/distex.hpp"

int main(int argc, char** argv) {
  using namespace distex;
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 8;
  const int jobs = jobs_from_env();
  bool ok = true;
  for (int n = 4; n <= n_max; ++n) {
    auto r = verify_main_theorem(n, kDefaultTol, jobs);
    std::printf("n=%d  population=%zu  argmax=%s  rho in [%.9f, %.9f]", n, r.population,
                r.argmax.c_str(), r.argmax_rho_lo, r.argmax_rho_hi);
    if (r.runner_up) std::printf("  runner-up %s  gap %.6f", r.runner_up->c_str(), r.gap_lo);
    std::printf("  %s  %.0f ms\n", to_string(r.status).c_str(), r.elapsed_ms);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
