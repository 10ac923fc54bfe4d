//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

// Exact certificates for the three quadratic lemma families.

#include <iostream>

#include "distex/distex.hpp"

int main() {
  using namespace distex;
  struct Claim {
    LemmaFamily family;
    std::int64_t param_lo, n0;
  };
  bool ok = true;
  for (const Claim& c : {Claim{LemmaFamily::BroomKite, 3, 13}, Claim{LemmaFamily::Saw30, 5, 11},
                         Claim{LemmaFamily::Saw21, 2, 13}}) {
    auto fc = certify_lemma_family(c.family, c.param_lo, c.n0);
    std::cout << to_string(c.family) << ": parameter >= " << c.param_lo << ", n >= " << c.n0
              << "\n  discriminant in the parameter: " << fc.discriminant.str("p")
              << "\n  negative from " << fc.tail_start << " ("
              << to_string(fc.tail.reason) << ")\n";
    for (const auto& [p, cert] : fc.head) {
      std::cout << "  p=" << p << "  f_p(n) = " << lemma_coefficients(c.family, p).str() << "  "
                << to_string(cert.verdict) << " (" << to_string(cert.reason) << ")\n";
    }
    std::cout << "  " << (fc.all_positive ? "certified" : "NOT certified") << "\n";
    ok = ok && fc.all_positive;
  }
  return ok ? 0 : 1;
}
