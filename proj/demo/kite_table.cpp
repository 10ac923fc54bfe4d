//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

// Prints the reference spectral radius table next to freshly computed values.

#include <cstdio>
#include <map>

#include "distex/distex.hpp"

int main() {
  using namespace distex;
  std::map<int, std::map<std::string, TableRow>> by_order;
  for (const auto& r : compute_table1()) by_order[r.cell.n].emplace(r.cell.column, r);

  const char* cols[] = {"S30", "S21", "B5", "K4"};
  std::printf("%3s", "n");
  for (const char* c : cols) std::printf("  %18s", c);
  std::printf("\n");
  for (const auto& [n, row] : by_order) {
    std::printf("%3d", n);
    for (const char* c : cols) {
      auto it = row.find(c);
      if (it == row.end()) {
        std::printf("  %18s", "-");
      } else {
        std::printf("  %9.4f (%+.0e)", it->second.rho.mid(), it->second.delta);
      }
    }
    std::printf("\n");
  }
}
