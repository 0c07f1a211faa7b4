// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <iostream>

#include "nilharm/acceptance.hpp"

int main() {
  std::uint64_t seed = nilharm::seed_from_environment();
  std::cout << "acceptance suite, seed " << seed << "\n";
  int failed = 0;
  for (int id = 1; id <= 9; ++id) {
    auto r = nilharm::run_criterion(id, seed);
    std::cout << nilharm::format_line(r) << " (" << r.seconds << " s)" << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
