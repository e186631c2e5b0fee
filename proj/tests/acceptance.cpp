// Acceptance suite: one criterion per line, exact tolerances pinned in the
// library's selftest suites. Exit status 0 only when every criterion passes.
#include <cstdio>

#include "dualcat/selftest.hpp"

int main() {
  const std::uint64_t seed = 0;
  bool all = true;
  int n = 0;
  for (auto& name : dualcat::suite_names()) {
    dualcat::SuiteResult r = dualcat::run_suite(name, seed);
    ++n;
    std::printf("[%s] criterion %2d (%s): %s — %s\n", r.pass ? "PASS" : "FAIL", n, name.c_str(),
                r.description.c_str(), r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
