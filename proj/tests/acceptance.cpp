// Runs the full acceptance suite and prints one line per check.

#include <cstdio>

#include "arf/selftest.hpp"

int main() {
  arf::selftest::Config cfg;
  const auto results = arf::selftest::run(cfg);
  for (const auto& r : results)
    std::printf("[%s] check %d [%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.suite.c_str(), r.name.c_str(), r.detail.c_str());
  const bool ok = arf::selftest::all_passed(results);
  std::printf("acceptance: %s\n", ok ? "all checks passed" : "FAILURES present");
  return ok ? 0 : 1;
}
