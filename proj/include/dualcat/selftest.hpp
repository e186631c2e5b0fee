#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dualcat {

struct SuiteResult {
  std::string name;
  std::string description;
  bool pass = false;
  std::string detail;
};

/// Suite names in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs one oracle suite; all randomness derives from the seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace dualcat
