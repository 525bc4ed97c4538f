#pragma once
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace scissors::report {

const std::vector<std::string>& suite_names();
int default_cases(const std::string& suite);

struct SuiteRun {
  nlohmann::json results;  // {"suite", "cases", "passed", "failed", "verdict", "table", "failures"}
  bool pass = false;
};

// Randomized cases draw from Rng(seed, case index), so every case can be
// regenerated alone. Fixed suites ignore the seed.
// errors: UnknownSuite
SuiteRun run_suite(const std::string& suite, uint64_t seed, std::optional<int> cases);

}  // namespace scissors::report
