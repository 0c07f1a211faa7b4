#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilharm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criteria 1-9 in order; `seed` drives every randomized trial.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);
CriterionResult run_criterion(int id, std::uint64_t seed);

/// NILHARM_SEED when set and numeric, else 0.
std::uint64_t seed_from_environment();

/// "[PASS] 3 pfaffian closed forms: ..." (one line, no newline).
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace nilharm
