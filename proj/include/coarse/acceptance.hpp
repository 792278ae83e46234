#pragma once

// The acceptance suite: twelve desk-scale property checks over the library.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/verdict.hpp"
#include "coarse/window.hpp"

namespace coarse {

struct AcceptanceConfig {
  std::size_t budget = kDefaultBudget;  // element cap for every window
  std::uint64_t seed = 1;
  std::vector<int> only;  // criterion ids to run; empty runs all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::inconclusive;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});
// One line per criterion: "PASS  3  grasshopper cycles  (1.2 s)  detail".
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results, const AcceptanceConfig& cfg);

}  // namespace coarse
