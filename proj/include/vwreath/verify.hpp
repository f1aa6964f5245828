#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vwreath/parallel.hpp"
#include "vwreath/random.hpp"

namespace vwreath {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 0;  // 0 keeps each suite's default case count
  int jobs = 0;
  Exec exec = Exec::parallel;
};

// A case returns a failure description, or nothing when it passes.
using CaseBody = std::function<std::optional<std::string>(Rng&, std::size_t)>;

struct CaseOutcome {
  std::size_t cases = 0;
  std::optional<std::size_t> failed_index;  // lowest failing index
  std::string failure;
  bool ok() const { return !failed_index; }
};

// Runs cases 0..n-1, each with case_rng(seed, i); exceptions count as failures.
CaseOutcome run_cases(std::size_t n, std::uint64_t seed, const CaseBody& body, Exec exec = Exec::parallel, int jobs = 0);

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::size_t cases;
  double seconds;
  std::string detail;
};

struct Suite {
  int id;
  std::string name;
  std::string summary;
  std::size_t default_cases;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);
// Timings are left out by default so that equal seeds give equal bytes.
std::string format_result(const CriterionResult& r, bool with_time = false);

}  // namespace vwreath
