#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algtool/json_io.hpp"

namespace algtool {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  Json detail;
};

/// Criteria 1..9. Criterion 9 reruns 1..8 at 1 and 4 worker threads in this
/// process and compares the JSON bytes.
CriterionResult run_criterion(int id, std::uint64_t seed);
CriterionResult criterion9(std::uint64_t seed);
std::vector<CriterionResult> run_criteria(std::uint64_t seed);

/// {"criteria": [...], "pass": bool}
Json criteria_json(const std::vector<CriterionResult>& results);

/// Power-series coefficients 0..n of num/den; den[0] must be nonzero.
std::vector<Cyclotomic> series_quotient(const std::vector<Cyclotomic>& num, const std::vector<Cyclotomic>& den, int n);

}  // namespace algtool
