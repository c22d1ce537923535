#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symbreak/distinguishing.hpp"

namespace symbreak {

struct SuiteReportLine {
  std::string suite;
  std::string case_id;
  std::string claim;
  std::string expected;
  std::string actual;
  enum class Status { pass, fail, skipped_budget } status = Status::fail;
  int64_t elapsed_ms = 0;
  uint64_t seed = 0;
};

struct SuiteOptions {
  SearchBudget budget = default_budget();
  uint64_t seed = 42;
  bool timings = false;  // keep reports byte-stable by default
};

// known suite ids, in report order
const std::vector<std::string>& suite_ids();

// runs one suite (or "all"); deterministic for fixed (suite, budget, seed);
// lines sorted by (suite, case)
std::vector<SuiteReportLine> run_suite(const std::string& suite_id, const SuiteOptions& options = {});

// one JSON object per line, UTF-8, stable key order
std::string emit_report(std::span<const SuiteReportLine> lines);

// 0 all pass, 1 any fail, 3 budget skips only
int report_exit_code(std::span<const SuiteReportLine> lines);

}  // namespace symbreak
