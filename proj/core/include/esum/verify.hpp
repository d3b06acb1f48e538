#pragma once

#include <functional>
#include <string>
#include <vector>

#include "esum/bigreal.hpp"
#include "esum/identities.hpp"

namespace esum {

// Outcome of checking one identity instance: both sides evaluated at the
// configured working precision, then compared digit by digit.
struct VerifyReport {
  std::string identity;
  std::vector<int> params;
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  int digits_matched = 0;
  std::string status;  // "pass", "fail" or "flagged"
  long long elapsed_ms = 0;
  std::string diagnostic;  // nonempty only when evaluation failed
};

// A scheduled unit of suite work. Golden rows and identity instances are
// normalized to this shape so one runner covers both.
struct VerifyTask {
  std::string name;
  std::vector<int> params;
  IdentityStatus status = IdentityStatus::established;
  std::function<BigReal(const EvalConfig&)> lhs_fn;
  std::function<BigReal(const EvalConfig&)> rhs_fn;
};

struct SuiteSummary {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
};

struct SuiteResult {
  std::vector<VerifyReport> reports;
  SuiteSummary summary;
  EvalConfig config;
};

struct SuiteOptions {
  int jobs = 1;
  int timeout_secs = 300;  // per instance; <= 0 disables the deadline
};

// Evaluates both sides of one task and grades the agreement against
// cfg.target_digits. Evaluation errors are captured in the report, never
// rethrown; a suspect task that fails is graded "flagged".
VerifyReport verify_task(const VerifyTask& task, const EvalConfig& cfg);

VerifyReport verify_instance(const IdentityInstance& inst, const EvalConfig& cfg);

// Tasks for every golden-table row, in table order.
std::vector<VerifyTask> golden_tasks();

// Tasks for one identity over its default parameter grid.
std::vector<VerifyTask> tasks_for(IdentityTag tag);

// Named selections: "golden", "theorems", "lemmas", "all", or a single
// identity name. Throws std::invalid_argument for anything else.
std::vector<VerifyTask> suite_selection(const std::string& name);

// Runs tasks (Options::jobs at a time), each under its own deadline. Reports
// come back in task order regardless of scheduling.
SuiteResult run_suite(const std::vector<VerifyTask>& tasks, const EvalConfig& cfg,
                      const SuiteOptions& options = {});

std::string report_json(const VerifyReport& report);
std::string suite_json(const SuiteResult& result);
std::string report_text(const VerifyReport& report);
std::string suite_text(const SuiteResult& result);

}  // namespace esum
