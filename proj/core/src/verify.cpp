#include "esum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "esum/symbolic.hpp"

#include <json.hpp>

namespace esum {

namespace {

using json = nlohmann::ordered_json;

std::string grade(IdentityStatus status, bool passed) {
  if (passed) return "pass";
  return status == IdentityStatus::suspect ? "flagged" : "fail";
}

std::string task_label(const VerifyTask& task) {
  if (task.params.empty()) return task.name;
  std::string s = task.name + "(";
  for (std::size_t i = 0; i < task.params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(task.params[i]);
  }
  return s + ")";
}

VerifyTask task_from_instance(const IdentityInstance& inst) {
  VerifyTask t;
  t.name = inst.name;
  t.params = inst.params;
  t.status = inst.status;
  t.lhs_fn = inst.lhs_fn;
  t.rhs_fn = inst.rhs_fn;
  return t;
}

}  // namespace

VerifyReport verify_task(const VerifyTask& task, const EvalConfig& cfg) {
  VerifyReport rep;
  rep.identity = task.name;
  rep.params = task.params;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    cfg.validate();
    BigReal lhs = task.lhs_fn(cfg);
    BigReal rhs = task.rhs_fn(cfg);
    use_precision(cfg.working_digits);
    BigReal diff = abs(lhs - rhs);
    rep.lhs = to_decimal_string(lhs, cfg.target_digits + 2);
    rep.rhs = to_decimal_string(rhs, cfg.target_digits + 2);
    rep.abs_diff = to_decimal_string(diff, 3);
    rep.digits_matched = digits_matched(lhs, rhs);
    rep.status = grade(task.status, rep.digits_matched >= cfg.target_digits);
  } catch (const timeout_error&) {
    rep.diagnostic = "timeout";
    rep.status = grade(task.status, false);
  } catch (const std::exception& e) {
    rep.diagnostic = e.what();
    rep.status = grade(task.status, false);
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

VerifyReport verify_instance(const IdentityInstance& inst, const EvalConfig& cfg) {
  return verify_task(task_from_instance(inst), cfg);
}

std::vector<VerifyTask> golden_tasks() {
  std::vector<VerifyTask> tasks;
  for (const GoldenRow& row : golden_table()) {
    VerifyTask t;
    t.name = row.name;
    t.status = IdentityStatus::established;
    t.lhs_fn = [e = row.lhs](const EvalConfig& cfg) { return expr_eval(e, cfg); };
    t.rhs_fn = [e = row.rhs](const EvalConfig& cfg) { return expr_eval(e, cfg); };
    tasks.push_back(std::move(t));
  }
  return tasks;
}

std::vector<VerifyTask> tasks_for(IdentityTag tag) {
  auto grid = default_grid(tag);
  std::sort(grid.begin(), grid.end());
  std::vector<VerifyTask> tasks;
  for (const auto& params : grid) {
    tasks.push_back(task_from_instance(instantiate(tag, params)));
  }
  return tasks;
}

std::vector<VerifyTask> suite_selection(const std::string& name) {
  auto tags_tasks = [](std::initializer_list<IdentityTag> tags) {
    std::vector<VerifyTask> tasks;
    for (IdentityTag tag : tags) {
      auto t = tasks_for(tag);
      tasks.insert(tasks.end(), std::make_move_iterator(t.begin()),
                   std::make_move_iterator(t.end()));
    }
    return tasks;
  };
  static const std::initializer_list<IdentityTag> theorem_tags = {
      IdentityTag::thm1, IdentityTag::thm2, IdentityTag::thm3, IdentityTag::cor3,
      IdentityTag::cor4, IdentityTag::thm56, IdentityTag::eq_5_7};
  static const std::initializer_list<IdentityTag> lemma_tags = {
      IdentityTag::lemma31, IdentityTag::lemma32, IdentityTag::lemma51,
      IdentityTag::eq_3_5,  IdentityTag::eq_3_6,  IdentityTag::eq_3_7,
      IdentityTag::eq_3_8,  IdentityTag::eq_3_10, IdentityTag::eq_3_13,
      IdentityTag::eq_3_14, IdentityTag::eq_3_15};
  if (name == "golden") return golden_tasks();
  if (name == "theorems") return tags_tasks(theorem_tags);
  if (name == "lemmas") return tags_tasks(lemma_tags);
  if (name == "all") {
    // Golden rows first in table order, then every cataloged identity in
    // catalog order over its default grid.
    std::vector<VerifyTask> tasks = golden_tasks();
    for (const CatalogRow& row : catalog_list()) {
      auto t = tasks_for(row.tag);
      tasks.insert(tasks.end(), std::make_move_iterator(t.begin()),
                   std::make_move_iterator(t.end()));
    }
    return tasks;
  }
  return tasks_for(tag_from_name(name));
}

SuiteResult run_suite(const std::vector<VerifyTask>& tasks, const EvalConfig& cfg,
                      const SuiteOptions& options) {
  SuiteResult result;
  result.config = cfg;
  result.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      EvalConfig local = cfg;
      if (options.timeout_secs > 0) {
        local.deadline =
            std::chrono::steady_clock::now() + std::chrono::seconds(options.timeout_secs);
      }
      result.reports[i] = verify_task(tasks[i], local);
    }
  };
  int jobs = std::clamp<int>(options.jobs, 1, int(tasks.size() ? tasks.size() : 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& rep : result.reports) {
    if (rep.status == "pass") {
      ++result.summary.pass;
    } else if (rep.status == "flagged") {
      ++result.summary.flagged;
    } else {
      ++result.summary.fail;
    }
  }
  return result;
}

namespace {

json report_to_json(const VerifyReport& rep) {
  json j;
  j["identity"] = rep.identity;
  j["params"] = rep.params;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["abs_diff"] = rep.abs_diff;
  j["digits_matched"] = rep.digits_matched;
  j["status"] = rep.status;
  j["elapsed_ms"] = rep.elapsed_ms;
  if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
  return j;
}

}  // namespace

std::string report_json(const VerifyReport& rep) { return report_to_json(rep).dump(2); }

std::string suite_json(const SuiteResult& result) {
  json j;
  j["reports"] = json::array();
  for (const auto& rep : result.reports) j["reports"].push_back(report_to_json(rep));
  j["summary"] = {{"pass", result.summary.pass},
                  {"fail", result.summary.fail},
                  {"flagged", result.summary.flagged}};
  j["config"] = {{"target_digits", result.config.target_digits},
                 {"working_digits", result.config.working_digits},
                 {"max_terms", result.config.max_terms},
                 {"em_order", result.config.em_order}};
  return j.dump(2);
}

std::string report_text(const VerifyReport& rep) {
  VerifyTask label_task;
  label_task.name = rep.identity;
  label_task.params = rep.params;
  std::ostringstream os;
  os << task_label(label_task) << ": " << rep.status;
  if (rep.diagnostic.empty()) {
    os << "  digits=" << rep.digits_matched << "  |lhs-rhs|=" << rep.abs_diff
       << "  lhs=" << rep.lhs << "  rhs=" << rep.rhs;
  } else {
    os << "  error: " << rep.diagnostic;
  }
  os << "  (" << rep.elapsed_ms << " ms)";
  return os.str();
}

std::string suite_text(const SuiteResult& result) {
  std::ostringstream os;
  for (const auto& rep : result.reports) os << report_text(rep) << "\n";
  os << "summary: " << result.summary.pass << " pass, " << result.summary.fail << " fail, "
     << result.summary.flagged << " flagged\n";
  return os.str();
}

}  // namespace esum
