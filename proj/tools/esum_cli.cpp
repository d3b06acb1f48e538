#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "esum/identities.hpp"
#include "esum/symbolic.hpp"
#include "esum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

namespace {

struct CliOptions {
  int digits = 10;
  int working_digits = 0;  // 0 means digits + 20
  long long max_terms = 10'000'000;
  std::string format = "text";
  std::string out_path;
  int timeout_secs = 300;
  int jobs = int(std::thread::hardware_concurrency());
  bool force = false;
};

esum::EvalConfig make_config(const CliOptions& opt) {
  esum::EvalConfig cfg;
  cfg.target_digits = opt.digits;
  cfg.working_digits = opt.working_digits > 0 ? opt.working_digits : opt.digits + 20;
  cfg.max_terms = opt.max_terms;
  cfg.validate();
  return cfg;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--digits", opt.digits, "target decimal digits of agreement")
      ->check(CLI::Range(1, 120));
  cmd->add_option("--working-digits", opt.working_digits,
                  "internal precision in decimal digits (default: digits + 20)");
  cmd->add_option("--max-terms", opt.max_terms, "series term budget per evaluation");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", opt.out_path, "write the report to this file");
  cmd->add_option("--timeout-secs", opt.timeout_secs,
                  "per-instance evaluation deadline in seconds (0 disables)");
}

void emit(const CliOptions& opt, const std::string& body) {
  std::string text = body;
  if (text.empty() || text.back() != '\n') text += '\n';
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
  out << text;
}

void apply_deadline(esum::EvalConfig& cfg, const CliOptions& opt) {
  if (opt.timeout_secs > 0) {
    cfg.deadline =
        std::chrono::steady_clock::now() + std::chrono::seconds(opt.timeout_secs);
  }
}

int run_eval(const CliOptions& opt, const std::string& expr_text) {
  esum::Expression e = esum::parse_expr(expr_text);
  esum::EvalConfig cfg = make_config(opt);
  apply_deadline(cfg, opt);
  esum::BigReal value = esum::expr_eval(e, cfg);
  std::string decimal = esum::to_decimal_string(value, opt.digits);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = esum::print_expr(e);
    j["value"] = decimal;
    j["digits"] = opt.digits;
    emit(opt, j.dump(2));
  } else {
    emit(opt, decimal);
  }
  return 0;
}

int run_verify(const CliOptions& opt, const std::string& tag_name,
               const std::vector<int>& params) {
  esum::IdentityTag tag = esum::tag_from_name(tag_name);
  esum::IdentityInstance inst = esum::instantiate(tag, params, opt.force);
  esum::EvalConfig cfg = make_config(opt);
  apply_deadline(cfg, opt);
  esum::VerifyReport rep = esum::verify_instance(inst, cfg);
  emit(opt, opt.format == "json" ? esum::report_json(rep) : esum::report_text(rep));
  return rep.status == "fail" ? 1 : 0;
}

int run_suite(const CliOptions& opt, const std::vector<std::string>& selections) {
  std::vector<esum::VerifyTask> tasks;
  for (const std::string& sel : selections) {
    auto part = esum::suite_selection(sel);
    tasks.insert(tasks.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  esum::EvalConfig cfg = make_config(opt);
  esum::SuiteOptions sopt;
  sopt.jobs = opt.jobs > 0 ? opt.jobs : 1;
  sopt.timeout_secs = opt.timeout_secs;
  esum::SuiteResult result = esum::run_suite(tasks, cfg, sopt);
  emit(opt, opt.format == "json" ? esum::suite_json(result) : esum::suite_text(result));
  return result.summary.fail > 0 ? 1 : 0;
}

int run_list(const CliOptions& opt) {
  const auto& rows = esum::catalog_list();
  if (opt.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["name"] = row.name;
      j["status"] =
          row.status == esum::IdentityStatus::suspect ? "suspect" : "established";
      j["domain"] = row.domain;
      j["reference"] = row.reference;
      arr.push_back(j);
    }
    emit(opt, arr.dump(2));
    return 0;
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    os << std::left << std::setw(16) << row.name << std::setw(13)
       << (row.status == esum::IdentityStatus::suspect ? "suspect" : "established")
       << std::setw(46) << row.domain << row.reference << "\n";
  }
  emit(opt, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision Euler sum, multiple zeta value and identity toolkit"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string expr_text;
  std::string tag_name;
  std::vector<int> params;
  std::vector<std::string> selections;

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate an expression and print its decimal value");
  eval_cmd->add_option("expr", expr_text, "expression text, e.g. \"zeta(2,1) + ln2^2\"")
      ->required();
  add_common_flags(eval_cmd, opt);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check one identity instance and print a report");
  verify_cmd->add_option("identity", tag_name, "identity name from the catalog")->required();
  verify_cmd->add_option("params", params, "integer parameters for the identity");
  verify_cmd->add_flag("--force", opt.force,
                       "bypass domain and parity checks for exploration");
  add_common_flags(verify_cmd, opt);

  CLI::App* suite_cmd =
      app.add_subcommand("suite", "run a verification suite over default grids");
  suite_cmd
      ->add_option("selection", selections,
                   "suite name (golden, theorems, lemmas, all) or identity names")
      ->required();
  suite_cmd->add_option("--jobs", opt.jobs, "parallel instances (default: core count)");
  add_common_flags(suite_cmd, opt);

  CLI::App* list_cmd = app.add_subcommand("list", "print the identity catalog");
  add_common_flags(list_cmd, opt);

  try {
    app.parse(argc, argv);
    if (eval_cmd->parsed()) return run_eval(opt, expr_text);
    if (verify_cmd->parsed()) return run_verify(opt, tag_name, params);
    if (suite_cmd->parsed()) return run_suite(opt, selections);
    if (list_cmd->parsed()) return run_list(opt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const esum::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const esum::divergence_error& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
