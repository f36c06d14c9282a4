#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgli/models.hpp"
#include "dgli/table_io.hpp"
#include "dgli/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

dgli::verify::Format parse_format(const std::string& name) {
  if (name == "json") return dgli::verify::Format::json;
  if (name == "csv") return dgli::verify::Format::csv;
  if (name == "markdown") return dgli::verify::Format::markdown;
  throw std::invalid_argument("unknown format: " + name);
}

struct SuiteOptions {
  std::string suite = "all";
  long truncate = -1;
  long cases = -1;
  long seed = -1;
  std::map<std::string, long> bound_flags;  // flag key -> value
  std::vector<std::string> raw_overrides;   // check.param=value
  unsigned jobs = 0;
  bool timings = false;
};

// Curated bound flags and the checks they fan out to.
const std::map<std::string, std::vector<std::pair<const char*, const char*>>>&
bound_targets() {
  static const std::map<std::string,
                        std::vector<std::pair<const char*, const char*>>>
      targets = {
          {"max-lambda",
           {{"bernoulli_coefficients", "max"}, {"model_certificates", "max"}}},
          {"max-order", {{"geometric_flatness", "max"}}},
          {"max-pq",
           {{"adjoint_composition", "max_pq"},
            {"theta_span", "max_pq"},
            {"theta_composition", "max_pq"}}},
          {"max-even",
           {{"operator_projection", "max"},
            {"relation_consistency", "max"},
            {"bernoulli_v_relation", "max"}}},
          {"max-euler", {{"euler", "max"}}},
          {"max-v", {{"v_closed_form", "max"}}},
          {"max-diagonal", {{"diagonal_sum", "max"}}},
          {"max-column", {{"column_sum", "max"}}},
          {"max-step", {{"cross_alphabet", "max_step"}}},
          {"max-independence", {{"mu_independence", "max"}}},
          {"max-support", {{"mu_support", "max"}}},
          {"max-acyclicity", {{"acyclicity", "max"}}},
          {"max-anticommute", {{"d1_anticommute", "max"}}},
          {"max-odd", {{"bernoulli_odd", "max"}}},
      };
  return targets;
}

void add_suite_options(CLI::App* cmd, SuiteOptions& options) {
  cmd->add_option("--suite", options.suite, "all, sequences, lie or models")
      ->default_val("all");
  cmd->add_option("--truncate", options.truncate,
                  "override the truncation of every check that has one");
  cmd->add_option("--cases", options.cases,
                  "override the case count of randomized checks");
  cmd->add_option("--seed", options.seed,
                  "override the seed of randomized checks");
  for (const auto& [flag, targets] : bound_targets()) {
    options.bound_flags[flag] = -1;
    cmd->add_option("--" + flag, options.bound_flags[flag],
                    "bound override for " + std::string(targets.front().first) +
                        (targets.size() > 1 ? " and related checks" : ""));
  }
  cmd->add_option("--set", options.raw_overrides,
                  "explicit override, check.param=value (repeatable)");
  cmd->add_option("--jobs", options.jobs, "worker threads (0 = hardware)");
  cmd->add_flag("--timings", options.timings,
                "record wall-clock runtimes (reports stop being reproducible)");
}

std::vector<dgli::verify::CheckSpec> build_specs(const SuiteOptions& options) {
  auto specs = dgli::verify::suite(options.suite);

  auto set_where_present = [&](const std::string& key, long value) {
    for (auto& spec : specs) {
      if (dgli::verify::check_defaults(spec.name).count(key) != 0) {
        spec.params[key] = value;
      }
    }
  };
  if (options.truncate >= 0) set_where_present("truncation", options.truncate);
  if (options.cases >= 0) set_where_present("cases", options.cases);
  if (options.seed >= 0) set_where_present("seed", options.seed);

  for (const auto& [flag, value] : options.bound_flags) {
    if (value < 0) continue;
    for (const auto& [check, param] : bound_targets().at(flag)) {
      for (auto& spec : specs) {
        if (spec.name == check) spec.params[param] = value;
      }
    }
  }

  for (const auto& raw : options.raw_overrides) {
    const auto dot = raw.find('.');
    const auto eq = raw.find('=');
    if (dot == std::string::npos || eq == std::string::npos || eq < dot) {
      throw std::invalid_argument("expected check.param=value, got: " + raw);
    }
    const std::string check = raw.substr(0, dot);
    const std::string param = raw.substr(dot + 1, eq - dot - 1);
    const long value = std::stol(raw.substr(eq + 1));
    bool found = false;
    for (auto& spec : specs) {
      if (spec.name == check) {
        spec.params[param] = value;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("check not in suite: " + check);
    }
  }
  return specs;
}

int report_exit_code(const dgli::verify::VerificationReport& report) {
  return report.summary.failed == 0 ? kExitPass : kExitFail;
}

void print_human_summary(const dgli::verify::VerificationReport& report,
                         bool list_failures_only) {
  for (const auto& check : report.checks) {
    const bool failed = check.status == dgli::verify::Status::fail;
    if (list_failures_only && !failed) continue;
    std::string params;
    for (const auto& [key, value] : check.params) {
      if (!params.empty()) params += ';';
      params += key + "=" + std::to_string(value);
    }
    const std::string status(dgli::verify::to_string(check.status));
    std::cout << (failed ? "FAIL" : status) << "  " << check.name
              << (params.empty() ? "" : "  " + params);
    if (failed && !check.witness_json.empty()) {
      std::cout << "  " << check.witness_json;
    }
    std::cout << "\n";
  }
  std::cout << "summary: total " << report.summary.total << ", passed "
            << report.summary.passed << ", failed " << report.summary.failed
            << "\n";
}

int run_build_model(unsigned max, long truncate, bool cross_check,
                    long cross_check_max, const std::string& out_path) {
  const int truncation =
      truncate >= 0 ? static_cast<int>(truncate)
                    : std::max(22, static_cast<int>(max) + 2);
  const auto model = dgli::inductive_build(max, truncation);
  write_output(dgli::model_json(model) + "\n", out_path);
  if (!cross_check) return kExitPass;

  bool ok = true;
  const unsigned last_step =
      std::min<unsigned>(max, static_cast<unsigned>(cross_check_max) + 1);
  for (unsigned step = 2; step <= last_step; ++step) {
    if (!dgli::cross_presentation_consistent(model.lambdas, step, truncation)) {
      std::cerr << "cross-check failed at step " << step << "\n";
      ok = false;
    }
  }
  std::cerr << (ok ? "cross-check ok" : "cross-check failed") << " (steps 2.."
            << last_step << ")\n";
  return ok ? kExitPass : kExitFail;
}

int run_geometric(unsigned max, long truncate, bool check_flatness,
                  const std::string& out_path) {
  const int truncation = truncate >= 0 ? static_cast<int>(truncate)
                                       : static_cast<int>(max) + 2;
  const dgli::BernoulliTable table(max);
  const auto model = dgli::IntervalModel::geometric(table, max, truncation);
  write_output(dgli::model_json(model) + "\n", out_path);
  if (!check_flatness) return kExitPass;
  const auto report = dgli::d_squared_report(model);
  if (report.ok) {
    std::cerr << "flatness ok through word length " << max + 1 << "\n";
    return kExitPass;
  }
  std::cerr << "flatness fails on " << report.generator << " at word length "
            << report.failing_length << "\n";
  return kExitFail;
}

int run_tables(const std::string& which, long max, const std::string& format,
               const std::string& out_path) {
  if (which == "v") {
    const int bound = max >= 0 ? static_cast<int>(max) : 7;
    const dgli::VTable table(bound);
    if (format == "csv") {
      write_output(dgli::v_table_csv(table, bound), out_path);
    } else if (format == "json") {
      write_output(dgli::v_table_json(table, bound) + "\n", out_path);
    } else if (format == "markdown") {
      write_output(dgli::v_table_markdown(table, bound), out_path);
    } else {
      throw std::invalid_argument("unknown format: " + format);
    }
    return kExitPass;
  }
  if (which == "bernoulli") {
    const int bound = max >= 0 ? static_cast<int>(max) : 12;
    const dgli::BernoulliTable table(static_cast<std::size_t>(bound));
    if (format == "csv") {
      write_output(dgli::bernoulli_csv(table, bound), out_path);
    } else if (format == "json") {
      write_output(dgli::bernoulli_json(table, bound) + "\n", out_path);
    } else if (format == "markdown") {
      write_output(dgli::bernoulli_markdown(table, bound), out_path);
    } else {
      throw std::invalid_argument("unknown format: " + format);
    }
    return kExitPass;
  }
  throw std::invalid_argument("unknown table: " + which);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval model toolkit"};
  app.require_subcommand(1);

  // build-model
  auto* build_cmd = app.add_subcommand(
      "build-model", "build the one-generator model degree by degree");
  unsigned build_max = 20;
  long build_truncate = -1;
  bool build_cross_check = false;
  long build_cross_max = 8;
  std::string build_out;
  build_cmd->add_option("--max", build_max, "highest coefficient index")
      ->default_val(20);
  build_cmd->add_option("--truncate", build_truncate,
                        "tensor truncation (default max+2, at least 22)");
  build_cmd->add_flag("--cross-check", build_cross_check,
                      "replay the obstruction cycles in the endpoint "
                      "presentation and compare");
  build_cmd->add_option("--cross-check-max", build_cross_max,
                        "highest cycle index to replay");
  build_cmd->add_option("--out", build_out, "write JSON here instead of stdout");

  // geometric
  auto* geo_cmd = app.add_subcommand(
      "geometric", "emit the endpoint model with Bernoulli coefficients");
  unsigned geo_max = 14;
  long geo_truncate = -1;
  bool geo_check = false;
  std::string geo_out;
  geo_cmd->add_option("--max", geo_max, "highest Bernoulli order")
      ->default_val(14);
  geo_cmd->add_option("--truncate", geo_truncate,
                      "tensor truncation (default max+2)");
  geo_cmd->add_flag("--check", geo_check, "also verify d^2 = 0");
  geo_cmd->add_option("--out", geo_out, "write JSON here instead of stdout");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run a check suite and print the results");
  SuiteOptions verify_options;
  add_suite_options(verify_cmd, verify_options);
  std::string verify_out;
  std::string verify_format = "json";
  bool verify_quiet = false;
  verify_cmd->add_option("--out", verify_out, "also write a report file");
  verify_cmd->add_option("--format", verify_format,
                         "report format: json, csv or markdown");
  verify_cmd->add_flag("--failures-only", verify_quiet,
                       "print failing checks only");

  // tables
  auto* tables_cmd =
      app.add_subcommand("tables", "emit the v or Bernoulli table");
  std::string tables_which;
  long tables_max = -1;
  std::string tables_format = "markdown";
  std::string tables_out;
  tables_cmd->add_option("--which", tables_which, "v or bernoulli")->required();
  tables_cmd->add_option("--max", tables_max, "highest row (default 7 or 12)");
  tables_cmd->add_option("--format", tables_format,
                         "csv, markdown or json");
  tables_cmd->add_option("--out", tables_out, "write here instead of stdout");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "run a suite and write a report file");
  SuiteOptions report_options;
  add_suite_options(report_cmd, report_options);
  std::string report_out;
  std::string report_format = "json";
  report_cmd->add_option("--out", report_out, "report path")->required();
  report_cmd->add_option("--format", report_format,
                         "report format: json, csv or markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (build_cmd->parsed()) {
      return run_build_model(build_max, build_truncate, build_cross_check,
                             build_cross_max, build_out);
    }
    if (geo_cmd->parsed()) {
      return run_geometric(geo_max, geo_truncate, geo_check, geo_out);
    }
    if (tables_cmd->parsed()) {
      return run_tables(tables_which, tables_max, tables_format, tables_out);
    }
    if (verify_cmd->parsed()) {
      const auto specs = build_specs(verify_options);
      dgli::verify::RunOptions run_options;
      run_options.jobs = verify_options.jobs;
      run_options.timings = verify_options.timings;
      const auto report = dgli::verify::run_suite(specs, run_options);
      print_human_summary(report, verify_quiet);
      if (!verify_out.empty()) {
        write_output(dgli::verify::emit(report, parse_format(verify_format)),
                     verify_out);
      }
      return report_exit_code(report);
    }
    if (report_cmd->parsed()) {
      const auto specs = build_specs(report_options);
      dgli::verify::RunOptions run_options;
      run_options.jobs = report_options.jobs;
      run_options.timings = report_options.timings;
      const auto report = dgli::verify::run_suite(specs, run_options);
      write_output(dgli::verify::emit(report, parse_format(report_format)),
                   report_out);
      std::cout << "summary: total " << report.summary.total << ", passed "
                << report.summary.passed << ", failed "
                << report.summary.failed << "\n";
      return report_exit_code(report);
    }
  } catch (const dgli::verify::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
