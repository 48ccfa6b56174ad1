#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gsfock/cli.hpp"
#include "gsfock/errors.hpp"

namespace gsfock::cli {

namespace {

RunConfig load_config(const std::string& path, std::optional<double> tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  RunConfig config = parse_config(text.str());
  if (tolerance) {
    if (!(*tolerance > 0.0) || !std::isfinite(*tolerance)) {
      throw ConfigError("--tolerance: must be a positive finite number");
    }
    config.tolerance = *tolerance;
  }
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformed Fock spaces for generalized statistics: build and verify."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gsfock 0.1.0");

  std::string config_path;
  std::optional<double> tolerance;
  std::size_t level = 0;
  bool emit_matrix = false;
  bool allow_inconsistent = false;
  std::string output_path;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "JSON configuration file")->required();
    sub->add_option("--tolerance", tolerance, "Override the config tolerance");
  };
  CLI::App* check = app.add_subcommand("check", "Structural checks on T and B");
  common(check);
  CLI::App* gram_cmd = app.add_subcommand("gram", "Gram matrix of one level");
  common(gram_cmd);
  gram_cmd->add_option("--level", level, "Level n (1 <= n <= nmax)")->required();
  gram_cmd->add_flag("--emit-matrix", emit_matrix, "Include the full Gram matrix");
  CLI::App* fock = app.add_subcommand("fock", "Build the Fock representation and verify its relations");
  common(fock);
  fock->add_flag("--allow-inconsistent", allow_inconsistent,
                 "Build quotients even if structural checks fail");
  CLI::App* report = app.add_subcommand("report", "Run everything and write a JSON report");
  common(report);
  report->add_option("-o,--output", output_path, "Report file")->required();
  report->add_flag("--emit-matrix", emit_matrix, "Include full Gram matrices");
  report->add_flag("--allow-inconsistent", allow_inconsistent,
                   "Build quotients even if structural checks fail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << "gsfock 0.1.0\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "gsfock: " << e.what() << "\n" << app.help();
    return kExitInvalid;
  }

  try {
    RunConfig config = load_config(config_path, tolerance);
    config.emit_matrix = emit_matrix;
    config.allow_inconsistent = allow_inconsistent;

    Outcome outcome;
    if (check->parsed()) {
      outcome = run_check(config);
    } else if (gram_cmd->parsed()) {
      outcome = run_gram(config, level);
    } else if (fock->parsed()) {
      outcome = run_fock(config);
    } else {
      outcome = run_report(config);
      std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw InputError("cannot write report to " + output_path);
      file << emit_json(outcome.report);
      if (!file) throw InputError("failed writing report to " + output_path);
      out << human_summary(outcome.report);
      return outcome.exit_code;
    }
    out << emit_json(outcome.report);
    return outcome.exit_code;
  } catch (const Error& e) {
    err << "gsfock: " << e.what() << "\n";
  } catch (const std::bad_alloc&) {
    err << "gsfock: out of memory\n";
  } catch (const std::exception& e) {
    err << "gsfock: internal error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

}  // namespace gsfock::cli
