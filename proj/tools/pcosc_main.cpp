#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcosc/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pseudo-chiral oscillator laboratory"};
  app.set_version_flag("--version", std::string(pcosc::kVersion));
  app.require_subcommand(1);

  pcosc::RunConfig config;
  std::string out_path;
  std::string format = "json";
  std::vector<std::string> suites;
  bool no_timestamp = false;

  CLI::App* run_cmd = app.add_subcommand("run", "run verification suites");
  run_cmd->add_option("--omega", config.omega, "oscillator frequency");
  run_cmd->add_option("--dim", config.dim, "per-mode truncation dimension");
  run_cmd->add_option("--margin", config.margin,
                      "occupation margin excluded from interior checks");
  run_cmd->add_option("--tol", config.tol, "default residual tolerance");
  run_cmd->add_option("--seed", config.seed, "sampling seed");
  run_cmd->add_option("--suite", suites,
                      "suite to run (repeatable): classical, brackets, fock, "
                      "pseudoherm, su11, all");
  run_cmd->add_flag("--subtract-zero-point", config.zero_point_subtracted,
                    "report spectra with the ground level removed");
  run_cmd->add_option("--out", out_path, "write the report here (default stdout)");
  run_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_flag("--no-timestamp", no_timestamp,
                    "omit the timestamp for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.suites = suites;
  config.include_timestamp = !no_timestamp;

  try {
    const pcosc::Report report = pcosc::run(config);
    if (out_path.empty()) {
      pcosc::emit(report, format, std::cout);
      if (!std::cout) {
        std::cerr << "pcosc: failed writing to stdout\n";
        return 3;
      }
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "pcosc: cannot open '" << out_path << "' for writing\n";
        return 3;
      }
      pcosc::emit(report, format, out);
      out.flush();
      if (!out) {
        std::cerr << "pcosc: failed writing '" << out_path << "'\n";
        return 3;
      }
    }
    if (report.failed > 0) {
      std::cerr << "pcosc: " << report.failed << " of " << report.total
                << " checks failed\n";
      return 1;
    }
    return 0;
  } catch (const pcosc::InputError& e) {
    std::cerr << "pcosc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pcosc: " << e.what() << "\n";
    return 1;
  }
}
