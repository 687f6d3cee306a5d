#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nsfpen/config.hpp"
#include "nsfpen/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume simulator for the compressible Navier-Stokes-Fourier equations on "
               "the periodic box, with embedded boundaries enforced by volume penalization"};
  app.footer("The NSFPEN_OUTPUT_DIR environment variable overrides the config's output_dir.");
  app.require_subcommand(1);

  std::string run_config_path;
  std::string sweep_config_path;
  CLI::App* run = app.add_subcommand("run", "Execute one run from a config file");
  run->add_option("--config", run_config_path, "Path to the run configuration")->required();
  CLI::App* sweep =
      app.add_subcommand("sweep", "Execute an (N, epsilon) sweep and assemble error/EOC tables");
  sweep->add_option("--config", sweep_config_path, "Path to the sweep configuration")->required();
  CLI::App* check = app.add_subcommand("check", "Run the built-in invariant self-tests");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return nsfpen::cmd_run(nsfpen::parse_config(run_config_path));
    if (sweep->parsed()) return nsfpen::cmd_sweep(nsfpen::parse_config(sweep_config_path));
    if (check->parsed()) return nsfpen::cmd_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
