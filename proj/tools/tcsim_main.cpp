// Batch driver: runs one configured experiment per invocation and writes
// CSV time series plus a JSON summary. See README.md for the config schema.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "tcs/experiment.hpp"

namespace {

const char* const kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  1   unexpected internal error\n"
    "  2   ConfigParseError   config unreadable or not valid JSON\n"
    "  3   SchemaError        config violates the documented schema\n"
    "  4   InvalidStep        non-positive or oversized time step\n"
    "  5   NonAdmissibleB     Im(b) <= 0\n"
    "  6   CausticDetected    |z(t)| underflow during integration\n"
    "  7   DivisionNearCaustic  w/z evaluated with |z| <= 1e-12\n"
    "  8   GridMismatch       operands on different grids or misaligned times\n"
    "  9   TooFewPoints       finite differences need >= 3 samples\n"
    "  10  DegenerateSymbol   |h_pp| <= 1e-12\n"
    "  11  ZeroNorm           wavefunction norm below 1e-12\n"
    "  12  GridTooNarrow      < 6 standard deviations to a grid edge\n"
    "  13  ConfigInvalid      propagator phase-wrap guard or I/O failure\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tcsim - trajectory-coherent state experiments for 1-D "
               "Schroedinger dynamics"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "execute the configured experiment");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--output-dir", output_dir, "override the config's output_dir");
  run->add_flag("--quiet", quiet, "suppress progress output");

  CLI::App* validate =
      app.add_subcommand("validate", "schema-check a config without running");
  validate->add_option("config", config_path, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const std::vector<std::string> diags = tcs::validate_config(config_path);
      if (diags.empty()) {
        std::cout << "OK\n";
        return 0;
      }
      for (const auto& d : diags) std::cerr << d << '\n';
      return static_cast<int>(tcs::ErrorCode::schema);
    }
    tcs::ExperimentConfig config = tcs::load_config(config_path);
    if (!output_dir.empty()) config.output_dir = output_dir;
    tcs::run_experiment(config, std::cout, quiet);
    return 0;
  } catch (const tcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
