#ifndef TCS_EXPERIMENT_HPP
#define TCS_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcs/minimality.hpp"
#include "tcs/oracle.hpp"

namespace tcs {

enum class ExperimentKind { trajectory, riccati, minimality, moments, oracle_compare };

std::string experiment_name(ExperimentKind kind);

// One batch run, fully described by a JSON config document.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::trajectory;
  PotentialSpec potential = PotentialSpec::free_particle();
  PhysicalParams params;
  InitialData init;
  double t_final = 1.0;
  double dt = 1e-3;
  std::optional<GridSpec> grid;  // auto-sized when absent
  std::filesystem::path output_dir;
  Tolerances tolerances;
  std::vector<double> snapshot_times;  // defaulted when absent
};

// Parses and schema-checks a config file. Throws ConfigParseError on
// malformed JSON, SchemaError on the first invariant violation.
ExperimentConfig load_config(const std::filesystem::path& path);

// Full schema and invariant check without running. Returns one diagnostic
// per violation, each prefixed with a $.field locator; empty means valid.
// Throws ConfigParseError on malformed JSON.
std::vector<std::string> validate_config(const std::filesystem::path& path);

// Executes the configured experiment and writes series.csv, summary.json
// and (for moments / oracle_compare) wavefunction snapshot CSVs into
// output_dir. Progress notes go to `log` unless quiet.
void run_experiment(const ExperimentConfig& config, std::ostream& log,
                    bool quiet = false);

namespace detail {
// 17-significant-digit decimal text; the fixed formatting contract shared
// by every data file the tool writes.
std::string fmt17(double v);
}  // namespace detail

}  // namespace tcs

#endif  // TCS_EXPERIMENT_HPP
