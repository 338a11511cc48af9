#ifndef DIFFSPEC_SCENARIO_HPP
#define DIFFSPEC_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace diffspec {

/// Invalid scenario input (unknown fields, wrong types, bad values). Mapped
/// to exit code 2 by the CLI.
class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::string scenario_path;
    std::string out_dir;
    std::string format = "json";  // json | csv | both
    std::optional<std::uint64_t> seed_override;
    std::optional<int> workers_override;
};

/// Executes one CLI command against a scenario file and writes the report
/// files into out_dir (atomically, via temp-file rename).
///
/// Exit codes: 0 all checks passed / result computed; 1 a mathematical
/// assertion failed (the counterexample is serialized into the report);
/// 2 invalid input.
int run_command(const std::string& command, const RunOptions& options);

}  // namespace diffspec

#endif
