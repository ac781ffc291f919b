#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cmflow/config.hpp"

namespace cmflow {

/// Exit codes of the run command.
enum ExitCode : int {
  exit_ok = 0,        // terminal status matches the expected outcome
  exit_internal = 1,  // configuration or I/O failure
  exit_mismatch = 2,  // run finished with an unexpected terminal status
};

/// Runs one scenario and writes monitors.csv / final_state.json / echo.cfg
/// into the config's output directory (created if needed).
int cmd_run(const RunConfig& cfg, std::ostream& log);

/// Runs several configs, at most `jobs` in parallel (each writes to its own
/// directory). Returns the worst exit code.
int cmd_run_many(const std::vector<RunConfig>& cfgs, int jobs,
                 std::ostream& log);

/// Static checks on phi; writes a human-readable report to `log` (JSON when
/// json_out). Always exits 0 unless the config itself is invalid.
int cmd_check(const RunConfig& cfg, bool json_out, std::ostream& log);

} // namespace cmflow
