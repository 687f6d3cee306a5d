#pragma once

#include <string>

#include "nsfpen/config.hpp"

namespace nsfpen {

/// Output directory for a config, honoring the NSFPEN_OUTPUT_DIR
/// environment override.
std::string resolve_output_dir(const RunConfig& config);

/// Single run: project the experiment's initial data, integrate to the final
/// time, write VTK snapshots at the dump cadence plus diagnostics.csv.
/// Returns the process exit status (nonzero on scheme failure).
int cmd_run(const RunConfig& config);

/// Sweep: execute the deduplicated union of (N, epsilon) jobs with their
/// references, then assemble errors.csv and eoc.csv. Failed runs are marked
/// in the tables and the sweep continues; the exit status is nonzero if any
/// job failed.
int cmd_sweep(const RunConfig& config);

/// Built-in invariant self-test (operator identities, upwind oracle,
/// equilibrium fixed point, format round trips); prints one line per check.
int cmd_check();

} // namespace nsfpen
