#pragma once

// Command-line front end. Subcommands: time-dilation, constant-force,
// sync-table, trace. Exit codes: 0 success, 1 configuration error,
// 2 runtime error.

#include <string>

#include "minksim/config.hpp"
#include "minksim/engine.hpp"

namespace minksim {

/// Runs one configured experiment and writes its outputs. Returns the
/// process exit code.
int run_config(const RunConfig& cfg);

/// Full argv entry point.
int run_cli(int argc, char** argv);

/// Event log text, one formatted event per line.
std::string trace_text(const RunResult& run);

/// "sigma,rho,marked" table over 0..sigma_max x 0..rho_max.
std::string sync_table_csv(std::int64_t sigma_max, std::int64_t rho_max, const Rational& ratio);

}  // namespace minksim
