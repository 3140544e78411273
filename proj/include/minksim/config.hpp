#pragma once

// Flat key=value run configuration with documented defaults, shared by the
// config-file path and the command-line flags.

#include <cstdint>
#include <optional>
#include <string>

#include "minksim/units.hpp"

namespace minksim {

enum class ExperimentKind { TimeDilation, ConstantForce, SyncTable, Trace };

struct RunConfig {
    ExperimentKind experiment = ExperimentKind::TimeDilation;
    double beta = 0.0;
    std::int64_t t_i = 1;
    std::int64_t mu = 1;
    std::int64_t tau_r = 10;
    std::int64_t ticks = 0;     // 0 = per-experiment default (7 dilation, 8 force)
    std::int64_t n_cells = 0;   // 0 = auto
    std::int64_t nodes = 0;     // trace: raw node horizon override
    std::int64_t sigma_max = 100;
    std::int64_t rho_max = 50;
    UnitSystem units;
    bool allow_superluminal = false;
    std::string out_path;        // empty = stdout
    std::string worldline_path;  // empty = not written
    std::string curve_path;      // empty = not written
    std::string trace_path;      // empty = no event log

    std::int64_t effective_ticks() const;
    void validate() const;  // throws ConfigError
};

/// Parses flat key=value text (newlines or commas separate entries, '#'
/// starts a comment). Unknown keys and malformed entries raise ConfigError
/// with the line number; the result is validated.
RunConfig parse_config(const std::string& text);

}  // namespace minksim
