#include "minksim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "minksim/errors.hpp"

namespace minksim {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || v.empty() || !std::isfinite(d))
        throw ConfigError("line " + std::to_string(line) + ": bad number for '" + key + "': " + v);
    return d;
}

std::int64_t parse_int(const std::string& v, const std::string& key, int line) {
    std::int64_t i = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), i);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("line " + std::to_string(line) + ": bad integer for '" + key + "': " + v);
    return i;
}

bool parse_bool(const std::string& v, const std::string& key, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("line " + std::to_string(line) + ": bad boolean for '" + key + "': " + v);
}

ExperimentKind parse_experiment(const std::string& v, int line) {
    if (v == "time-dilation") return ExperimentKind::TimeDilation;
    if (v == "constant-force") return ExperimentKind::ConstantForce;
    if (v == "sync-table") return ExperimentKind::SyncTable;
    if (v == "trace") return ExperimentKind::Trace;
    throw ConfigError("line " + std::to_string(line) + ": unknown experiment '" + v +
                      "' (expected time-dilation, constant-force, sync-table or trace)");
}

}  // namespace

std::int64_t RunConfig::effective_ticks() const {
    if (ticks > 0) return ticks;
    return experiment == ExperimentKind::ConstantForce ? 8 : 7;
}

void RunConfig::validate() const {
    units.validate();
    if (tau_r < 1) throw ConfigError("config: tau_r must be >= 1");
    if (ticks < 0) throw ConfigError("config: ticks must be >= 1");
    if (n_cells < 0) throw ConfigError("config: cells must be >= 1");
    if (experiment == ExperimentKind::TimeDilation || experiment == ExperimentKind::Trace) {
        if (beta < 0) throw ConfigError("config: beta must be >= 0");
        if (beta > 1.0 && !allow_superluminal)
            throw ConfigError("config: beta > 1 puts the momentum register beyond tau_r; "
                              "the model caps speed at light. Set allow_superluminal=true to force it.");
    }
    if (experiment == ExperimentKind::ConstantForce) {
        if (t_i < 1) throw ConfigError("config: ti must be >= 1");
        if (mu < 1) throw ConfigError("config: mu must be >= 1");
    }
    if (experiment == ExperimentKind::SyncTable) {
        if (sigma_max < 0 || rho_max < 0)
            throw ConfigError("config: sigma_max and rho_max must be >= 0");
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool have_experiment = false;
    bool have_beta = false;

    std::vector<std::pair<int, std::string>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string piece = trim(line.substr(start, comma == std::string::npos ? std::string::npos
                                                                                   : comma - start));
            if (!piece.empty()) entries.emplace_back(line_no, piece);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }

    for (const auto& [ln, entry] : entries) {
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(ln) + ": expected key=value, got '" + entry + "'");
        std::string key = trim(entry.substr(0, eq));
        std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(ln) + ": empty key");
        if (value.empty()) throw ConfigError("line " + std::to_string(ln) + ": empty value for '" + key + "'");

        if (key == "experiment") {
            cfg.experiment = parse_experiment(value, ln);
            have_experiment = true;
        } else if (key == "beta") {
            cfg.beta = parse_double(value, key, ln);
            have_beta = true;
        } else if (key == "ti") {
            cfg.t_i = parse_int(value, key, ln);
        } else if (key == "mu") {
            cfg.mu = parse_int(value, key, ln);
        } else if (key == "tau_r") {
            cfg.tau_r = parse_int(value, key, ln);
        } else if (key == "ticks") {
            cfg.ticks = parse_int(value, key, ln);
        } else if (key == "cells") {
            cfg.n_cells = parse_int(value, key, ln);
        } else if (key == "nodes") {
            cfg.nodes = parse_int(value, key, ln);
        } else if (key == "sigma_max") {
            cfg.sigma_max = parse_int(value, key, ln);
        } else if (key == "rho_max") {
            cfg.rho_max = parse_int(value, key, ln);
        } else if (key == "v_t") {
            cfg.units.v_t = parse_double(value, key, ln);
        } else if (key == "v_l") {
            cfg.units.v_l = parse_double(value, key, ln);
        } else if (key == "v_m") {
            cfg.units.v_m = parse_double(value, key, ln);
        } else if (key == "c") {
            cfg.units.c = parse_double(value, key, ln);
        } else if (key == "allow_superluminal") {
            cfg.allow_superluminal = parse_bool(value, key, ln);
        } else if (key == "out") {
            cfg.out_path = value;
        } else if (key == "worldline") {
            cfg.worldline_path = value;
        } else if (key == "curve") {
            cfg.curve_path = value;
        } else if (key == "trace") {
            cfg.trace_path = value;
        } else {
            throw ConfigError("line " + std::to_string(ln) + ": unknown key '" + key + "'");
        }
    }

    std::string missing;
    if (!have_experiment) missing += " experiment";
    if (have_experiment &&
        (cfg.experiment == ExperimentKind::TimeDilation || cfg.experiment == ExperimentKind::Trace) &&
        !have_beta)
        missing += " beta";
    if (!missing.empty()) throw ConfigError("config: missing required keys:" + missing);

    cfg.validate();
    return cfg;
}

}  // namespace minksim
