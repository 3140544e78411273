#include "minksim/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minksim/csv.hpp"
#include "minksim/errors.hpp"
#include "minksim/experiments.hpp"
#include "minksim/oracles.hpp"
#include "minksim/sync.hpp"

namespace minksim {

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("MINKSIM_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + path;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::string full = resolve_out(path);
    std::ofstream f(full, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + full);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + full);
}

std::int64_t trace_horizon(const RunConfig& cfg) {
    if (cfg.nodes > 0) return cfg.nodes;
    // Default horizon: the measured-time node of the final tick, so the
    // log includes the local tick that closes the run.
    std::int64_t j = static_cast<std::int64_t>(std::llround(cfg.beta * static_cast<double>(cfg.tau_r)));
    Rational ratio = cfg.units.node_per_cell_ratio();
    std::int64_t ticks = cfg.effective_ticks();
    std::int64_t closing = marked_index(ticks * cfg.tau_r, j * ticks, ratio);
    return std::max(ticks * cfg.tau_r, closing);
}

}  // namespace

std::string trace_text(const RunResult& run) {
    std::string out;
    for (const auto& ev : run.events) {
        out += ev.format();
        out += '\n';
    }
    return out;
}

std::string sync_table_csv(std::int64_t sigma_max, std::int64_t rho_max, const Rational& ratio) {
    std::string out = "sigma,rho,marked\n";
    for (std::int64_t sigma = 0; sigma <= sigma_max; ++sigma) {
        for (std::int64_t rho = 0; rho <= rho_max; ++rho) {
            out += std::to_string(sigma);
            out += ',' + std::to_string(rho);
            out += ',' + std::to_string(marked_index(sigma, rho, ratio));
            out += '\n';
        }
    }
    return out;
}

int run_config(const RunConfig& cfg) {
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        switch (cfg.experiment) {
            case ExperimentKind::TimeDilation: {
                ExperimentOptions opt;
                opt.n_cells = cfg.n_cells;
                opt.record_advances = !cfg.trace_path.empty();
                auto outcome = run_time_dilation(cfg.beta, cfg.tau_r, cfg.effective_ticks(), cfg.units, opt);
                write_output(cfg.out_path, dilation_csv(outcome.rows));
                if (!cfg.worldline_path.empty())
                    write_output(cfg.worldline_path, worldline_text(worldline_points(outcome.rows)));
                if (!cfg.trace_path.empty()) write_output(cfg.trace_path, trace_text(outcome.run));
                break;
            }
            case ExperimentKind::ConstantForce: {
                ExperimentOptions opt;
                opt.n_cells = cfg.n_cells;
                opt.record_advances = !cfg.trace_path.empty();
                auto outcome =
                    run_constant_force(cfg.t_i, cfg.mu, cfg.tau_r, cfg.effective_ticks(), cfg.units, opt);
                write_output(cfg.out_path, force_csv(outcome.rows));
                if (!cfg.curve_path.empty())
                    write_output(cfg.curve_path, vp_curve_text(vp_curve_points(outcome.rows)));
                if (!cfg.trace_path.empty()) write_output(cfg.trace_path, trace_text(outcome.run));
                break;
            }
            case ExperimentKind::SyncTable: {
                write_output(cfg.out_path,
                             sync_table_csv(cfg.sigma_max, cfg.rho_max, cfg.units.node_per_cell_ratio()));
                break;
            }
            case ExperimentKind::Trace: {
                ExperimentOptions opt;
                opt.n_cells = cfg.n_cells;
                opt.record_advances = true;
                opt.total_nodes = trace_horizon(cfg);
                auto outcome = run_time_dilation(cfg.beta, cfg.tau_r, cfg.effective_ticks(), cfg.units, opt);
                write_output(cfg.out_path, trace_text(outcome.run));
                break;
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"discrete-event simulator of 1-D spacetime with the Minkowski interval rule"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "run from a key=value config file");

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tau-r", cfg.tau_r, "nodes per tick");
        sub->add_option("--ticks", cfg.ticks, "number of ticks");
        sub->add_option("--cells", cfg.n_cells, "lattice size (0 = auto)");
        sub->add_option("--vt", cfg.units.v_t, "time conversion coefficient");
        sub->add_option("--vl", cfg.units.v_l, "distance conversion coefficient");
        sub->add_option("--vm", cfg.units.v_m, "mass conversion coefficient");
        sub->add_option("--c", cfg.units.c, "light speed");
        sub->add_option("--out", cfg.out_path, "output path (default: stdout)");
        sub->add_option("--trace", cfg.trace_path, "also write the full event log");
    };

    CLI::App* dil = app.add_subcommand("time-dilation", "uniform motion; time-dilation table");
    dil->add_option("--beta", cfg.beta, "proper velocity (cells per node-tick)")->required();
    dil->add_flag("--allow-superluminal", cfg.allow_superluminal, "permit beta > 1");
    dil->add_option("--worldline", cfg.worldline_path, "also write x/t world-line points");
    add_common(dil);

    CLI::App* force = app.add_subcommand("constant-force", "constant force; v(p) and E(p) table");
    force->add_option("--ti", cfg.t_i, "interaction acts per tick");
    force->add_option("--mu", cfg.mu, "natural rest mass (>= 1)");
    force->add_option("--curve", cfg.curve_path, "also write p/v/va curve points");
    add_common(force);

    CLI::App* table = app.add_subcommand("sync-table", "dump the synchronization rule as CSV");
    table->add_option("--sigma-max", cfg.sigma_max, "largest sigma");
    table->add_option("--rho-max", cfg.rho_max, "largest rho");
    table->add_option("--vt", cfg.units.v_t, "time conversion coefficient");
    table->add_option("--vl", cfg.units.v_l, "distance conversion coefficient");
    table->add_option("--out", cfg.out_path, "output path (default: stdout)");

    CLI::App* trace = app.add_subcommand("trace", "uniform motion; full event log");
    trace->add_option("--beta", cfg.beta, "proper velocity")->required();
    trace->add_flag("--allow-superluminal", cfg.allow_superluminal, "permit beta > 1");
    trace->add_option("--nodes", cfg.nodes, "node horizon (default: closing node of the last tick)");
    add_common(trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "config error: cannot open " << config_path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        try {
            cfg = parse_config(buf.str());
        } catch (const ConfigError& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 1;
        }
        return run_config(cfg);
    }

    if (dil->parsed()) cfg.experiment = ExperimentKind::TimeDilation;
    else if (force->parsed()) cfg.experiment = ExperimentKind::ConstantForce;
    else if (table->parsed()) cfg.experiment = ExperimentKind::SyncTable;
    else if (trace->parsed()) cfg.experiment = ExperimentKind::Trace;
    else {
        std::cerr << app.help();
        return 1;
    }
    return run_config(cfg);
}

}  // namespace minksim
