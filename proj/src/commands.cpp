// Copyright 2026 The Entroflux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entroflux/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>

#include "entroflux/config.hpp"
#include "entroflux/csv.hpp"
#include "entroflux/entropy.hpp"

namespace entroflux {

namespace {

std::ostream& log_of(const CommandOptions& opts) { return opts.log ? *opts.log : std::cerr; }

struct Prepared {
    RunConfig cfg;
    std::filesystem::path out_dir;
};

Prepared prepare(const CommandOptions& opts) {
    Prepared p{load_config(opts.config_path), {}};
    if (opts.seed) p.cfg.ensemble.master_seed = *opts.seed;
    if (opts.workers) {
        p.cfg.ensemble.worker_count = *opts.workers;
    } else if (!p.cfg.workers_from_document) {
        p.cfg.ensemble.worker_count = default_worker_count();
    }
    if (p.cfg.ensemble.worker_count < 1) throw ConfigError("worker count must be at least 1");
    p.out_dir = opts.out_dir ? *opts.out_dir : std::filesystem::path(p.cfg.output_path);
    std::error_code ec;
    std::filesystem::create_directories(p.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + p.out_dir.string());
    return p;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot write " + path.string());
    return os;
}

std::string trajectory_file_name(std::size_t index) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "trajectory_%05zu.csv", index);
    return buf;
}

EnsembleStatistics run(const Prepared& p, const ModelSpec& model) {
    TrajectorySink sink;
    if (p.cfg.emit.contains(Emit::trajectories)) {
        sink = [&](std::size_t index, const TrajectoryRecord& rec) {
            std::ofstream os = open_output(p.out_dir / trajectory_file_name(index));
            csv::write_trajectory(os, rec);
        };
    }
    return run_ensemble(model, p.cfg.initial_state, p.cfg.ensemble, sink);
}

void warn_on_repair(std::ostream& log, const EnsembleStatistics& stats) {
    if (stats.repair_flagged > 0) {
        log << "warning: " << stats.repair_flagged << " of " << stats.n_trajectories
            << " trajectories exceeded the accumulated repair threshold (max "
            << stats.max_total_repair << ")\n";
    }
}

// Shared error mapping for the config-driven commands.
template <typename F>
int guarded(const CommandOptions& opts, F&& body) {
    std::ostream& log = log_of(opts);
    try {
        return body();
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ValidationError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IntegrationError& e) {
        log << "integration failure (trajectory " << e.trajectory() << ", step " << e.step()
            << "): " << e.what() << '\n';
        return kExitIntegration;
    }
}

}  // namespace

unsigned default_worker_count() {
    if (const char* env = std::getenv("ENTROFLUX_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    return 1;
}

int cmd_simulate(const CommandOptions& opts) {
    return guarded(opts, [&] {
        const Prepared p = prepare(opts);
        const ModelSpec model = p.cfg.build_model();
        const EnsembleStatistics stats = run(p, model);
        warn_on_repair(log_of(opts), stats);
        std::ofstream os = open_output(p.out_dir / "ensemble.csv");
        csv::write_ensemble(os, stats);
        return static_cast<int>(kExitOk);
    });
}

int cmd_verify_bound(const CommandOptions& opts) {
    return guarded(opts, [&] {
        const Prepared p = prepare(opts);
        const ModelSpec model = p.cfg.build_model();
        if (!model.probe_is_hermitian()) {
            throw ConfigError(
                "verify-bound requires a Hermitian probe L (Hermitian-probe restriction)");
        }
        const EnsembleStatistics stats = run(p, model);
        warn_on_repair(log_of(opts), stats);
        if (stats.size() < 3) {
            throw ConfigError("verify-bound needs at least 3 recorded checkpoints");
        }
        if (p.cfg.emit.contains(Emit::ensemble)) {
            std::ofstream os = open_output(p.out_dir / "ensemble.csv");
            csv::write_ensemble(os, stats);
        }
        const EntropyBoundReport report = build_bound_report(model, stats, p.cfg.smoothing_window);
        {
            std::ofstream os = open_output(p.out_dir / "bound_report.csv");
            csv::write_bound_report(os, report);
        }
        if (report.any_violation()) {
            std::size_t count = 0;
            for (bool v : report.violation_flag) count += v ? 1 : 0;
            log_of(opts) << "bound violated at " << count << " of " << report.size()
                         << " checkpoints\n";
            return static_cast<int>(kExitBoundViolation);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_sweep_alpha(const CommandOptions& opts, const std::vector<double>& alphas) {
    return guarded(opts, [&] {
        const Prepared p = prepare(opts);
        if (!p.cfg.scenario) throw ConfigError("sweep-alpha requires a qubit 'scenario' config");
        if (alphas.empty()) throw ConfigError("sweep-alpha needs at least one alpha");
        const ControlLaw& law = p.cfg.scenario->control;
        if (law.is_state_dependent()) {
            throw ConfigError("sweep-alpha integrates the unconditional master equation and "
                              "needs a state-independent control law");
        }
        const double u = law.parameter();

        std::ofstream os = open_output(p.out_dir / "sweep_alpha.csv");
        csv::write_row(os, {"alpha", "z_threshold", "min_rhs_bound", "first_sufficient_time"});
        for (double alpha : alphas) {
            qubit::QubitScenario sc = *p.cfg.scenario;
            sc.alpha = alpha;
            sc.validate();
            const ModelSpec model = qubit::stabilization_model(sc);
            const TrajectoryRecord me =
                integrate_me(model, p.cfg.initial_state, p.cfg.ensemble.integrator, u);
            double min_rhs = std::numeric_limits<double>::infinity();
            double first = -1.0;
            for (std::size_t i = 0; i < me.size(); ++i) {
                min_rhs = std::min(min_rhs, bound_rhs(model, me.states[i]));
                if (first < 0.0 && sufficient_condition(model, me.states[i])) first = me.times[i];
            }
            csv::write_row(os, {csv::format_number(alpha),
                                csv::format_number(qubit::z_threshold(alpha)),
                                csv::format_number(min_rhs), csv::format_number(first)});
        }
        return static_cast<int>(kExitOk);
    });
}

}  // namespace entroflux
