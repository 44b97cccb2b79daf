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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unistd.h>

#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entroflux/bound_report.hpp"
#include "entroflux/commands.hpp"
#include "entroflux/entropy.hpp"
#include "entroflux/qubit.hpp"

using namespace entroflux;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

constexpr double kMinEigs[] = {1e-2, 1e-4, 1e-6};

DensityMatrix full_rank(int d, std::uint64_t seed) {
    return random_density(d, kMinEigs[seed % 3] / d, seed);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Outcome lemma() {
    double worst = 1e300;
    for (int d = 2; d <= 4; ++d) {
        for (std::uint64_t s = 0; s < 1000; ++s) worst = std::min(worst, lemma_gap(full_rank(d, 1000 * d + s)));
    }
    return {worst >= -1e-9, "min gap " + fmt(worst)};
}

Outcome ito_identity() {
    double worst = 0.0;
    std::size_t bad = 0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const IdentitySides sides =
            ito_entropy_rate_identity(random_hermitian(d, 7000 + s), full_rank(d, 8000 + s));
        const double rel = std::abs(sides.lhs - sides.rhs) / std::max(sides.rhs, 1e-12);
        worst = std::max(worst, rel);
        if (rel > 1e-8) ++bad;
    }
    return {bad == 0, std::to_string(bad) + "/500 above 1e-8, max relative error " + fmt(worst)};
}

Outcome abe() {
    double worst_gap = 1e300;
    double worst_q = 0.0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const DensityMatrix rho = full_rank(d, 30000 + s);
        worst_gap = std::min(worst_gap, abe_gap(random_complex_matrix(d, 20000 + s), rho));
        worst_q = std::max(worst_q, std::abs(quantumness(random_hermitian(d, 40000 + s), rho)));
    }
    return {worst_gap >= -1e-9 && worst_q <= 1e-12,
            "min gap " + fmt(worst_gap) + ", max |Hermitian quantumness| " + fmt(worst_q)};
}

Outcome me_oracles() {
    const auto start = std::chrono::steady_clock::now();
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 3.0;
    cfg.record_stride = 300;
    const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    const TrajectoryRecord a =
        integrate_me(ModelSpec(zero, pauli::z(), zero), qubit::bloch_to_density({1, 0, 0}), cfg);
    const TrajectoryRecord b =
        integrate_me(ModelSpec(zero, zero, pauli::lowering()), qubit::bloch_to_density({0, 0, 1}), cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double err = 0.0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        err = std::max(err, std::abs(qubit::density_to_bloch(a.states[i]).x -
                                     qubit::dephasing_oracle(1.0, 1.0, a.times[i])));
        err = std::max(err, std::abs(qubit::density_to_bloch(b.states[i]).z -
                                     qubit::decay_oracle(1.0, 1.0, b.times[i])));
    }
    return {a.size() == 11 && err <= 1e-6 && secs < 1.0,
            std::to_string(a.size() - 1) + " checkpoints, max error " + fmt(err) + ", " + fmt(secs) + " s"};
}

// Ensemble run shared by criteria 5, 6 and 8.
struct EnsembleRun {
    double alpha;
    EnsembleStatistics stats;
    std::vector<double> bloch_se;  // (1/2) |SE of the Bloch vector| per checkpoint
    TrajectoryRecord me;
    double worst_entropy_excursion = 0.0;
};

EnsembleRun run_alpha(double alpha) {
    const qubit::QubitScenario scenario{1.0, alpha, ControlLaw::zero()};
    const ModelSpec model = qubit::stabilization_model(scenario);
    const DensityMatrix rho0 = qubit::bloch_to_density({1, 0, 0});
    EnsembleConfig cfg;
    cfg.n_trajectories = 5000;
    cfg.master_seed = 20260101;
    cfg.worker_count = 4;
    cfg.integrator.dt = 1e-3;
    cfg.integrator.t_final = 3.0;
    cfg.integrator.record_stride = 50;

    EnsembleRun out{alpha, {}, {}, {}, 0.0};
    std::vector<std::array<double, 3>> sum;
    std::vector<std::array<double, 3>> sum_sq;
    out.stats = run_ensemble(model, rho0, cfg, [&](std::size_t, const TrajectoryRecord& rec) {
        if (sum.empty()) {
            sum.assign(rec.size(), {0, 0, 0});
            sum_sq.assign(rec.size(), {0, 0, 0});
        }
        for (std::size_t i = 0; i < rec.size(); ++i) {
            const qubit::BlochVector b = qubit::density_to_bloch(rec.states[i]);
            const double v[3] = {b.x, b.y, b.z};
            for (int c = 0; c < 3; ++c) {
                sum[i][c] += v[c];
                sum_sq[i][c] += v[c] * v[c];
            }
            const double s = rec.entropies[i];
            out.worst_entropy_excursion =
                std::max({out.worst_entropy_excursion, -s, s - std::log(2.0)});
        }
    });
    const double n = static_cast<double>(cfg.n_trajectories);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        double var = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double m = sum[i][c] / n;
            var += (sum_sq[i][c] - n * m * m) / (n - 1) / n;
        }
        out.bloch_se.push_back(0.5 * std::sqrt(std::max(var, 0.0)));
    }
    out.me = integrate_me(model, rho0, cfg.integrator, 0.0);
    return out;
}

Outcome consistency(const std::vector<EnsembleRun>& runs) {
    Outcome o;
    for (const auto& r : runs) {
        if (r.alpha != 0.0 && r.alpha != 6.0) continue;
        double worst_ratio = 0.0;
        double worst_dist = 0.0;
        for (std::size_t i = 0; i < r.stats.size(); ++i) {
            const double dist = trace_distance(r.stats.mean_state[i].matrix(), r.me.states[i].matrix());
            const double tol = std::max(0.02, 3.0 * r.bloch_se[i]);
            worst_ratio = std::max(worst_ratio, dist / tol);
            worst_dist = std::max(worst_dist, dist);
        }
        if (worst_ratio > 1.0) o.pass = false;
        o.detail += "alpha=" + fmt(r.alpha) + ": max trace distance " + fmt(worst_dist) +
                    " (" + fmt(worst_ratio) + " of tolerance)  ";
    }
    return o;
}

Outcome main_bound(const std::vector<EnsembleRun>& runs) {
    Outcome o;
    for (const auto& r : runs) {
        const EntropyBoundReport rep =
            build_bound_report(qubit::stabilization_model({1.0, r.alpha, ControlLaw::zero()}), r.stats);
        std::size_t violations = 0;
        double min_margin = 1e300;
        for (std::size_t i = 0; i < rep.size(); ++i) {
            if (rep.violation_flag[i]) ++violations;
            min_margin = std::min(min_margin, rep.lhs_rate[i] - rep.rhs_bound[i] + 3.0 * rep.lhs_se[i]);
        }
        if (violations > 0) o.pass = false;
        o.detail += "alpha=" + fmt(r.alpha) + ": " + std::to_string(violations) + " violations, min margin " +
                    fmt(min_margin) + "  ";
    }
    return o;
}

Outcome threshold() {
    Outcome o;
    if (qubit::z_threshold(0.0) != 1.0) o.pass = false, o.detail += "z_threshold(0) != 1; ";
    if (std::abs(qubit::z_threshold(6.0) - 0.5) > 1e-12) o.pass = false, o.detail += "z_threshold(6) != 0.5; ";
    double prev = 2.0;
    for (int k = -30; k <= 60; ++k) {
        const double t = qubit::z_threshold(std::pow(10.0, k / 10.0));
        if (!(t < prev)) o.pass = false, o.detail += "not decreasing; ";
        prev = t;
    }
    std::size_t bad = 0;
    std::string first;
    for (double alpha : {0.0, 0.5, 2.0, 6.0, 50.0}) {
        for (int k = 0; k <= 200; ++k) {
            const double z = -1.0 + k / 100.0;
            if (!qubit::threshold_consistency({1.0, alpha, ControlLaw::zero()}, z)) {
                if (bad++ == 0) first = " (first at alpha=" + fmt(alpha) + ", z=" + fmt(z) + ")";
            }
        }
    }
    if (bad > 0) o.pass = false;
    o.detail += std::to_string(bad) + "/1005 grid points inconsistent" + first;
    return o;
}

Outcome entropy_range(const std::vector<EnsembleRun>& runs) {
    Outcome o;
    double worst_range = 0.0;
    double worst_concavity = 0.0;
    for (std::uint64_t s = 0; s < 3000; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const double v = von_neumann_entropy(random_density(d, 0.0, 60000 + s));
        worst_range = std::max({worst_range, -v, v - std::log(static_cast<double>(d))});
    }
    for (const auto& r : runs) {
        worst_range = std::max(worst_range, r.worst_entropy_excursion);
        const auto [mean_s, s_of_mean] = mean_entropy_vs_entropy_of_mean(r.stats);
        for (std::size_t i = 0; i < r.stats.size(); ++i) {
            worst_range = std::max({worst_range, -s_of_mean[i], s_of_mean[i] - std::log(2.0)});
            worst_concavity =
                std::max(worst_concavity, mean_s[i] - s_of_mean[i] - 3.0 * r.stats.entropy_se[i]);
        }
    }
    o.pass = worst_range <= 1e-12 && worst_concavity <= 0.0;
    o.detail = "max range excursion " + fmt(worst_range) + ", max concavity excess " + fmt(worst_concavity);
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const fs::path data = ENTROFLUX_TEST_DATA;
    const fs::path tmp = fs::temp_directory_path() / ("entroflux_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(tmp);
    std::ostringstream log;
    CommandOptions opts;
    opts.config_path = data / "golden_config.json";
    opts.log = &log;
    opts.workers = 1;
    opts.out_dir = tmp / "w1";
    const int a = cmd_simulate(opts);
    opts.workers = 4;
    opts.out_dir = tmp / "w4";
    const int b = cmd_simulate(opts);
    const std::string one = slurp(tmp / "w1" / "ensemble.csv");
    const std::string four = slurp(tmp / "w4" / "ensemble.csv");
    const std::string golden = slurp(data / "golden_ensemble.csv");
    fs::remove_all(tmp);
    Outcome o;
    o.pass = a == 0 && b == 0 && !one.empty() && one == four;
    o.detail = std::string(one == four ? "workers 1 and 4 byte-identical" : "workers 1 and 4 differ") +
               ", " + std::to_string(one.size()) + " bytes";
    // The golden file pins the output of this build's toolchain; a mismatch is
    // reported but only worker-count independence is required.
    o.detail += golden == one ? ", matches golden file" : ", differs from golden file";
    if (o.pass == false && !log.str().empty()) o.detail += "; log: " + log.str();
    return o;
}

}  // namespace

int main() {
    std::cout << std::unitbuf;
    int failed = 0;
    auto report = [&](int id, const std::string& name, const std::function<Outcome()>& f) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        while (!o.detail.empty() && std::isspace(static_cast<unsigned char>(o.detail.back()))) o.detail.pop_back();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << " [" << fmt(secs)
                  << " s]: " << o.detail << '\n';
    };

    report(1, "lemma gap", lemma);
    report(2, "Ito entropy-rate identity", ito_identity);
    report(3, "Abe bound and Hermitian quantumness", abe);
    report(4, "master-equation oracles", me_oracles);

    std::vector<EnsembleRun> runs;
    const auto start = std::chrono::steady_clock::now();
    for (double alpha : {0.0, 6.0, 2.0}) runs.push_back(run_alpha(alpha));
    std::cout << "ensembles (alpha = 0, 6, 2; N = 5000, T = 3, dt = 1e-3): "
              << fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count())
              << " s\n";

    report(5, "SME ensemble vs master equation", [&] { return consistency(runs); });
    report(6, "entropy-rate bound", [&] { return main_bound(runs); });
    report(7, "threshold", threshold);
    report(8, "entropy range and concavity", [&] { return entropy_range(runs); });
    report(9, "determinism across worker counts", determinism);

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
