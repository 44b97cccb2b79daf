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

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entroflux/commands.hpp"
#include "entroflux/entropy.hpp"
#include "entroflux/integrator.hpp"
#include "entroflux/qubit.hpp"

namespace entroflux {

namespace {

struct SuiteResult {
    std::size_t checks = 0;
    bool passed = true;
    std::string counterexample;
};

std::string dump(const ComplexMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    os << m;
    return os.str();
}

// First failure wins; later checks still count.
void fail(SuiteResult& r, const std::string& what) {
    if (r.passed) r.counterexample = what;
    r.passed = false;
}

constexpr double kMinEigs[] = {1e-2, 1e-4, 1e-6};

DensityMatrix full_rank_sample(int d, std::uint64_t seed) {
    return random_density(d, kMinEigs[seed % 3] / d, seed);
}

SuiteResult state_validation(bool inject_corrupt) {
    SuiteResult r;
    std::vector<ComplexMatrix> batch;
    for (std::uint64_t s = 0; s < 300; ++s) {
        batch.push_back(random_density(2 + static_cast<int>(s % 3), 0.0, 1000 + s).matrix());
    }
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.5;
    cfg.record_stride = 10;
    const ModelSpec model = qubit::stabilization_model({1.0, 6.0, ControlLaw::zero()});
    const TrajectoryRecord rec =
        simulate_trajectory(model, qubit::bloch_to_density({1.0, 0.0, 0.0}), cfg, 17);
    for (const auto& st : rec.states) batch.push_back(st.matrix());
    if (inject_corrupt) {
        ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
        bad(0, 0) = 0.6;
        bad(1, 1) = 0.5;
        batch.push_back(bad);
    }
    for (const auto& m : batch) {
        ++r.checks;
        try {
            const DensityMatrix rho(m);
            const double s = von_neumann_entropy(rho);
            if (s < -1e-12 || s > std::log(static_cast<double>(rho.dim())) + 1e-12) {
                fail(r, "entropy " + std::to_string(s) + " out of range for\n" + dump(m));
            }
        } catch (const ValidationError& e) {
            fail(r, std::string(e.what()) + "\n" + dump(m));
        }
    }
    return r;
}

SuiteResult superoperator_preservation() {
    SuiteResult r;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const ComplexMatrix a = random_complex_matrix(d, 5000 + s);
        const DensityMatrix rho = random_density(d, 0.0, 9000 + s);
        const ComplexMatrix dis = dissipator(a, rho);
        const ComplexMatrix inn = innovation(a, rho);
        ++r.checks;
        const double worst = std::max({std::abs(dis.trace()), std::abs(inn.trace()),
                                       max_hermitian_asymmetry(dis), max_hermitian_asymmetry(inn)});
        if (worst > 1e-12) {
            fail(r, "trace/Hermiticity defect " + std::to_string(worst) + " for a=\n" + dump(a) +
                        "\nrho=\n" + dump(rho.matrix()));
        }
    }
    return r;
}

SuiteResult lemma_sweep() {
    SuiteResult r;
    for (int d = 2; d <= 4; ++d) {
        for (std::uint64_t s = 0; s < 1000; ++s) {
            const DensityMatrix rho = full_rank_sample(d, 20000 + 1000 * d + s);
            const double gap = lemma_gap(rho);
            ++r.checks;
            if (gap < -1e-9) fail(r, "lemma gap " + std::to_string(gap) + " for\n" + dump(rho.matrix()));
        }
    }
    return r;
}

SuiteResult abe_sweep() {
    SuiteResult r;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const ComplexMatrix a = random_complex_matrix(d, 40000 + s);
        const DensityMatrix rho = full_rank_sample(d, 50000 + s);
        const double gap = abe_gap(a, rho);
        ++r.checks;
        if (gap < -1e-9) {
            fail(r, "Abe gap " + std::to_string(gap) + " for A=\n" + dump(a) + "\nrho=\n" +
                        dump(rho.matrix()));
        }
        const ComplexMatrix l = random_hermitian(d, 60000 + s);
        const double q = quantumness(l, rho);
        ++r.checks;
        if (std::abs(q) > 1e-12) {
            fail(r, "Hermitian quantumness " + std::to_string(q) + " for L=\n" + dump(l));
        }
    }
    return r;
}

SuiteResult ito_sweep() {
    SuiteResult r;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const ComplexMatrix l = random_hermitian(d, 70000 + s);
        const DensityMatrix rho = full_rank_sample(d, 80000 + s);
        const IdentitySides sides = ito_entropy_rate_identity(l, rho);
        const double rel = std::abs(sides.lhs - sides.rhs) / std::max(sides.rhs, 1e-12);
        ++r.checks;
        if (rel > 1e-8) {
            fail(r, "identity relative error " + std::to_string(rel) + " for L=\n" + dump(l) +
                        "\nrho=\n" + dump(rho.matrix()));
        }
    }
    return r;
}

SuiteResult threshold_suite() {
    SuiteResult r;
    auto expect = [&r](bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) fail(r, what);
    };
    expect(qubit::z_threshold(0.0) == 1.0, "z_threshold(0) != 1");
    expect(std::abs(qubit::z_threshold(6.0) - 0.5) <= 1e-12, "z_threshold(6) != 0.5");
    double prev = 2.0;
    for (int k = -30; k <= 60; ++k) {
        const double alpha = std::pow(10.0, k / 10.0);
        const double thr = qubit::z_threshold(alpha);
        expect(thr < prev, "z_threshold not decreasing at alpha=" + std::to_string(alpha));
        expect(std::abs(4 * thr * thr + alpha * thr - 4) <= 1e-10,
               "threshold is not a root at alpha=" + std::to_string(alpha));
        prev = thr;
    }
    for (double alpha : {0.0, 0.5, 2.0, 6.0, 50.0}) {
        for (int k = 0; k <= 200; ++k) {
            const double z = -1.0 + k / 100.0;
            expect(qubit::threshold_consistency({1.0, alpha, ControlLaw::zero()}, z),
                   "threshold inconsistency at alpha=" + std::to_string(alpha) +
                       ", z=" + std::to_string(z));
        }
    }
    return r;
}

SuiteResult oracle_suite() {
    SuiteResult r;
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 3.0;
    cfg.record_stride = 300;
    const ModelSpec dephasing(ComplexMatrix::Zero(2, 2), pauli::z(), ComplexMatrix::Zero(2, 2));
    const ModelSpec decay(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2), pauli::lowering());
    const TrajectoryRecord a =
        integrate_me(dephasing, qubit::bloch_to_density({1.0, 0.0, 0.0}), cfg);
    const TrajectoryRecord b = integrate_me(decay, qubit::bloch_to_density({0.0, 0.0, 1.0}), cfg);
    for (std::size_t i = 1; i < a.size(); ++i) {
        const double ex = std::abs(qubit::density_to_bloch(a.states[i]).x -
                                   qubit::dephasing_oracle(1.0, 1.0, a.times[i]));
        const double ez = std::abs(qubit::density_to_bloch(b.states[i]).z -
                                   qubit::decay_oracle(1.0, 1.0, b.times[i]));
        r.checks += 2;
        if (ex > 1e-6) fail(r, "dephasing mismatch " + std::to_string(ex) + " at t=" + std::to_string(a.times[i]));
        if (ez > 1e-6) fail(r, "decay mismatch " + std::to_string(ez) + " at t=" + std::to_string(b.times[i]));
    }
    return r;
}

}  // namespace

int cmd_selftest(const SelftestOptions& opts) {
    std::ostream& out = opts.out ? *opts.out : std::cout;
    const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites{
        {"state-validation", [&] { return state_validation(opts.inject_corrupt_state); }},
        {"superoperator-preservation", superoperator_preservation},
        {"lemma-gap", lemma_sweep},
        {"abe-gap", abe_sweep},
        {"ito-identity", ito_sweep},
        {"threshold", threshold_suite},
        {"me-oracles", oracle_suite},
    };
    std::vector<std::string> failing;
    for (const auto& [name, run] : suites) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r;
        try {
            r = run();
        } catch (const std::exception& e) {
            fail(r, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << (r.passed ? "[PASS] " : "[FAIL] ") << name << " (" << r.checks << " checks, "
            << secs << " s)\n";
        if (!r.passed) {
            out << "  counterexample: " << r.counterexample << '\n';
            failing.push_back(name);
        }
    }
    if (failing.empty()) return kExitOk;
    out << "failing suites:";
    for (const auto& f : failing) out << ' ' << f;
    out << '\n';
    return kExitSelftest;
}

}  // namespace entroflux
