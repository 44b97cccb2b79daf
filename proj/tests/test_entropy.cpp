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

#include <doctest.h>

#include <cmath>
#include <string>

#include "entroflux/bound_report.hpp"
#include "entroflux/entropy.hpp"
#include "entroflux/qubit.hpp"
#include "helpers.hpp"

using namespace entroflux;
using namespace entroflux::testing;

namespace {

ComplexMatrix zero2() { return ComplexMatrix::Zero(2, 2); }

constexpr double kMinEigs[] = {1e-2, 1e-4, 1e-6};

DensityMatrix full_rank(int d, std::uint64_t seed) {
    return random_density(d, kMinEigs[seed % 3] / d, seed);
}

/// Tr[rho^-1 (H[L] rho)^2] expanded for Hermitian L, with the inverse taken
/// by LU rather than through the spectral code path.
double identity_lhs_oracle(const ComplexMatrix& l, const ComplexMatrix& rho) {
    const double m = (l * rho).trace().real();
    const ComplexMatrix inv = rho.inverse();
    return 3.0 * (l * l * rho).trace().real() + (inv * l * rho * rho * l).trace().real() -
           4.0 * m * m;
}

EnsembleStatistics series(const std::vector<double>& t, const std::vector<double>& s,
                          double se) {
    EnsembleStatistics st;
    st.times = t;
    st.mean_entropy = s;
    st.entropy_se.assign(t.size(), se);
    return st;
}

}  // namespace

TEST_CASE("von Neumann entropy examples") {
    CHECK(von_neumann_entropy(DensityMatrix(ket0())) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == doctest::Approx(std::log(2.0)));
    CHECK(von_neumann_entropy(DensityMatrix(diag({0.9, 0.1}))) == doctest::Approx(0.325083).epsilon(1e-6));
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(std::log(4.0)));
    CHECK(von_neumann_entropy(DensityMatrix(plus_state())) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("entropy matches the Shannon entropy of the closed-form spectrum") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const DensityMatrix rho = random_density(2, 0.0, 300 + s);
        const double got = von_neumann_entropy(rho);
        CHECK(std::abs(got - shannon(eig2(rho.matrix()))) <= 1e-12);
    }
}

TEST_CASE("entropy range over random states") {
    for (std::uint64_t s = 0; s < 600; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const double v = von_neumann_entropy(random_density(d, 0.0, 700 + s));
        CHECK(v >= -1e-12);
        CHECK(v <= std::log(static_cast<double>(d)) + 1e-12);
    }
}

TEST_CASE("observable variance") {
    CHECK(observable_variance(pauli::x(), DensityMatrix::maximally_mixed(2)) == doctest::Approx(1.0));
    CHECK(observable_variance(pauli::z(), DensityMatrix(ket0())) == doctest::Approx(0.0));
    const double kappa = 1.7;
    for (double z : {-1.0, -0.3, 0.0, 0.5, 0.99}) {
        const DensityMatrix rho = qubit::bloch_to_density({0.0, 0.0, z});
        CHECK(observable_variance(std::sqrt(kappa) * pauli::z(), rho) ==
              doctest::Approx(kappa * (1 - z * z)));
    }
    try {
        observable_variance(pauli::lowering(), DensityMatrix::maximally_mixed(2));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("Hermitian-probe restriction") != std::string::npos);
    }
}

TEST_CASE("quantumness") {
    const double gamma = 2.5;
    const ComplexMatrix m = std::sqrt(gamma) * pauli::lowering();
    for (double z : {-1.0, -0.2, 0.4, 1.0}) {
        CHECK(quantumness(m, qubit::bloch_to_density({0.0, 0.0, z})) == doctest::Approx(gamma * z));
    }
    CHECK(quantumness(pauli::lowering(), DensityMatrix(ket1())) == doctest::Approx(-1.0));
    CHECK(quantumness(pauli::z(), DensityMatrix::maximally_mixed(2)) == 0.0);
}

TEST_CASE("Abe gap examples and sweep") {
    const DensityMatrix rho = qubit::bloch_to_density({0.5, 0.0, 0.0});
    CHECK(abe_gap(pauli::z(), rho) == doctest::Approx(0.5 * std::log(3.0)));
    CHECK(abe_gap(pauli::z(), DensityMatrix(diag({0.7, 0.3}))) == doctest::Approx(0.0).epsilon(1e-14));

    double worst = 1e300;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const double gap = abe_gap(random_complex_matrix(d, 40000 + s), full_rank(d, 50000 + s));
        worst = std::min(worst, gap);
        CHECK(gap >= -1e-9);
    }
    MESSAGE("smallest Abe gap: " << worst);
}

TEST_CASE("floored quantities refuse states the floor distorts") {
    const DensityMatrix nearly_pure(diag({1.0 - 1e-14, 1e-14}));
    CHECK_NOTHROW(lemma_gap(DensityMatrix(ket0())));
    CHECK_THROWS_AS(abe_gap(pauli::x(), nearly_pure, 1e-3), ValidationError);
    CHECK_THROWS_AS(lemma_gap(DensityMatrix::maximally_mixed(2), 0.0), ValidationError);
}

TEST_CASE("Ito entropy-rate identity: examples") {
    const IdentitySides mixed = ito_entropy_rate_identity(pauli::z(), DensityMatrix::maximally_mixed(2));
    CHECK(mixed.lhs == doctest::Approx(4.0));
    CHECK(mixed.rhs == doctest::Approx(4.0));
    const IdentitySides pure = ito_entropy_rate_identity(pauli::z(), DensityMatrix(ket0()));
    CHECK(pure.lhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(pure.rhs == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("Ito entropy-rate identity: lhs agrees with the expanded oracle and dominates rhs") {
    for (std::uint64_t s = 0; s < 500; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const ComplexMatrix l = random_hermitian(d, 70000 + s);
        const DensityMatrix rho = full_rank(d, 80000 + s);
        const IdentitySides sides = ito_entropy_rate_identity(l, rho);
        const double oracle = identity_lhs_oracle(l, rho.matrix());
        CHECK(std::abs(sides.lhs - oracle) <= 1e-6 * std::max(1.0, std::abs(oracle)));
        CHECK(sides.lhs >= sides.rhs - 1e-9 * std::max(1.0, sides.rhs));
    }
}

TEST_CASE("Ito entropy-rate identity: equality over random Hermitian probes") {
    // Equality is only exact when [L, rho] = 0; generic samples expose the gap.
    std::size_t failures = 0;
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const IdentitySides sides =
            ito_entropy_rate_identity(random_hermitian(d, 70000 + s), full_rank(d, 80000 + s));
        const double rel = std::abs(sides.lhs - sides.rhs) / std::max(sides.rhs, 1e-12);
        worst = std::max(worst, rel);
        if (rel > 1e-8) ++failures;
    }
    MESSAGE("largest relative mismatch: " << worst);
    CHECK(failures == 0);
}

TEST_CASE("lemma gap") {
    CHECK(lemma_gap(DensityMatrix::maximally_mixed(2)) == doctest::Approx(std::log(2.0) - 0.5));
    CHECK(lemma_gap(DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.193147).epsilon(1e-6));
    for (int d = 3; d <= 5; ++d) {
        CHECK(lemma_gap(DensityMatrix::maximally_mixed(d)) ==
              doctest::Approx(std::log(static_cast<double>(d)) - (1.0 - 1.0 / d)));
    }
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const DensityMatrix rho = full_rank(2, 90000 + s);
        double oracle = 1e300;
        for (double p : eig2(rho.matrix())) oracle = std::min(oracle, -std::log(p) - 1.0 + p);
        const double gap = lemma_gap(rho);
        CHECK(gap >= -1e-9);
        CHECK(std::abs(gap - oracle) <= 1e-7 * std::max(1.0, oracle));
    }
    for (int d = 3; d <= 4; ++d) {
        for (std::uint64_t s = 0; s < 1000; ++s) CHECK(lemma_gap(full_rank(d, 95000 + 1000 * d + s)) >= -1e-9);
    }
}

TEST_CASE("bound_rhs and the sufficient condition on the qubit model") {
    const double kappa = 1.3;
    for (double alpha : {0.0, 2.0, 6.0}) {
        const ModelSpec model = qubit::stabilization_model({kappa, alpha, ControlLaw::zero()});
        for (double z : {-0.8, 0.0, 0.5, 0.9}) {
            const DensityMatrix rho = qubit::bloch_to_density({0.0, 0.0, z});
            const double expected = alpha * kappa * z - 4.0 * kappa * (1 - z * z);
            CHECK(bound_rhs(model, rho) == doctest::Approx(expected));
            if (std::abs(expected) > 1e-9) CHECK(sufficient_condition(model, rho) == (expected >= 0));
        }
    }
    const ModelSpec boundary = qubit::stabilization_model({1.0, 6.0, ControlLaw::zero()});
    CHECK(sufficient_condition(boundary, qubit::bloch_to_density({0.0, 0.0, 0.5})));
    const ModelSpec bad(zero2(), pauli::lowering(), zero2());
    CHECK_THROWS_AS(bound_rhs(bad, DensityMatrix::maximally_mixed(2)), ValidationError);
}

TEST_CASE("entropy rate estimate: synthetic series") {
    const std::vector<double> t{0.0, 0.1, 0.2, 0.3, 0.4};
    const RateEstimate flat = entropy_rate_estimate(series(t, {0.3, 0.3, 0.3, 0.3, 0.3}, 0.01));
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(flat.rate[i] == doctest::Approx(0.0));
    CHECK(flat.se[2] == doctest::Approx(std::hypot(0.01, 0.01) / 0.2));
    CHECK(flat.se[0] == doctest::Approx(std::hypot(0.01, 0.01) / 0.1));

    std::vector<double> lin;
    for (double x : t) lin.push_back(0.1 + 2.0 * x);
    const RateEstimate slope = entropy_rate_estimate(series(t, lin, 0.0));
    for (double r : slope.rate) CHECK(r == doctest::Approx(2.0));
    const RateEstimate smooth = entropy_rate_estimate(series(t, lin, 0.0), 3);
    for (double r : smooth.rate) CHECK(r == doctest::Approx(2.0));

    CHECK_THROWS_AS(entropy_rate_estimate(series({0.0, 0.1}, {0.0, 0.0}, 0.0)), ValidationError);
    CHECK_THROWS_AS(entropy_rate_estimate(series(t, lin, 0.0), 2), ValidationError);
}

TEST_CASE("entropy rate estimate tracks the dephasing master-equation derivative") {
    // Decoherence only (L = 0) makes every trajectory deterministic; x(t) =
    // x0 exp(-2t) and dS/dt = 2 x artanh(x).
    const ModelSpec model(zero2(), zero2(), pauli::z());
    EnsembleConfig cfg;
    cfg.integrator.dt = 1e-3;
    cfg.integrator.t_final = 2.0;
    cfg.integrator.record_stride = 10;
    const EnsembleStatistics stats = run_ensemble(model, qubit::bloch_to_density({0.8, 0, 0}), cfg);
    const RateEstimate est = entropy_rate_estimate(stats);
    double max_rate = 0.0;
    for (double t : stats.times) {
        const double x = 0.8 * std::exp(-2.0 * t);
        max_rate = std::max(max_rate, 2.0 * x * std::atanh(x));
    }
    const double tol = 10.0 * cfg.integrator.dt * max_rate;
    for (std::size_t i = 1; i + 1 < stats.size(); ++i) {
        const double x = 0.8 * std::exp(-2.0 * stats.times[i]);
        CHECK(std::abs(est.rate[i] - 2.0 * x * std::atanh(x)) <= tol);
    }
}

TEST_CASE("bound report on frozen dynamics") {
    const ModelSpec frozen(zero2(), zero2(), zero2());
    EnsembleConfig cfg;
    cfg.n_trajectories = 4;
    cfg.integrator.dt = 1e-2;
    cfg.integrator.t_final = 0.5;
    cfg.integrator.record_stride = 10;
    const EntropyBoundReport r =
        build_bound_report(frozen, run_ensemble(frozen, random_density(2, 0.1, 3), cfg));
    REQUIRE(r.size() == 6);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.lhs_rate[i] == 0.0);
        CHECK(r.lhs_se[i] == 0.0);
        CHECK(r.rhs_bound[i] == 0.0);
        CHECK(r.sufficient_flag[i]);
        CHECK_FALSE(r.violation_flag[i]);
    }
    CHECK_FALSE(r.any_violation());
}

TEST_CASE("bound report without decoherence never meets the sufficient condition") {
    const ModelSpec model = qubit::stabilization_model({1.0, 0.0, ControlLaw::zero()});
    EnsembleConfig cfg;
    cfg.n_trajectories = 50;
    cfg.integrator.dt = 1e-3;
    cfg.integrator.t_final = 0.5;
    cfg.integrator.record_stride = 50;
    const EntropyBoundReport r =
        build_bound_report(model, run_ensemble(model, DensityMatrix::maximally_mixed(2), cfg));
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.rhs_bound[i] < 0.0);
        CHECK_FALSE(r.sufficient_flag[i]);
        CHECK_FALSE(r.violation_flag[i]);
    }
}
