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

#include "entroflux/integrator.hpp"

#include <cmath>
#include <sstream>

#include "entroflux/entropy.hpp"

namespace entroflux {

namespace {

double spectral_norm(const ComplexMatrix& m) {
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

// Upper bound on the spectral radius of the generator at fixed u.
double generator_rate_bound(const ModelSpec& model, double u) {
    const double l = spectral_norm(model.probe());
    const double m = spectral_norm(model.decoherence());
    return 2.0 * std::abs(u) * spectral_norm(model.hamiltonian()) + 2.0 * l * l + 2.0 * m * m;
}

void append_sample(TrajectoryRecord& rec, const TrajectoryState& s, double dW_sum,
                   double repair_sum) {
    rec.times.push_back(s.t);
    rec.entropies.push_back(von_neumann_entropy(s.rho));
    rec.states.push_back(s.rho);
    rec.dW_draws.push_back(dW_sum);
    rec.repair_magnitudes.push_back(repair_sum);
    rec.measurement.push_back(s.measurement);
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
    if (!(t_final >= dt) || !std::isfinite(t_final)) {
        throw ValidationError("t_final must be at least dt");
    }
    if (!(floor > 0.0)) throw ValidationError("floor must be positive");
    if (!(repair_tolerance >= 0.0)) throw ValidationError("repair_tolerance must be non-negative");
    if (record_stride < 1) throw ValidationError("record_stride must be at least 1");
}

std::size_t IntegratorConfig::step_count() const {
    return static_cast<std::size_t>(std::llround(t_final / dt));
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double WienerSource::increment(double dt) { return std::sqrt(dt) * normal_(engine_); }

Projection project_to_physical(const ComplexMatrix& m, double tol) {
    const SpectralDecomposition sd = hermitian_eig(m);
    if (sd.eigenvalues.minCoeff() >= 0.0) {
        // Nothing to clip: symmetrize and renormalize in place, which avoids the
        // rounding of a spectral reconstruction and leaves fixed points exact.
        ComplexMatrix h = 0.5 * (m + m.adjoint());
        const double total = h.trace().real();
        if (!(total > 0.0)) throw RepairError("physicality repair left no positive mass", 0.0);
        // rounding-level trace errors are left alone so that repeated repairs do not drift
        if (std::abs(total - 1.0) > 1e-14) h /= total;
        return {DensityMatrix::from_checked(std::move(h)), 0.0};
    }
    double clipped = 0.0;
    RealVector p = sd.eigenvalues;
    for (Index j = 0; j < p.size(); ++j) {
        if (p(j) < 0.0) {
            clipped -= p(j);
            p(j) = 0.0;
        }
    }
    if (clipped > tol) {
        std::ostringstream os;
        os << "physicality repair clipped mass " << clipped << " exceeds tolerance " << tol;
        throw RepairError(os.str(), clipped);
    }
    const double total = p.sum();
    if (!(total > 0.0)) throw RepairError("physicality repair left no positive mass", clipped);
    p /= total;
    return {DensityMatrix::from_spectrum(p, sd.eigenvectors), clipped};
}

StepResult em_step_with_increment(const ModelSpec& model, const TrajectoryState& s,
                                  const IntegratorConfig& cfg, double dW) {
    const ComplexMatrix& rho = s.rho.matrix();
    const ComplexMatrix next = rho + sme_increment(model, s.rho, cfg.dt, dW);
    const double signal_mean = trace_product(model.probe_quadrature(), rho).real();
    Projection proj = project_to_physical(next, cfg.repair_tolerance);
    return {TrajectoryState{s.t + cfg.dt, std::move(proj.state), s.wiener + dW,
                            s.measurement + signal_mean * cfg.dt + dW},
            dW, proj.repair_magnitude};
}

StepResult em_step(const ModelSpec& model, const TrajectoryState& s, const IntegratorConfig& cfg,
                   WienerSource& source) {
    return em_step_with_increment(model, s, cfg, source.increment(cfg.dt));
}

TrajectoryRecord integrate_me(const ModelSpec& model, const DensityMatrix& rho0,
                              const IntegratorConfig& cfg, double u_fixed) {
    cfg.validate();
    require_same_dim(model.hamiltonian(), rho0.matrix(), "integrate_me");
    const std::size_t steps = cfg.step_count();
    const auto substeps = static_cast<std::size_t>(
        std::max(1.0, std::ceil(cfg.dt * generator_rate_bound(model, u_fixed))));
    const double h = cfg.dt / static_cast<double>(substeps);

    TrajectoryRecord rec;
    TrajectoryState s{0.0, rho0, 0.0, 0.0};
    append_sample(rec, s, 0.0, 0.0);

    ComplexMatrix m = rho0.matrix();
    for (std::size_t k = 1; k <= steps; ++k) {
        for (std::size_t j = 0; j < substeps; ++j) {
            const ComplexMatrix k1 = apply_generator(model, m, u_fixed);
            const ComplexMatrix k2 = apply_generator(model, m + 0.5 * h * k1, u_fixed);
            const ComplexMatrix k3 = apply_generator(model, m + 0.5 * h * k2, u_fixed);
            const ComplexMatrix k4 = apply_generator(model, m + h * k3, u_fixed);
            m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        if (k % static_cast<std::size_t>(cfg.record_stride) != 0) continue;
        try {
            s = TrajectoryState{static_cast<double>(k) * cfg.dt, DensityMatrix(m), 0.0, 0.0};
        } catch (const ValidationError& e) {
            throw IntegrationError(std::string("integrate_me rejected step: ") + e.what(), 0, k);
        }
        append_sample(rec, s, 0.0, 0.0);
    }
    return rec;
}

TrajectoryRecord simulate_trajectory(const ModelSpec& model, const DensityMatrix& rho0,
                                     const IntegratorConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    require_same_dim(model.hamiltonian(), rho0.matrix(), "simulate_trajectory");
    const std::size_t steps = cfg.step_count();
    const auto stride = static_cast<std::size_t>(cfg.record_stride);

    TrajectoryRecord rec;
    const std::size_t samples = steps / stride + 1;
    rec.times.reserve(samples);
    rec.states.reserve(samples);
    rec.entropies.reserve(samples);

    WienerSource source(seed);
    TrajectoryState s{0.0, rho0, 0.0, 0.0};
    append_sample(rec, s, 0.0, 0.0);

    double dW_sum = 0.0;
    double repair_sum = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        try {
            StepResult r = em_step(model, s, cfg, source);
            // exact grid times, no accumulated rounding
            r.state.t = static_cast<double>(k) * cfg.dt;
            s = std::move(r.state);
            dW_sum += r.dW;
            repair_sum += r.repair_magnitude;
            rec.total_repair += r.repair_magnitude;
        } catch (const std::exception& e) {
            throw IntegrationError(std::string("step ") + std::to_string(k) + ": " + e.what(), 0,
                                   k);
        }
        if (k % stride == 0) {
            append_sample(rec, s, dW_sum, repair_sum);
            dW_sum = 0.0;
            repair_sum = 0.0;
        }
    }
    rec.repair_flagged = rec.total_repair > cfg.repair_flag_threshold;
    return rec;
}

}  // namespace entroflux
