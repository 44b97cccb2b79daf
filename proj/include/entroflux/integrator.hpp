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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "entroflux/dynamics.hpp"

namespace entroflux {

struct IntegratorConfig {
    double dt = 1e-3;
    double t_final = 1.0;
    double floor = kDefaultFloor;
    /// Largest clipped eigenvalue mass accepted in a single step.
    double repair_tolerance = 5e-2;
    /// Record every `record_stride`-th step (step 0 is always recorded).
    int record_stride = 1;
    /// Accumulated clipped mass above which a trajectory is flagged.
    double repair_flag_threshold = 1e-3;

    void validate() const;
    /// round(t_final / dt)
    std::size_t step_count() const;
};

struct TrajectoryState {
    double t = 0.0;
    DensityMatrix rho;
    /// Accumulated Wiener path W_t.
    double wiener = 0.0;
    /// Accumulated measurement record y_t.
    double measurement = 0.0;
};

/// Samples at the recorded steps. `dW_draws` and `repair_magnitudes` hold the
/// sums over the interval ending at each sample (0 for the first one).
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<double> entropies;
    std::vector<double> dW_draws;
    std::vector<double> repair_magnitudes;
    std::vector<double> measurement;

    double total_repair = 0.0;
    /// Set when total_repair exceeds the configured flag threshold.
    bool repair_flagged = false;

    std::size_t size() const noexcept { return times.size(); }
};

/// Mixes a master seed and a trajectory index into an independent stream seed
/// (SplitMix64 finalizer), so trajectory i draws the same numbers no matter
/// which worker runs it.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index);

/// Gaussian source for Wiener increments.
class WienerSource {
public:
    explicit WienerSource(std::uint64_t seed) : engine_(seed) {}

    /// A draw from N(0, dt).
    double increment(double dt);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

inline double wiener_increment(WienerSource& source, double dt) { return source.increment(dt); }

struct Projection {
    DensityMatrix state;
    /// Total probability mass removed by clipping negative eigenvalues.
    double repair_magnitude;
};

/// Hermitian part of `m` with negative eigenvalues clipped to zero and the
/// trace renormalized. Throws RepairError if the clipped mass exceeds `tol`.
Projection project_to_physical(const ComplexMatrix& m, double tol);

struct StepResult {
    TrajectoryState state;
    double dW;
    double repair_magnitude;
};

/// One Euler-Maruyama step with a freshly drawn increment.
StepResult em_step(const ModelSpec& model, const TrajectoryState& s, const IntegratorConfig& cfg,
                   WienerSource& source);

/// One Euler-Maruyama step with a prescribed increment.
StepResult em_step_with_increment(const ModelSpec& model, const TrajectoryState& s,
                                  const IntegratorConfig& cfg, double dW);

/// Classical RK4 on the unconditional master equation with the control held at
/// `u_fixed`. Stiff generators are sub-stepped so that each RK4 stage stays
/// inside the stability region; records still land on the cfg.dt grid.
TrajectoryRecord integrate_me(const ModelSpec& model, const DensityMatrix& rho0,
                              const IntegratorConfig& cfg, double u_fixed = 0.0);

/// A conditioned trajectory driven by the Wiener stream seeded with `seed`.
/// Failures are rethrown as IntegrationError carrying the step index.
TrajectoryRecord simulate_trajectory(const ModelSpec& model, const DensityMatrix& rho0,
                                     const IntegratorConfig& cfg, std::uint64_t seed);

}  // namespace entroflux
