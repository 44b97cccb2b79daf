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

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "entroflux/integrator.hpp"

namespace entroflux {

struct EnsembleConfig {
    std::size_t n_trajectories = 1;
    std::uint64_t master_seed = 0;
    unsigned worker_count = 1;
    IntegratorConfig integrator;

    void validate() const;
};

/// Per-checkpoint sample means over the trajectory ensemble. Standard errors
/// are sample standard deviation (unbiased variance) over sqrt(N); 0 for N=1.
struct EnsembleStatistics {
    std::vector<double> times;
    std::vector<DensityMatrix> mean_state;
    std::vector<double> mean_entropy;
    std::vector<double> entropy_se;
    /// E[Tr([M^dag, M] rho_t)]
    std::vector<double> quantumness_mean;
    std::vector<double> quantumness_se;
    /// E[Var_L(rho_t)], the mean of per-trajectory variances. Diagnostic only;
    /// empty when the probe is not Hermitian.
    std::vector<double> probe_variance_mean;

    std::size_t n_trajectories = 0;
    /// Largest accumulated repair over the trajectories, and how many were flagged.
    double max_total_repair = 0.0;
    std::size_t repair_flagged = 0;

    std::size_t size() const noexcept { return times.size(); }
};

/// Called with each finished trajectory, in trajectory-index order.
using TrajectorySink = std::function<void(std::size_t index, const TrajectoryRecord&)>;

/// Runs cfg.n_trajectories conditioned trajectories, trajectory i seeded with
/// trajectory_seed(master_seed, i), on cfg.worker_count threads. The reduction
/// runs in index order, so the result does not depend on the worker count.
/// Throws IntegrationError naming the lowest failing trajectory index.
EnsembleStatistics run_ensemble(const ModelSpec& model, const DensityMatrix& rho0,
                                const EnsembleConfig& cfg, const TrajectorySink& sink = {});

/// Aggregates already computed records (all sampled on the same grid).
EnsembleStatistics aggregate_records(const ModelSpec& model,
                                     std::span<const TrajectoryRecord> records);

/// (E[S(rho_t)], S(E[rho_t])) per checkpoint. Concavity of the entropy makes
/// the second series dominate the first.
std::pair<std::vector<double>, std::vector<double>> mean_entropy_vs_entropy_of_mean(
    const EnsembleStatistics& stats);

/// Trace distance (1/2)||a - b||_1 of two Hermitian matrices.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace entroflux
