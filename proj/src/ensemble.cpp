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

#include "entroflux/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "entroflux/entropy.hpp"

namespace entroflux {

namespace {

// Trajectories held in memory at once; the reduction consumes them in order.
constexpr std::size_t kChunkSize = 256;

struct Welford {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    double standard_error() const {
        if (n < 2) return 0.0;
        const double var = m2 / static_cast<double>(n - 1);
        return std::sqrt(var / static_cast<double>(n));
    }
};

// Ordered accumulator; add() must be called in trajectory-index order.
class Accumulator {
public:
    Accumulator(const ModelSpec& model)
        : model_(model),
          commutator_(commutator(model.decoherence().adjoint(), model.decoherence())),
          hermitian_probe_(model.probe_is_hermitian()),
          probe_square_(model.probe() * model.probe()) {}

    void add(const TrajectoryRecord& rec) {
        if (count_ == 0) {
            times_ = rec.times;
            const std::size_t k = rec.size();
            state_sum_.assign(k, ComplexMatrix::Zero(model_.dim(), model_.dim()));
            entropy_.assign(k, {});
            quantumness_.assign(k, {});
            variance_.assign(k, 0.0);
        } else if (rec.times != times_) {
            throw ValidationError("aggregate: trajectory records sampled on different grids");
        }
        for (std::size_t i = 0; i < rec.size(); ++i) {
            const ComplexMatrix& rho = rec.states[i].matrix();
            state_sum_[i] += rho;
            entropy_[i].add(rec.entropies[i]);
            quantumness_[i].add(trace_product(commutator_, rho).real());
            if (hermitian_probe_) {
                const double first = trace_product(model_.probe(), rho).real();
                variance_[i] += trace_product(probe_square_, rho).real() - first * first;
            }
        }
        max_repair_ = std::max(max_repair_, rec.total_repair);
        if (rec.repair_flagged) ++flagged_;
        ++count_;
    }

    EnsembleStatistics finish() const {
        if (count_ == 0) throw ValidationError("aggregate: no trajectories");
        EnsembleStatistics s;
        const auto n = static_cast<double>(count_);
        s.times = times_;
        s.n_trajectories = count_;
        s.max_total_repair = max_repair_;
        s.repair_flagged = flagged_;
        for (std::size_t i = 0; i < times_.size(); ++i) {
            s.mean_state.emplace_back(state_sum_[i] / n);
            s.mean_entropy.push_back(entropy_[i].mean);
            s.entropy_se.push_back(entropy_[i].standard_error());
            s.quantumness_mean.push_back(quantumness_[i].mean);
            s.quantumness_se.push_back(quantumness_[i].standard_error());
            if (hermitian_probe_) s.probe_variance_mean.push_back(variance_[i] / n);
        }
        return s;
    }

private:
    const ModelSpec& model_;
    ComplexMatrix commutator_;
    bool hermitian_probe_;
    ComplexMatrix probe_square_;

    std::size_t count_ = 0;
    std::vector<double> times_;
    std::vector<ComplexMatrix> state_sum_;
    std::vector<Welford> entropy_;
    std::vector<Welford> quantumness_;
    std::vector<double> variance_;
    double max_repair_ = 0.0;
    std::size_t flagged_ = 0;
};

}  // namespace

void EnsembleConfig::validate() const {
    if (n_trajectories < 1) throw ValidationError("n_trajectories must be at least 1");
    if (worker_count < 1) throw ValidationError("worker_count must be at least 1");
    integrator.validate();
}

EnsembleStatistics run_ensemble(const ModelSpec& model, const DensityMatrix& rho0,
                                const EnsembleConfig& cfg, const TrajectorySink& sink) {
    cfg.validate();
    require_same_dim(model.hamiltonian(), rho0.matrix(), "run_ensemble");

    Accumulator acc(model);
    std::vector<std::optional<TrajectoryRecord>> chunk;
    std::vector<std::exception_ptr> errors;

    for (std::size_t begin = 0; begin < cfg.n_trajectories; begin += kChunkSize) {
        const std::size_t end = std::min(cfg.n_trajectories, begin + kChunkSize);
        const std::size_t count = end - begin;
        chunk.assign(count, std::nullopt);
        errors.assign(count, nullptr);

        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t j = next++; j < count; j = next++) {
                try {
                    chunk[j] = simulate_trajectory(model, rho0, cfg.integrator,
                                                   trajectory_seed(cfg.master_seed, begin + j));
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            }
        };
        const unsigned workers =
            static_cast<unsigned>(std::min<std::size_t>(cfg.worker_count, count));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }

        for (std::size_t j = 0; j < count; ++j) {
            if (errors[j]) {
                const std::size_t index = begin + j;
                try {
                    std::rethrow_exception(errors[j]);
                } catch (const IntegrationError& e) {
                    throw IntegrationError("trajectory " + std::to_string(index) + ", " + e.what(),
                                           index, e.step());
                } catch (const std::exception& e) {
                    throw IntegrationError("trajectory " + std::to_string(index) + ": " + e.what(),
                                           index, 0);
                }
            }
            acc.add(*chunk[j]);
            if (sink) sink(begin + j, *chunk[j]);
        }
    }
    return acc.finish();
}

EnsembleStatistics aggregate_records(const ModelSpec& model,
                                     std::span<const TrajectoryRecord> records) {
    Accumulator acc(model);
    for (const auto& rec : records) acc.add(rec);
    return acc.finish();
}

std::pair<std::vector<double>, std::vector<double>> mean_entropy_vs_entropy_of_mean(
    const EnsembleStatistics& stats) {
    std::vector<double> of_mean;
    of_mean.reserve(stats.size());
    for (const auto& rho : stats.mean_state) of_mean.push_back(von_neumann_entropy(rho));
    return {stats.mean_entropy, std::move(of_mean)};
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "trace_distance");
    const SpectralDecomposition sd = hermitian_eig(a - b);
    return 0.5 * sd.eigenvalues.cwiseAbs().sum();
}

}  // namespace entroflux
