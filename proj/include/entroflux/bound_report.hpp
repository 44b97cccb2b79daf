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

#include <vector>

#include "entroflux/ensemble.hpp"

namespace entroflux {

/// Margin, in standard errors, by which the estimated rate may fall below the
/// bound before a checkpoint counts as a violation.
inline constexpr double kViolationSigmas = 3.0;

struct RateEstimate {
    std::vector<double> rate;
    std::vector<double> se;
};

/// Finite-difference derivative of E[S_t]: central differences in the interior,
/// one-sided at the ends. Standard errors propagate the per-checkpoint entropy
/// errors as if independent, which overstates them for positively correlated
/// neighbours. A `smoothing_window` > 1 (odd) applies a centered moving average
/// to the rate series.
RateEstimate entropy_rate_estimate(const EnsembleStatistics& stats, int smoothing_window = 1);

/// Per-checkpoint comparison of the estimated entropy rate against the lower
/// bound evaluated on the mean state.
struct EntropyBoundReport {
    std::vector<double> times;
    std::vector<double> lhs_rate;
    std::vector<double> rhs_bound;
    std::vector<double> lhs_se;
    std::vector<bool> sufficient_flag;
    /// lhs_rate < rhs_bound - 3 lhs_se
    std::vector<bool> violation_flag;

    bool any_violation() const;
    std::size_t size() const noexcept { return times.size(); }
};

EntropyBoundReport build_bound_report(const ModelSpec& model, const EnsembleStatistics& stats,
                                      int smoothing_window = 1);

}  // namespace entroflux
