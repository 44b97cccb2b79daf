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

#include "entroflux/bound_report.hpp"

#include <algorithm>
#include <cmath>

#include "entroflux/entropy.hpp"

namespace entroflux {

RateEstimate entropy_rate_estimate(const EnsembleStatistics& stats, int smoothing_window) {
    const std::size_t n = stats.size();
    if (n < 3) throw ValidationError("entropy_rate_estimate: need at least 3 checkpoints");
    if (smoothing_window < 1 || smoothing_window % 2 == 0) {
        throw ValidationError("entropy_rate_estimate: smoothing window must be odd and positive");
    }
    const auto& t = stats.times;
    const auto& s = stats.mean_entropy;
    const auto& e = stats.entropy_se;

    RateEstimate raw;
    raw.rate.resize(n);
    raw.se.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
        const double h = t[hi] - t[lo];
        if (!(h > 0.0)) throw ValidationError("entropy_rate_estimate: times must increase");
        raw.rate[i] = (s[hi] - s[lo]) / h;
        raw.se[i] = std::hypot(e[hi], e[lo]) / h;
    }
    if (smoothing_window == 1) return raw;

    const std::size_t half = static_cast<std::size_t>(smoothing_window / 2);
    RateEstimate out;
    out.rate.resize(n);
    out.se.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double sum = 0.0;
        double var = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) {
            sum += raw.rate[j];
            var += raw.se[j] * raw.se[j];
        }
        const auto count = static_cast<double>(hi - lo + 1);
        out.rate[i] = sum / count;
        out.se[i] = std::sqrt(var) / count;
    }
    return out;
}

bool EntropyBoundReport::any_violation() const {
    return std::find(violation_flag.begin(), violation_flag.end(), true) != violation_flag.end();
}

EntropyBoundReport build_bound_report(const ModelSpec& model, const EnsembleStatistics& stats,
                                      int smoothing_window) {
    const RateEstimate rate = entropy_rate_estimate(stats, smoothing_window);
    EntropyBoundReport r;
    r.times = stats.times;
    r.lhs_rate = rate.rate;
    r.lhs_se = rate.se;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const double rhs = bound_rhs(model, stats.mean_state[i]);
        r.rhs_bound.push_back(rhs);
        r.sufficient_flag.push_back(sufficient_condition(model, stats.mean_state[i]));
        r.violation_flag.push_back(rate.rate[i] < rhs - kViolationSigmas * rate.se[i]);
    }
    return r;
}

}  // namespace entroflux
