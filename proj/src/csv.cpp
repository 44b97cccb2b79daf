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

#include "entroflux/csv.hpp"

#include <locale>
#include <sstream>

#include "entroflux/qubit.hpp"

namespace entroflux::csv {

namespace {

std::vector<std::string> state_header(Index dim) {
    if (dim == 2) return {"x", "y", "z"};
    std::vector<std::string> h;
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            const std::string ij = std::to_string(i) + "_" + std::to_string(j);
            h.push_back("re_" + ij);
            h.push_back("im_" + ij);
        }
    }
    return h;
}

void append_state(std::vector<std::string>& row, const DensityMatrix& rho) {
    if (rho.dim() == 2) {
        const qubit::BlochVector b = qubit::density_to_bloch(rho);
        row.push_back(format_number(b.x));
        row.push_back(format_number(b.y));
        row.push_back(format_number(b.z));
        return;
    }
    const ComplexMatrix& m = rho.matrix();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(format_number(m(i, j).real()));
            row.push_back(format_number(m(i, j).imag()));
        }
    }
}

}  // namespace

std::string format_number(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << (v == 0.0 ? 0.0 : v);  // no "-0"
    return os.str();
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) os << ',';
        os << cells[i];
    }
    os << '\n';
}

void write_ensemble(std::ostream& os, const EnsembleStatistics& stats) {
    const Index dim = stats.mean_state.empty() ? 2 : stats.mean_state.front().dim();
    std::vector<std::string> header{"t"};
    for (auto& h : state_header(dim)) header.push_back(std::move(h));
    header.insert(header.end(), {"S_mean", "S_se", "quantumness_mean"});
    write_row(os, header);
    for (std::size_t i = 0; i < stats.size(); ++i) {
        std::vector<std::string> row{format_number(stats.times[i])};
        append_state(row, stats.mean_state[i]);
        row.push_back(format_number(stats.mean_entropy[i]));
        row.push_back(format_number(stats.entropy_se[i]));
        row.push_back(format_number(stats.quantumness_mean[i]));
        write_row(os, row);
    }
}

void write_trajectory(std::ostream& os, const TrajectoryRecord& rec) {
    const Index dim = rec.states.empty() ? 2 : rec.states.front().dim();
    std::vector<std::string> header{"t"};
    for (auto& h : state_header(dim)) header.push_back(std::move(h));
    header.insert(header.end(), {"S", "dW", "repair", "y"});
    write_row(os, header);
    for (std::size_t i = 0; i < rec.size(); ++i) {
        std::vector<std::string> row{format_number(rec.times[i])};
        append_state(row, rec.states[i]);
        row.push_back(format_number(rec.entropies[i]));
        row.push_back(format_number(rec.dW_draws[i]));
        row.push_back(format_number(rec.repair_magnitudes[i]));
        row.push_back(format_number(rec.measurement[i]));
        write_row(os, row);
    }
}

void write_bound_report(std::ostream& os, const EntropyBoundReport& report) {
    write_row(os, {"t", "lhs_rate", "lhs_se", "rhs_bound", "sufficient", "violation"});
    for (std::size_t i = 0; i < report.size(); ++i) {
        write_row(os, {format_number(report.times[i]), format_number(report.lhs_rate[i]),
                       format_number(report.lhs_se[i]), format_number(report.rhs_bound[i]),
                       report.sufficient_flag[i] ? "1" : "0",
                       report.violation_flag[i] ? "1" : "0"});
    }
}

}  // namespace entroflux::csv
