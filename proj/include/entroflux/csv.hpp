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

// CSV output: header row, '.' decimal separator, 17 significant digits,
// '\n'-terminated rows. Output depends only on the values written.

#include <ostream>
#include <string>
#include <vector>

#include "entroflux/bound_report.hpp"

namespace entroflux::csv {

/// "%.17g" independent of the global locale.
std::string format_number(double v);

void write_row(std::ostream& os, const std::vector<std::string>& cells);

/// Columns t,x,y,z (qubits) or t,re_ij,im_ij,... followed by
/// S_mean,S_se,quantumness_mean.
void write_ensemble(std::ostream& os, const EnsembleStatistics& stats);

/// t,x,y,z or vectorized state, then S,dW,repair,y.
void write_trajectory(std::ostream& os, const TrajectoryRecord& rec);

/// t,lhs_rate,lhs_se,rhs_bound,sufficient,violation
void write_bound_report(std::ostream& os, const EntropyBoundReport& report);

}  // namespace entroflux::csv
