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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entroflux {

/// Process exit codes; part of the command-line contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitConfig = 2,
    kExitIntegration = 3,
    kExitBoundViolation = 4,
    kExitSelftest = 5,
};

struct CommandOptions {
    std::filesystem::path config_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    /// Overrides output_path from the config.
    std::optional<std::filesystem::path> out_dir;
    /// Progress and error messages.
    std::ostream* log = nullptr;
};

/// Worker count used when neither --workers nor the config sets one:
/// ENTROFLUX_WORKERS if set and valid, else 1.
unsigned default_worker_count();

/// Writes <out>/ensemble.csv and, when requested, <out>/trajectory_<i>.csv.
int cmd_simulate(const CommandOptions& opts);

/// Writes <out>/bound_report.csv (and ensemble.csv when requested). Returns
/// kExitBoundViolation if any checkpoint violates the bound.
int cmd_verify_bound(const CommandOptions& opts);

/// Writes <out>/sweep_alpha.csv with one row per alpha, in input order.
int cmd_sweep_alpha(const CommandOptions& opts, const std::vector<double>& alphas);

struct SelftestOptions {
    /// Hidden hook: feeds a trace-1.1 matrix into the state-validation suite.
    bool inject_corrupt_state = false;
    std::ostream* out = nullptr;
};

/// Runs the property suites; kExitSelftest if any fails.
int cmd_selftest(const SelftestOptions& opts);

}  // namespace entroflux
