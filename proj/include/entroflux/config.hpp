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

// Run configuration: a JSON document (comments allowed), validated strictly.
// Unknown keys anywhere in the tree are rejected. See README.md for the schema.

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "entroflux/ensemble.hpp"
#include "entroflux/qubit.hpp"

namespace entroflux {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Emit { trajectories, ensemble, bound_report };

struct RunConfig {
    /// Exactly one of `scenario` and `model` is set.
    std::optional<qubit::QubitScenario> scenario;
    std::optional<ModelSpec> model;
    DensityMatrix initial_state = DensityMatrix::maximally_mixed(2);
    EnsembleConfig ensemble;
    /// Whether worker_count came from the document (vs. the default).
    bool workers_from_document = false;
    std::string output_path = ".";
    std::set<Emit> emit{Emit::ensemble, Emit::bound_report};
    int smoothing_window = 1;

    ModelSpec build_model() const;
};

/// Parses and validates a configuration document. Throws ConfigError.
RunConfig parse_config(const std::string& text);

/// Reads and parses `path`. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace entroflux
