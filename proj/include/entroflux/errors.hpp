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
#include <stdexcept>
#include <string>

namespace entroflux {

/// Raised when an input violates a documented precondition (shape, Hermiticity,
/// positivity, trace, parameter range).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the eigenvalue clipping after a stochastic step removes more
/// probability mass than the configured tolerance allows.
class RepairError : public std::runtime_error {
public:
    RepairError(const std::string& what, double magnitude)
        : std::runtime_error(what), magnitude_(magnitude) {}

    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// A failed time step, located by trajectory index (0 for single runs) and
/// step index.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, std::size_t trajectory, std::size_t step)
        : std::runtime_error(what), trajectory_(trajectory), step_(step) {}

    std::size_t trajectory() const noexcept { return trajectory_; }
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t trajectory_;
    std::size_t step_;
};

}  // namespace entroflux
