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

// Qubit stabilization toward the excited state |0>: feedback Hamiltonian
// sigma_y, dispersive probe sqrt(kappa) sigma_z and spontaneous emission
// sqrt(gamma) sigma_- with gamma = alpha kappa.
//
// For this model the bound on the entropy rate reduces to
// kappa (alpha z + 4 z^2 - 4), which is non-negative exactly when
// z >= (-alpha + sqrt(64 + alpha^2)) / 8.

#include "entroflux/dynamics.hpp"

namespace entroflux::qubit {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

struct QubitScenario {
    double kappa = 1.0;
    double alpha = 0.0;
    ControlLaw control = ControlLaw::zero();

    double gamma() const noexcept { return alpha * kappa; }
    void validate() const;
};

/// (I + x sigma_x + y sigma_y + z sigma_z) / 2
DensityMatrix bloch_to_density(const BlochVector& b);

/// (Tr sigma_x rho, Tr sigma_y rho, Tr sigma_z rho)
BlochVector density_to_bloch(const DensityMatrix& rho);

/// H = sigma_y, L = sqrt(kappa) sigma_z, M = sqrt(alpha kappa) sigma_-.
ModelSpec stabilization_model(const QubitScenario& s);

/// Smallest mean z at which the sufficient condition holds.
double z_threshold(double alpha);

/// x(t) under pure dephasing L = sqrt(kappa) sigma_z.
double dephasing_oracle(double x0, double kappa, double t);

/// z(t) under pure decay M = sqrt(gamma) sigma_-.
double decay_oracle(double z0, double gamma, double t);

/// Whether sufficient_condition at the diagonal state with Bloch z agrees with
/// z >= z_threshold(alpha). Holds for every z in [-1, 1].
bool threshold_consistency(const QubitScenario& s, double z);

}  // namespace entroflux::qubit
