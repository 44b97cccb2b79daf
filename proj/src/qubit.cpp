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

#include "entroflux/qubit.hpp"

#include <cmath>
#include <sstream>

#include "entroflux/entropy.hpp"

namespace entroflux::qubit {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

void QubitScenario::validate() const {
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw ValidationError("kappa must be non-negative");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw ValidationError("alpha must be non-negative");
    }
}

DensityMatrix bloch_to_density(const BlochVector& b) {
    const double n = b.norm();
    if (!(n <= 1.0 + 1e-10)) {
        std::ostringstream os;
        os << "Bloch vector norm " << n << " exceeds 1";
        throw ValidationError(os.str());
    }
    ComplexMatrix m = 0.5 * (pauli::identity() + b.x * pauli::x() + b.y * pauli::y() +
                             b.z * pauli::z());
    return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw ValidationError("density_to_bloch requires d = 2, got d = " +
                              std::to_string(rho.dim()));
    }
    const ComplexMatrix& m = rho.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

ModelSpec stabilization_model(const QubitScenario& s) {
    s.validate();
    return ModelSpec(pauli::y(), std::sqrt(s.kappa) * pauli::z(),
                     std::sqrt(s.gamma()) * pauli::lowering(), s.control);
}

double z_threshold(double alpha) {
    if (!(alpha >= 0.0)) throw ValidationError("z_threshold: alpha must be non-negative");
    // (-alpha + sqrt(64 + alpha^2)) / 8 rewritten as 8 / (alpha + sqrt(64 + alpha^2)),
    // which avoids cancellation for large alpha
    return 8.0 / (alpha + std::sqrt(64.0 + alpha * alpha));
}

double dephasing_oracle(double x0, double kappa, double t) {
    if (!(t >= 0.0)) throw ValidationError("dephasing_oracle: t must be non-negative");
    return x0 * std::exp(-2.0 * kappa * t);
}

double decay_oracle(double z0, double gamma, double t) {
    if (!(t >= 0.0)) throw ValidationError("decay_oracle: t must be non-negative");
    return -1.0 + (z0 + 1.0) * std::exp(-gamma * t);
}

bool threshold_consistency(const QubitScenario& s, double z) {
    const ModelSpec model = stabilization_model(s);
    const bool condition = sufficient_condition(model, bloch_to_density({0.0, 0.0, z}));
    return condition == (z >= z_threshold(s.alpha));
}

}  // namespace entroflux::qubit
