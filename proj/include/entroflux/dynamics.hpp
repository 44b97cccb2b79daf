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

// Measurement-based feedback model. A state conditioned on a continuous
// measurement of the probe L evolves as
//
//   d rho = -i[u H, rho] dt + D[L] rho dt + D[M] rho dt + H[L] rho dW
//
// with the dissipator D[A] rho = A rho A^dag - {A^dag A, rho}/2 and the
// innovation H[A] rho = A rho + rho A^dag - Tr[(A + A^dag) rho] rho.

#include <optional>

#include "entroflux/linalg.hpp"

namespace entroflux {

/// Feedback law u(rho) multiplying the Hamiltonian.
class ControlLaw {
public:
    enum class Kind { zero, constant, bloch_x_proportional };

    static ControlLaw zero() { return ControlLaw(Kind::zero, 0.0); }
    static ControlLaw constant(double value);
    /// u = -gain Tr(sigma_x rho); qubits only.
    static ControlLaw bloch_x_proportional(double gain);

    Kind kind() const noexcept { return kind_; }
    /// The constant value or the gain; 0 for the zero law.
    double parameter() const noexcept { return parameter_; }
    /// Whether u depends on the state.
    bool is_state_dependent() const noexcept { return kind_ == Kind::bloch_x_proportional; }

    /// Throws ValidationError if the law cannot be evaluated at dimension d.
    void require_dimension(Index dim) const;

private:
    ControlLaw(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    double parameter_;
};

double evaluate_control(const ControlLaw& law, const DensityMatrix& rho);

/// The operator triple (H, L, M) with a control law. Products needed on every
/// step (L^dag L, M^dag M, L + L^dag) are cached at construction.
class ModelSpec {
public:
    ModelSpec(ComplexMatrix hamiltonian, ComplexMatrix probe, ComplexMatrix decoherence,
              ControlLaw control = ControlLaw::zero());

    Index dim() const noexcept { return hamiltonian_.rows(); }
    const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
    const ComplexMatrix& probe() const noexcept { return probe_; }
    const ComplexMatrix& decoherence() const noexcept { return decoherence_; }
    const ControlLaw& control() const noexcept { return control_; }

    const ComplexMatrix& probe_number() const noexcept { return probe_number_; }
    const ComplexMatrix& decoherence_number() const noexcept { return decoherence_number_; }
    /// L + L^dag, whose expectation is the mean of the measurement signal.
    const ComplexMatrix& probe_quadrature() const noexcept { return probe_quadrature_; }

    bool probe_is_hermitian(double tol = 1e-10) const;

private:
    ComplexMatrix hamiltonian_;
    ComplexMatrix probe_;
    ComplexMatrix decoherence_;
    ControlLaw control_;
    ComplexMatrix probe_number_;
    ComplexMatrix decoherence_number_;
    ComplexMatrix probe_quadrature_;
};

ComplexMatrix dissipator(const ComplexMatrix& a, const DensityMatrix& rho);
ComplexMatrix innovation(const ComplexMatrix& a, const DensityMatrix& rho);

/// Euler increment of the conditioned state for one step of length dt driven
/// by the Wiener increment dW. The control is evaluated at rho.
ComplexMatrix sme_increment(const ModelSpec& model, const DensityMatrix& rho, double dt, double dW);

/// -i[uH, rho] + D[L] rho + D[M] rho with u from the control law, or from
/// `u_override` when given.
ComplexMatrix lindblad_rhs(const ModelSpec& model, const DensityMatrix& rho,
                           std::optional<double> u_override = std::nullopt);

/// The same generator with a fixed u applied to an arbitrary matrix (linear in
/// `m`). Used by the deterministic integrator on intermediate stages.
ComplexMatrix apply_generator(const ModelSpec& model, const ComplexMatrix& m, double u);

}  // namespace entroflux
