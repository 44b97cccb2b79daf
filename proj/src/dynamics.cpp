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

#include "entroflux/dynamics.hpp"

#include <cmath>

namespace entroflux {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix dissipate(const ComplexMatrix& a, const ComplexMatrix& number,
                        const ComplexMatrix& rho) {
    const ComplexMatrix anti = number * rho;
    return a * rho * a.adjoint() - 0.5 * (anti + anti.adjoint());
}

ComplexMatrix innovate(const ComplexMatrix& a, const ComplexMatrix& quadrature,
                       const ComplexMatrix& rho) {
    const ComplexMatrix ar = a * rho;
    const double mean = trace_product(quadrature, rho).real();
    return ar + ar.adjoint() - mean * rho;
}

double control_value(const ControlLaw& law, const ComplexMatrix& rho) {
    switch (law.kind()) {
    case ControlLaw::Kind::zero:
        return 0.0;
    case ControlLaw::Kind::constant:
        return law.parameter();
    case ControlLaw::Kind::bloch_x_proportional:
        // Tr(sigma_x rho) = 2 Re rho_01
        return -law.parameter() * 2.0 * rho(0, 1).real();
    }
    return 0.0;
}

}  // namespace

ControlLaw ControlLaw::constant(double value) {
    if (!std::isfinite(value)) throw ValidationError("constant control value must be finite");
    return ControlLaw(Kind::constant, value);
}

ControlLaw ControlLaw::bloch_x_proportional(double gain) {
    if (!std::isfinite(gain)) throw ValidationError("control gain must be finite");
    return ControlLaw(Kind::bloch_x_proportional, gain);
}

void ControlLaw::require_dimension(Index dim) const {
    if (kind_ == Kind::bloch_x_proportional && dim != 2) {
        throw ValidationError("bloch_x_proportional control requires d = 2, got d = " +
                              std::to_string(dim));
    }
}

double evaluate_control(const ControlLaw& law, const DensityMatrix& rho) {
    law.require_dimension(rho.dim());
    return control_value(law, rho.matrix());
}

ModelSpec::ModelSpec(ComplexMatrix hamiltonian, ComplexMatrix probe, ComplexMatrix decoherence,
                     ControlLaw control)
    : hamiltonian_(std::move(hamiltonian)),
      probe_(std::move(probe)),
      decoherence_(std::move(decoherence)),
      control_(control) {
    require_square(hamiltonian_, "hamiltonian");
    require_square(probe_, "probe operator L");
    require_square(decoherence_, "decoherence operator M");
    require_same_dim(hamiltonian_, probe_, "model");
    require_same_dim(hamiltonian_, decoherence_, "model");
    const double asym = max_hermitian_asymmetry(hamiltonian_);
    if (asym > 1e-10) {
        throw ValidationError("hamiltonian is not Hermitian (max asymmetry " +
                              std::to_string(asym) + ")");
    }
    control_.require_dimension(dim());
    probe_number_ = probe_.adjoint() * probe_;
    decoherence_number_ = decoherence_.adjoint() * decoherence_;
    probe_quadrature_ = probe_ + probe_.adjoint();
}

bool ModelSpec::probe_is_hermitian(double tol) const {
    return max_hermitian_asymmetry(probe_) <= tol;
}

ComplexMatrix dissipator(const ComplexMatrix& a, const DensityMatrix& rho) {
    require_same_dim(a, rho.matrix(), "dissipator");
    return dissipate(a, a.adjoint() * a, rho.matrix());
}

ComplexMatrix innovation(const ComplexMatrix& a, const DensityMatrix& rho) {
    require_same_dim(a, rho.matrix(), "innovation");
    return innovate(a, a + a.adjoint(), rho.matrix());
}

ComplexMatrix apply_generator(const ModelSpec& model, const ComplexMatrix& m, double u) {
    require_same_dim(model.hamiltonian(), m, "generator");
    ComplexMatrix out = dissipate(model.probe(), model.probe_number(), m);
    out += dissipate(model.decoherence(), model.decoherence_number(), m);
    if (u != 0.0) {
        const ComplexMatrix hm = model.hamiltonian() * m;
        out += (-kI * u) * (hm - m * model.hamiltonian());
    }
    return out;
}

ComplexMatrix lindblad_rhs(const ModelSpec& model, const DensityMatrix& rho,
                           std::optional<double> u_override) {
    const double u = u_override ? *u_override : evaluate_control(model.control(), rho);
    return apply_generator(model, rho.matrix(), u);
}

ComplexMatrix sme_increment(const ModelSpec& model, const DensityMatrix& rho, double dt,
                            double dW) {
    if (!(dt > 0.0)) throw ValidationError("dt must be positive");
    const double u = evaluate_control(model.control(), rho);
    ComplexMatrix inc = apply_generator(model, rho.matrix(), u) * dt;
    inc += innovate(model.probe(), model.probe_quadrature(), rho.matrix()) * dW;
    return inc;
}

}  // namespace entroflux
