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

#include "entroflux/entropy.hpp"

#include <cmath>
#include <sstream>

namespace entroflux {

namespace {

double shannon(const RealVector& p) {
    double s = 0.0;
    for (Index j = 0; j < p.size(); ++j) {
        const double l = p(j);
        if (l > 0.0) s -= l * std::log(l);
    }
    return s;
}

double floor_shift_of_spectrum(const RealVector& eigenvalues, double floor) {
    const RealVector p = eigenvalues.cwiseMax(0.0);
    RealVector q = p.cwiseMax(floor);
    q /= q.sum();
    return std::abs(shannon(q) - shannon(p));
}

void require_floor_admissible(const DensityMatrix& rho, double floor, const char* op) {
    if (!(floor > 0.0)) throw ValidationError(std::string(op) + ": floor must be positive");
    const double shift = floor_entropy_shift(rho, floor);
    if (shift > kFloorEntropyTolerance) {
        std::ostringstream os;
        os << op << ": state is too close to rank deficient for floor " << floor
           << " (floored spectrum shifts the entropy by " << shift << ")";
        throw ValidationError(os.str());
    }
}

void require_hermitian_probe(const ComplexMatrix& probe, const char* op) {
    const double asym = max_hermitian_asymmetry(probe);
    if (asym > 1e-10) {
        std::ostringstream os;
        os << op << ": probe L must be Hermitian (Hermitian-probe restriction; max asymmetry "
           << asym << ")";
        throw ValidationError(os.str());
    }
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    return shannon(solver.eigenvalues().cwiseMax(0.0));
}

double floor_entropy_shift(const DensityMatrix& rho, double floor) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    return floor_shift_of_spectrum(solver.eigenvalues(), floor);
}

double observable_variance(const ComplexMatrix& probe, const DensityMatrix& rho) {
    require_same_dim(probe, rho.matrix(), "observable_variance");
    require_hermitian_probe(probe, "observable_variance");
    const double second = trace_product(probe * probe, rho.matrix()).real();
    const double first = trace_product(probe, rho.matrix()).real();
    return second - first * first;
}

double quantumness(const ComplexMatrix& decoherence, const DensityMatrix& rho) {
    require_same_dim(decoherence, rho.matrix(), "quantumness");
    return expectation(commutator(decoherence.adjoint(), decoherence), rho).real();
}

double abe_gap(const ComplexMatrix& a, const DensityMatrix& rho, double floor) {
    require_same_dim(a, rho.matrix(), "abe_gap");
    require_floor_admissible(rho, floor, "abe_gap");
    const ComplexMatrix log_rho = log_density(rho, floor);
    const double production = -trace_product(dissipator(a, rho), log_rho).real();
    return production - quantumness(a, rho);
}

IdentitySides ito_entropy_rate_identity(const ComplexMatrix& probe, const DensityMatrix& rho,
                                        double floor) {
    require_same_dim(probe, rho.matrix(), "ito_entropy_rate_identity");
    require_hermitian_probe(probe, "ito_entropy_rate_identity");
    require_floor_admissible(rho, floor, "ito_entropy_rate_identity");
    const ComplexMatrix inn = innovation(probe, rho);
    const double lhs = trace_product(floored_inverse(rho, floor), inn * inn).real();
    return {lhs, 4.0 * observable_variance(probe, rho)};
}

double lemma_gap(const DensityMatrix& rho, double floor) {
    require_floor_admissible(rho, floor, "lemma_gap");
    const Index d = rho.dim();
    const ComplexMatrix gap =
        -log_density(rho, floor) - (ComplexMatrix::Identity(d, d) - rho.matrix());
    return hermitian_eig(gap).eigenvalues(d - 1);
}

double bound_rhs(const ModelSpec& model, const DensityMatrix& mean_state) {
    require_hermitian_probe(model.probe(), "bound_rhs");
    return quantumness(model.decoherence(), mean_state) -
           4.0 * observable_variance(model.probe(), mean_state);
}

bool sufficient_condition(const ModelSpec& model, const DensityMatrix& mean_state) {
    require_hermitian_probe(model.probe(), "sufficient_condition");
    const double q = quantumness(model.decoherence(), mean_state);
    const double v = 4.0 * observable_variance(model.probe(), mean_state);
    // rounding slack relative to the size of the two terms; q == v is the boundary
    return q - v >= -kBoundaryRelativeTolerance * (std::abs(q) + std::abs(v));
}

}  // namespace entroflux
