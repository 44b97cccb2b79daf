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

// Entropy quantities of a single state and the inequalities that bound the
// entropy production rate of the measured, decohering system:
//
//   dE[S]/dt >= Tr([M^dag, M] E[rho]) - 4 Var_L(E[rho])
//
// Each term of the bound is exposed separately so that the intermediate
// inequalities can be checked on their own.

#include "entroflux/dynamics.hpp"

namespace entroflux {

/// Largest entropy change tolerated when the eigenvalue floor is applied to a
/// state; larger changes mean the state is too close to rank deficient for the
/// floored inverse/logarithm to be meaningful.
inline constexpr double kFloorEntropyTolerance = 1e-8;

/// -sum_j lambda_j ln lambda_j with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// |S(rho) - S(rho_floored)| where rho_floored has its spectrum raised to
/// `floor` and renormalized.
double floor_entropy_shift(const DensityMatrix& rho, double floor = kDefaultFloor);

/// Tr(L^2 rho) - Tr(L rho)^2 for Hermitian L. Throws ValidationError for a
/// non-Hermitian probe.
double observable_variance(const ComplexMatrix& probe, const DensityMatrix& rho);

/// Tr([M^dag, M] rho). Zero for any normal M.
double quantumness(const ComplexMatrix& decoherence, const DensityMatrix& rho);

/// -Tr{D[A] rho ln rho} - Tr([A^dag, A] rho). Non-negative for every A and
/// full-rank rho.
double abe_gap(const ComplexMatrix& a, const DensityMatrix& rho, double floor = kDefaultFloor);

struct IdentitySides {
    double lhs;
    double rhs;
};

/// lhs = Tr[rho^-1 (H[L] rho)^2], rhs = 4 Var_L(rho). Equal for Hermitian L.
IdentitySides ito_entropy_rate_identity(const ComplexMatrix& probe, const DensityMatrix& rho,
                                        double floor = kDefaultFloor);

/// Smallest eigenvalue of (-ln rho) - (I - rho). Non-negative for full-rank rho.
double lemma_gap(const DensityMatrix& rho, double floor = kDefaultFloor);

/// Lower bound on the ensemble entropy rate evaluated on the mean state:
/// Tr([M^dag, M] mean) - 4 Var_L(mean). Requires a Hermitian probe.
double bound_rhs(const ModelSpec& model, const DensityMatrix& mean_state);

/// Relative slack used when comparing the two terms of the bound.
inline constexpr double kBoundaryRelativeTolerance = 1e-12;

/// bound_rhs >= 0, with the comparison made at kBoundaryRelativeTolerance
/// relative to the magnitude of the two terms so that the exact boundary counts
/// as satisfied.
bool sufficient_condition(const ModelSpec& model, const DensityMatrix& mean_state);

}  // namespace entroflux
