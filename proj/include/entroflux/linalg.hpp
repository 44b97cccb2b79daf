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

// Dense complex matrix kernel used by every other module: density-matrix
// validation, Hermitian spectral decomposition and the matrix functions of a
// state (logarithm, floored inverse).

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "entroflux/errors.hpp"

namespace entroflux {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigenvalue floor for logarithms and inverses. With it, 0 ln 0 evaluates to 0.
inline constexpr double kDefaultFloor = 1e-12;

/// Acceptance tolerances for a density matrix.
struct StateTolerances {
    double hermitian = 1e-10;
    double positivity = 1e-10;
    double trace = 1e-10;
};

/// Eigenvalues sorted descending with the matching unitary (columns are
/// eigenvectors), so that m = U diag(lambda) U^dagger.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
/// Immutable once constructed.
class DensityMatrix {
public:
    /// Validates `m` against `tol`; throws ValidationError naming the first
    /// violated property.
    explicit DensityMatrix(ComplexMatrix m, const StateTolerances& tol = {});

    /// Builds U diag(p) U^dagger from a spectrum that is already a probability
    /// vector. The caller guarantees p >= 0 and sum(p) == 1.
    static DensityMatrix from_spectrum(const RealVector& probabilities,
                                       const ComplexMatrix& eigenvectors);

    /// Wraps an exactly Hermitian matrix whose spectrum the caller has already
    /// checked to be non-negative with unit trace.
    static DensityMatrix from_checked(ComplexMatrix m);

    /// The pure state |psi><psi| for a (not necessarily normalized) vector.
    static DensityMatrix pure(const Eigen::VectorXcd& psi);

    /// I/d.
    static DensityMatrix maximally_mixed(Index dim);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }

private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// max_ij |m_ij - conj(m_ji)|.
double max_hermitian_asymmetry(const ComplexMatrix& m);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

/// Throws ValidationError unless `m` is square, non-empty and finite.
void require_square(const ComplexMatrix& m, const char* name);

/// Throws ValidationError unless `a` and `b` have equal square shapes.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context);

/// Spectral decomposition of a Hermitian matrix. Input is symmetrized before
/// decomposition; an asymmetry above `hermitian_tol` is rejected.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m, double hermitian_tol = 1e-8);

/// U diag(ln max(lambda_j, floor)) U^dagger.
ComplexMatrix log_density(const DensityMatrix& rho, double floor = kDefaultFloor);

/// U diag(1 / max(lambda_j, floor)) U^dagger.
ComplexMatrix floored_inverse(const DensityMatrix& rho, double floor = kDefaultFloor);

/// ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a rho).
Complex expectation(const ComplexMatrix& a, const DensityMatrix& rho);

/// Tr(a rho) without the shape check; `a` and `rho` must be the same size.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& rho);

/// Deterministic random state with smallest eigenvalue >= min_eig. The spectrum
/// of a normalized Ginibre matrix G G^dagger is shifted affinely onto the
/// simplex face above min_eig.
DensityMatrix random_density(int dim, double min_eig, std::uint64_t seed);

/// Deterministic matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_complex_matrix(int dim, std::uint64_t seed);

/// Deterministic Hermitian matrix (G + G^dagger) / 2.
ComplexMatrix random_hermitian(int dim, std::uint64_t seed);

/// Qubit operators in the basis |0> = (1,0) (excited), |1> = (0,1) (ground).
namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_+ = |0><1|
ComplexMatrix raising();
/// sigma_- = |1><0|
ComplexMatrix lowering();
}  // namespace pauli

}  // namespace entroflux
