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

#include "entroflux/linalg.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace entroflux {

namespace {

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Maps the spectrum of f into a matrix U diag(f(lambda)) U^dagger.
template <typename F>
ComplexMatrix spectral_map(const SpectralDecomposition& sd, F&& f) {
    const Index d = sd.eigenvalues.size();
    RealVector mapped(d);
    for (Index j = 0; j < d; ++j) mapped(j) = f(sd.eigenvalues(j));
    return sd.eigenvectors * mapped.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double max_hermitian_asymmetry(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return INFINITY;
    return max_abs(m - m.adjoint());
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* name) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError(std::string(name) + " must be a non-empty square matrix, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) {
        throw ValidationError(std::string(name) + " has non-finite entries");
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* context) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw ValidationError(std::string(context) + ": dimension mismatch (" +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const StateTolerances& tol) : m_(std::move(m)) {
    require_square(m_, "density matrix");
    const double asym = max_hermitian_asymmetry(m_);
    if (asym > tol.hermitian) {
        throw ValidationError("density matrix is not Hermitian (max asymmetry " +
                              format_value(asym) + ")");
    }
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw ValidationError("density matrix trace is " + format_value(tr) + ", expected 1");
    }
    const ComplexMatrix sym = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol.positivity) {
        throw ValidationError("density matrix has negative eigenvalue " + format_value(min_eig));
    }
}

DensityMatrix DensityMatrix::from_checked(ComplexMatrix m) {
    return DensityMatrix(Trusted{}, std::move(m));
}

DensityMatrix DensityMatrix::from_spectrum(const RealVector& probabilities,
                                           const ComplexMatrix& eigenvectors) {
    ComplexMatrix m =
        eigenvectors * probabilities.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
    // restore exact Hermiticity lost to rounding in the product
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(Trusted{}, std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double n = psi.norm();
    if (psi.size() == 0 || !(n > 0.0) || !std::isfinite(n)) {
        throw ValidationError("pure state vector must be non-zero and finite");
    }
    const Eigen::VectorXcd v = psi / n;
    return DensityMatrix(Trusted{}, v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
    if (dim < 1) throw ValidationError("dimension must be positive");
    return DensityMatrix(Trusted{},
                         ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
    require_square(m, "hermitian_eig input");
    const double asym = max_hermitian_asymmetry(m);
    if (asym > hermitian_tol) {
        throw ValidationError("hermitian_eig: input is not Hermitian (max asymmetry " +
                              format_value(asym) + ")");
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("hermitian_eig: eigensolver did not converge");
    }
    // Eigen returns ascending order
    SpectralDecomposition sd;
    sd.eigenvalues = solver.eigenvalues().reverse();
    sd.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return sd;
}

ComplexMatrix log_density(const DensityMatrix& rho, double floor) {
    if (!(floor > 0.0)) throw ValidationError("log_density: floor must be positive");
    return spectral_map(hermitian_eig(rho.matrix()),
                        [floor](double l) { return std::log(std::max(l, floor)); });
}

ComplexMatrix floored_inverse(const DensityMatrix& rho, double floor) {
    if (!(floor > 0.0)) throw ValidationError("floored_inverse: floor must be positive");
    return spectral_map(hermitian_eig(rho.matrix()),
                        [floor](double l) { return 1.0 / std::max(l, floor); });
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

Complex expectation(const ComplexMatrix& a, const DensityMatrix& rho) {
    require_same_dim(a, rho.matrix(), "expectation");
    return trace_product(a, rho.matrix());
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& rho) {
    // Tr(a rho) = sum_ij a_ij rho_ji
    return (a.array() * rho.transpose().array()).sum();
}

ComplexMatrix random_complex_matrix(int dim, std::uint64_t seed) {
    if (dim < 1) throw ValidationError("random_complex_matrix: dimension must be positive");
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    const ComplexMatrix g = random_complex_matrix(dim, seed);
    return 0.5 * (g + g.adjoint());
}

DensityMatrix random_density(int dim, double min_eig, std::uint64_t seed) {
    if (dim < 2) throw ValidationError("random_density: dimension must be at least 2");
    if (!(min_eig >= 0.0) || !(min_eig * dim < 1.0)) {
        throw ValidationError("random_density: min_eig " + format_value(min_eig) +
                              " infeasible for d=" + std::to_string(dim) +
                              " (need 0 <= min_eig < 1/d)");
    }
    const ComplexMatrix g = random_complex_matrix(dim, seed);
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    const SpectralDecomposition sd = hermitian_eig(w);
    RealVector p = sd.eigenvalues.cwiseMax(0.0);
    p /= p.sum();
    p = (1.0 - dim * min_eig) * p.array() + min_eig;
    return DensityMatrix::from_spectrum(p, sd.eigenvectors);
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix raising() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    return m;
}

ComplexMatrix lowering() {
    ComplexMatrix m(2, 2);
    m << 0, 0, 1, 0;
    return m;
}

}  // namespace pauli

}  // namespace entroflux
