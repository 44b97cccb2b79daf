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

// Test-only helpers and independent oracles. Nothing here calls into the
// matrix-function code paths it is used to check.

#include <cmath>
#include <vector>

#include "entroflux/linalg.hpp"

namespace entroflux::testing {

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexMatrix diag(std::initializer_list<double> v) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
    Index i = 0;
    for (double x : v) m(i, i) = x, ++i;
    return m;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial.
inline std::vector<double> eig2(const ComplexMatrix& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double off = std::abs(m(0, 1));
    const double mid = 0.5 * (a + d);
    const double r = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    return {mid + r, mid - r};
}

/// Shannon entropy of a probability vector.
inline double shannon(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s -= x * std::log(x);
    }
    return s;
}

/// |0><0| and |1><1| in the excited/ground convention.
inline ComplexMatrix ket0() { return diag({1.0, 0.0}); }
inline ComplexMatrix ket1() { return diag({0.0, 1.0}); }

/// |+><+|
inline ComplexMatrix plus_state() { return mat2(0.5, 0.5, 0.5, 0.5); }

}  // namespace entroflux::testing
