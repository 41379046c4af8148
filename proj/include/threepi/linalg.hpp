// Copyright 2026 The threepi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef THREEPI_LINALG_HPP
#define THREEPI_LINALG_HPP

#include <vector>

#include "threepi/complex_matrix.hpp"

namespace threepi {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // unit-norm columns, eigenvectors[:,k] <-> eigenvalues[k]
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Deterministic for identical input. The input must be square
/// and Hermitian within 1e-12 * max(1, max|entry|); convergence requires
/// the off-diagonal Frobenius norm to fall below 1e-13 * (1 + ||M||_F)
/// within 100 sweeps, otherwise no_convergence is thrown.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix. Every trace
/// norm needed here (partial transposes of densities, R R^dagger products)
/// is of a Hermitian matrix, so no general SVD is carried.
double trace_norm_hermitian(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are treated as zero; anything below -1e-10 throws not_psd.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Partial transpose over the given qubits of a 2^n x 2^n matrix. A pure
/// entry permutation, exact in floating point. Qubit 0 is the most
/// significant bit of the basis index.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int n_qubits,
                                const std::vector<int>& transposed);

/// Partial trace keeping the listed qubits (result dimension 2^|keep|,
/// kept qubits in ascending original order). Preserves trace and
/// Hermiticity exactly up to summation rounding.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            const std::vector<int>& keep);

}  // namespace threepi

#endif  // THREEPI_LINALG_HPP
