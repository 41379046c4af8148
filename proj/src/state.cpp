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

#include "threepi/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "threepi/error.hpp"
#include "threepi/linalg.hpp"

namespace threepi {

PureState PureState::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes,
                                     bool normalize) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw Error(errc::out_of_range, "qubit count out of supported range");
    }
    if (amplitudes.size() != (std::size_t(1) << n_qubits)) {
        throw Error(errc::wrong_length, "amplitude count must be 2^n_qubits");
    }
    for (const Complex& z : amplitudes) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(errc::not_finite, "amplitudes must be finite");
        }
    }
    double norm_sq = 0.0;
    for (const Complex& z : amplitudes) norm_sq += std::norm(z);
    if (normalize) {
        const double nrm = std::sqrt(norm_sq);
        if (nrm <= 1e-12) {
            throw Error(errc::zero_vector, "cannot normalize a (near-)zero vector");
        }
        for (Complex& z : amplitudes) z /= nrm;
    } else if (std::abs(norm_sq - 1.0) > 1e-10) {
        throw Error(errc::not_normalized, "amplitudes must have unit norm within 1e-10");
    }
    return PureState(n_qubits, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), m_(std::move(matrix)) {
    if (n_qubits_ < 1 || n_qubits_ > 30) {
        throw Error(errc::out_of_range, "qubit count out of supported range");
    }
    const std::size_t dim = std::size_t(1) << n_qubits_;
    if (m_.rows() != dim || m_.cols() != dim) {
        throw Error(errc::dimension_mismatch, "density matrix must be 2^n x 2^n");
    }
    if (m_.hermiticity_error() > 1e-10 * std::max(1.0, m_.max_abs())) {
        throw Error(errc::not_hermitian, "density matrix is not Hermitian within 1e-10");
    }
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-10) {
        throw Error(errc::not_normalized, "density matrix trace must be 1 within 1e-10");
    }
}

PureState ghz_state() {
    std::vector<Complex> amps(8, 0.0);
    amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState w_state() {
    std::vector<Complex> amps(8, 0.0);
    amps[4] = amps[2] = amps[1] = 1.0 / std::sqrt(3.0);
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState bell_state() {
    std::vector<Complex> amps(4, 0.0);
    amps[1] = amps[2] = 1.0 / std::sqrt(2.0);
    return PureState::from_amplitudes(2, std::move(amps));
}

PureState w_class_state(double alpha, double beta, double gamma) {
    if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
        throw Error(errc::out_of_range, "W-class coefficients must be nonnegative");
    }
    const double sum_sq = alpha * alpha + beta * beta + gamma * gamma;
    if (std::abs(sum_sq - 1.0) > 1e-10) {
        throw Error(errc::not_normalized,
                    "W-class coefficients must satisfy alpha^2+beta^2+gamma^2 = 1");
    }
    std::vector<Complex> amps(8, 0.0);
    amps[4] = alpha;  // |100>
    amps[2] = beta;   // |010>
    amps[1] = gamma;  // |001>
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState ghz_w_superposition(double p, Sign sign) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(errc::out_of_range, "p must lie in [0, 1]");
    }
    const double cg = std::sqrt(p) / std::sqrt(2.0);
    const double cw = (sign == Sign::plus ? 1.0 : -1.0) * std::sqrt(1.0 - p) / std::sqrt(3.0);
    std::vector<Complex> amps(8, 0.0);
    amps[0] = cg;
    amps[7] = cg;
    amps[4] = cw;
    amps[2] = cw;
    amps[1] = cw;
    return PureState::from_amplitudes(3, std::move(amps));
}

DensityMatrix density_of(const PureState& psi) {
    const std::size_t dim = psi.dim();
    ComplexMatrix m(dim, dim);
    const auto& a = psi.amplitudes();
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = a[r] * std::conj(a[c]);
    return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep) {
    ComplexMatrix m = partial_trace(rho.matrix(), rho.n_qubits(), keep);
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return DensityMatrix(static_cast<int>(kept.size()), std::move(m));
}

AppliedOperator apply_one_qubit_operator(const PureState& psi, const ComplexMatrix& op,
                                         int qubit) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw Error(errc::dimension_mismatch, "one-qubit operator must be 2x2");
    }
    if (qubit < 0 || qubit >= psi.n_qubits()) {
        throw Error(errc::index_out_of_range, "qubit index out of range");
    }
    const std::size_t dim = psi.dim();
    const std::size_t bit = std::size_t(1) << (psi.n_qubits() - 1 - qubit);
    const auto& in = psi.amplitudes();
    AppliedOperator out{std::vector<Complex>(dim), 0.0};
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::size_t row = (idx & bit) ? 1 : 0;
        const Complex v = op(row, 0) * in[idx & ~bit] + op(row, 1) * in[idx | bit];
        out.amplitudes[idx] = v;
        out.weight += std::norm(v);
    }
    return out;
}

PureState permute_qubits(const PureState& psi, const std::vector<int>& perm) {
    const int n = psi.n_qubits();
    if (perm.size() != static_cast<std::size_t>(n)) {
        throw Error(errc::wrong_length, "permutation length must equal qubit count");
    }
    std::vector<int> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]++) {
            throw Error(errc::index_out_of_range, "not a permutation of 0..n-1");
        }
    }
    const std::size_t dim = psi.dim();
    std::vector<Complex> amps(dim, 0.0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t target = 0;
        for (int q = 0; q < n; ++q) {
            if (idx & (std::size_t(1) << (n - 1 - q)))
                target |= std::size_t(1) << (n - 1 - perm[q]);
        }
        amps[target] = psi.amplitudes()[idx];
    }
    return PureState::from_amplitudes(n, std::move(amps));
}

}  // namespace threepi
