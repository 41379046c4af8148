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

#include "threepi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "threepi/error.hpp"

namespace threepi {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

// One two-sided rotation zeroing a(p,q). J acts on the (p,q) plane with
// J[p][p] = J[q][q] = c, J[p][q] = -s*phase, J[q][p] = s*conj(phase),
// where phase = a(p,q) / |a(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const Complex phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0.
    const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Columns: A <- A * J.
    for (std::size_t r = 0; r < n; ++r) {
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = arp * c + arq * s * std::conj(phase);
        a(r, q) = -arp * s * phase + arq * c;
    }
    // Rows: A <- J^dagger * A.
    for (std::size_t col = 0; col < n; ++col) {
        const Complex apc = a(p, col);
        const Complex aqc = a(q, col);
        a(p, col) = apc * c + aqc * s * phase;
        a(q, col) = -apc * s * std::conj(phase) + aqc * c;
    }
    // The (p,q) element is annihilated by construction; pin it and keep the
    // diagonal exactly real so rounding cannot accumulate there.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    // Accumulate eigenvectors: V <- V * J.
    for (std::size_t r = 0; r < n; ++r) {
        const Complex vrp = v(r, p);
        const Complex vrq = v(r, q);
        v(r, p) = vrp * c + vrq * s * std::conj(phase);
        v(r, q) = -vrp * s * phase + vrq * c;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(errc::non_square, "hermitian_eig requires a nonempty square matrix");
    }
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_error() > 1e-12 * scale) {
        throw Error(errc::not_hermitian, "matrix is not Hermitian within 1e-12 tolerance");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = 1e-13 * (1.0 + m.frobenius_norm());

    constexpr int kMaxSweeps = 100;
    bool converged = off_diagonal_norm(a) < target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        converged = off_diagonal_norm(a) < target;
    }
    if (!converged) {
        throw Error(errc::no_convergence, "Jacobi sweep limit reached without convergence");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

double trace_norm_hermitian(const ComplexMatrix& m) {
    const EigenDecomposition eig = hermitian_eig(m);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) s += std::abs(lambda);
    return s;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    const EigenDecomposition eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -1e-10) {
            throw Error(errc::not_psd, "matrix has an eigenvalue below -1e-10");
        }
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    ComplexMatrix out(n, n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * roots[k] * std::conj(v(j, k));
            out(i, j) = sum;
        }
    return out;
}

namespace {

std::size_t qubit_bit(int n_qubits, int q) {
    return std::size_t(1) << (n_qubits - 1 - q);
}

void check_register(const ComplexMatrix& rho, int n_qubits, const std::vector<int>& qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw Error(errc::out_of_range, "qubit count out of supported range");
    }
    const std::size_t dim = std::size_t(1) << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw Error(errc::dimension_mismatch, "matrix dimension does not match 2^n_qubits");
    }
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) {
            throw Error(errc::index_out_of_range, "qubit index out of range");
        }
    }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int n_qubits,
                                const std::vector<int>& transposed) {
    check_register(rho, n_qubits, transposed);
    std::size_t mask = 0;
    for (int q : transposed) mask |= qubit_bit(n_qubits, q);

    const std::size_t dim = std::size_t(1) << n_qubits;
    ComplexMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            out(r2, c2) = rho(r, c);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            const std::vector<int>& keep) {
    if (keep.empty()) {
        throw Error(errc::empty_keep_set, "partial_trace requires at least one kept qubit");
    }
    check_register(rho, n_qubits, keep);

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const int k = static_cast<int>(kept.size());
    const std::size_t kept_dim = std::size_t(1) << k;
    const std::size_t traced_dim = std::size_t(1) << traced.size();

    // Scatter maps from compact kept/traced indices to full-register indices.
    std::vector<std::size_t> kept_scatter(kept_dim, 0);
    for (std::size_t i = 0; i < kept_dim; ++i)
        for (int a = 0; a < k; ++a)
            if (i & (std::size_t(1) << (k - 1 - a))) kept_scatter[i] |= qubit_bit(n_qubits, kept[a]);

    std::vector<std::size_t> traced_scatter(traced_dim, 0);
    for (std::size_t t = 0; t < traced_dim; ++t)
        for (std::size_t a = 0; a < traced.size(); ++a)
            if (t & (std::size_t(1) << (traced.size() - 1 - a)))
                traced_scatter[t] |= qubit_bit(n_qubits, traced[a]);

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < kept_dim; ++i)
        for (std::size_t j = 0; j < kept_dim; ++j) {
            Complex sum = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t)
                sum += rho(kept_scatter[i] | traced_scatter[t], kept_scatter[j] | traced_scatter[t]);
            out(i, j) = sum;
        }
    return out;
}

}  // namespace threepi
