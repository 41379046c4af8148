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

#include "threepi/measures.hpp"

#include <algorithm>
#include <cmath>

#include "threepi/error.hpp"
#include "threepi/linalg.hpp"

namespace threepi {

namespace {

// Mathematically nonnegative quantities may round slightly below zero.
// Anything past -1e-9 signals a logic fault, not float noise.
double clamp_nonneg(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v < -1e-9) {
        throw Error(errc::internal, std::string(what) + " came out below -1e-9");
    }
    return 0.0;
}

void check_proper_part(int n_qubits, const std::vector<int>& part) {
    if (part.empty()) {
        throw Error(errc::empty_keep_set, "bipartition subset must be nonempty");
    }
    std::vector<int> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() >= static_cast<std::size_t>(n_qubits)) {
        throw Error(errc::out_of_range, "bipartition subset must be proper");
    }
    for (int q : sorted) {
        if (q < 0 || q >= n_qubits) {
            throw Error(errc::index_out_of_range, "qubit index out of range");
        }
    }
}

double purity(const ComplexMatrix& rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (const Complex& z : rho.entries()) s += std::norm(z);
    return s;
}

// Pairwise negativity of the reduced state of {focus, partner}.
double pairwise_negativity(const DensityMatrix& rho, int focus, int partner) {
    std::vector<int> keep{std::min(focus, partner), std::max(focus, partner)};
    const ComplexMatrix pair = partial_trace(rho.matrix(), rho.n_qubits(), keep);
    const int part_index = focus < partner ? 0 : 1;
    const ComplexMatrix pt = partial_transpose(pair, 2, {part_index});
    return clamp_nonneg(trace_norm_hermitian(pt) - 1.0, "pairwise negativity");
}

}  // namespace

double negativity(const DensityMatrix& rho, const std::vector<int>& part) {
    check_proper_part(rho.n_qubits(), part);
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.n_qubits(), part);
    return clamp_nonneg(trace_norm_hermitian(pt) - 1.0, "negativity");
}

double concurrence_pure_bipartition(const PureState& psi, const std::vector<int>& part) {
    check_proper_part(psi.n_qubits(), part);
    const ComplexMatrix reduced = partial_trace(density_of(psi).matrix(), psi.n_qubits(), part);
    return std::sqrt(clamp_nonneg(2.0 * (1.0 - purity(reduced)), "squared concurrence"));
}

double concurrence_two_qubit(const DensityMatrix& rho) {
    if (rho.n_qubits() != 2) {
        throw Error(errc::not_two_qubit, "Wootters concurrence requires a two-qubit state");
    }
    static const ComplexMatrix spin_flip = [] {
        const ComplexMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
        return kron(sy, sy);
    }();

    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix tilde = spin_flip * m.conjugate() * spin_flip;
    const ComplexMatrix root = matrix_sqrt_psd(m);
    ComplexMatrix h = root * tilde * root;
    // Symmetrize away product rounding before the Hermitian solver.
    h = Complex(0.5, 0.0) * (h + h.adjoint());

    auto eig = hermitian_eig(h);
    double lambda_max = 0.0;
    for (double lambda : eig.eigenvalues) lambda_max = std::max(lambda_max, lambda);
    // Floor: spectra here are often rank-deficient; sqrt of eigenvalue
    // noise would otherwise contribute ~1e-8 to the concurrence.
    const double floor = 1e-12 * std::max(1.0, lambda_max);
    std::vector<double> roots;
    roots.reserve(4);
    for (double lambda : eig.eigenvalues) roots.push_back(lambda <= floor ? 0.0 : std::sqrt(lambda));
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

namespace {

double tangle_with_focus(const PureState& psi, int focus) {
    if (psi.n_qubits() != 3) {
        throw Error(errc::not_three_qubit, "three-tangle requires a three-qubit state");
    }
    const DensityMatrix rho = density_of(psi);
    const ComplexMatrix reduced = partial_trace(rho.matrix(), 3, {focus});
    const double c_sq_rest = clamp_nonneg(2.0 * (1.0 - purity(reduced)), "squared concurrence");

    double c_sq_pairs = 0.0;
    for (int partner = 0; partner < 3; ++partner) {
        if (partner == focus) continue;
        std::vector<int> keep{std::min(focus, partner), std::max(focus, partner)};
        const DensityMatrix pair = reduced_density(rho, keep);
        const double c = concurrence_two_qubit(pair);
        c_sq_pairs += c * c;
    }
    return clamp_nonneg(c_sq_rest - c_sq_pairs, "three-tangle");
}

}  // namespace

double three_tangle(const PureState& psi) { return tangle_with_focus(psi, 0); }

double three_tangle_focus(const PureState& psi, Focus focus) {
    return tangle_with_focus(psi, static_cast<int>(focus));
}

FocusNegativities negativity_focus_terms(const PureState& psi, int focus) {
    if (psi.n_qubits() != 3) {
        throw Error(errc::not_three_qubit, "focus residual requires a three-qubit state");
    }
    if (focus < 0 || focus > 2) {
        throw Error(errc::index_out_of_range, "focus must be 0, 1, or 2");
    }
    const DensityMatrix rho = density_of(psi);
    FocusNegativities terms;
    const double n_rest = negativity(rho, {focus});
    terms.sq_focus_rest = n_rest * n_rest;

    int slot = 0;
    for (int partner = 0; partner < 3; ++partner) {
        if (partner == focus) continue;
        const double n = pairwise_negativity(rho, focus, partner);
        (slot++ == 0 ? terms.sq_pair_first : terms.sq_pair_second) = n * n;
    }
    return terms;
}

double residual_pi(const PureState& psi, Focus focus) {
    return clamp_nonneg(negativity_focus_terms(psi, static_cast<int>(focus)).slack(),
                        "focus residual");
}

double three_pi(const PureState& psi) {
    return (residual_pi(psi, Focus::a) + residual_pi(psi, Focus::b) +
            residual_pi(psi, Focus::c)) /
           3.0;
}

double n_qubit_negativity_residual(const PureState& psi, int focus) {
    const int n = psi.n_qubits();
    if (n < 3) {
        throw Error(errc::too_few_qubits, "the residual needs at least three qubits");
    }
    if (focus < 0 || focus >= n) {
        throw Error(errc::index_out_of_range, "focus qubit out of range");
    }
    const DensityMatrix rho = density_of(psi);
    const double n_rest = negativity(rho, {focus});
    double residual = n_rest * n_rest;
    for (int partner = 0; partner < n; ++partner) {
        if (partner == focus) continue;
        const double np = pairwise_negativity(rho, focus, partner);
        residual -= np * np;
    }
    return clamp_nonneg(residual, "n-qubit residual");
}

namespace {

void check_simplex(double alpha, double beta, double gamma) {
    const double sum_sq = alpha * alpha + beta * beta + gamma * gamma;
    if (std::abs(sum_sq - 1.0) > 1e-10) {
        throw Error(errc::not_normalized, "coefficients must satisfy a^2+b^2+g^2 = 1");
    }
}

}  // namespace

WClassSquaredNegativities w_class_squared_negativities(double alpha, double beta, double gamma) {
    check_simplex(alpha, beta, gamma);
    const double a2 = alpha * alpha, b2 = beta * beta, g2 = gamma * gamma;
    WClassSquaredNegativities out;
    out.ab = 4.0 * a2 * b2 + 2.0 * g2 * g2 - 2.0 * g2 * std::sqrt(g2 * g2 + 4.0 * a2 * b2);
    out.ac = 4.0 * a2 * g2 + 2.0 * b2 * b2 - 2.0 * b2 * std::sqrt(b2 * b2 + 4.0 * a2 * g2);
    out.a_bc = 4.0 * a2 * (b2 + g2);
    return out;
}

double three_pi_w_closed_form(double alpha, double beta, double gamma) {
    check_simplex(alpha, beta, gamma);
    const double a2 = alpha * alpha, b2 = beta * beta, g2 = gamma * gamma;
    return (4.0 / 3.0) * (a2 * std::sqrt(a2 * a2 + 4.0 * b2 * g2) +
                          b2 * std::sqrt(b2 * b2 + 4.0 * a2 * g2) +
                          g2 * std::sqrt(g2 * g2 + 4.0 * a2 * b2) - a2 * a2 - b2 * b2 - g2 * g2);
}

double three_tangle_ghzw_closed_form(double p, Sign sign) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(errc::out_of_range, "p must lie in [0, 1]");
    }
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    const double cross = (8.0 * std::sqrt(6.0) / 9.0) * std::sqrt(p * (1.0 - p) * (1.0 - p) * (1.0 - p));
    return std::abs(p * p + s * cross);
}

}  // namespace threepi
