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

#include "threepi/random.hpp"

#include <cmath>
#include <numbers>

#include "threepi/error.hpp"

namespace threepi {

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 of (seed XOR golden-ratio multiple of index+1).
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

PureState haar_random_pure(int n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_pure(n_qubits, rng);
}

PureState haar_random_pure(int n_qubits, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 10) {
        throw Error(errc::out_of_range, "haar_random_pure supports 1..10 qubits");
    }
    std::vector<Complex> amps(std::size_t(1) << n_qubits);
    for (Complex& z : amps) z = rng.complex_normal();
    return PureState::from_amplitudes(n_qubits, std::move(amps), /*normalize=*/true);
}

DensityMatrix random_density(int n_qubits, int rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(n_qubits, rank, rng);
}

DensityMatrix random_density(int n_qubits, int rank, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 10) {
        throw Error(errc::out_of_range, "random_density supports 1..10 qubits");
    }
    const std::size_t dim = std::size_t(1) << n_qubits;
    if (rank < 1 || static_cast<std::size_t>(rank) > dim) {
        throw Error(errc::out_of_range, "rank must lie in [1, 2^n]");
    }
    ComplexMatrix g(dim, static_cast<std::size_t>(rank));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(rank); ++c)
            g(r, c) = rng.complex_normal();

    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    w *= Complex(1.0 / tr, 0.0);
    return DensityMatrix(n_qubits, std::move(w));
}

ComplexMatrix haar_unitary_2x2(Rng& rng) {
    while (true) {
        Complex x0 = rng.complex_normal(), x1 = rng.complex_normal();
        Complex y0 = rng.complex_normal(), y1 = rng.complex_normal();

        const double nx = std::sqrt(std::norm(x0) + std::norm(x1));
        if (nx < 1e-12) continue;
        x0 /= nx;
        x1 /= nx;

        // Two orthogonalization passes keep the second column orthogonal
        // even for poorly conditioned draws.
        for (int pass = 0; pass < 2; ++pass) {
            const Complex proj = std::conj(x0) * y0 + std::conj(x1) * y1;
            y0 -= proj * x0;
            y1 -= proj * x1;
        }
        const double ny = std::sqrt(std::norm(y0) + std::norm(y1));
        if (ny < 1e-12) continue;
        y0 /= ny;
        y1 /= ny;

        return ComplexMatrix{{x0, y0}, {x1, y1}};
    }
}

std::array<ComplexMatrix, 3> random_local_unitaries(std::uint64_t seed) {
    Rng rng(seed);
    return random_local_unitaries(rng);
}

std::array<ComplexMatrix, 3> random_local_unitaries(Rng& rng) {
    std::array<ComplexMatrix, 3> out;
    for (auto& u : out) u = haar_unitary_2x2(rng);
    return out;
}

ComplexMatrix PovmPair::element1() const {
    ComplexMatrix d{{Complex(a, 0.0), 0.0}, {0.0, Complex(b, 0.0)}};
    return u1 * d * v;
}

ComplexMatrix PovmPair::element2() const {
    ComplexMatrix d{{Complex(std::sqrt(1.0 - a * a), 0.0), 0.0},
                    {0.0, Complex(std::sqrt(1.0 - b * b), 0.0)}};
    return u2 * d * v;
}

PovmPair random_povm_pair(std::uint64_t seed, int target_qubit) {
    Rng rng(seed);
    return random_povm_pair(rng, target_qubit);
}

PovmPair random_povm_pair(Rng& rng, int target_qubit) {
    if (target_qubit < 0 || target_qubit >= 3) {
        throw Error(errc::index_out_of_range, "target qubit must be 0, 1, or 2");
    }
    PovmPair pair;
    pair.a = rng.uniform01();
    pair.b = rng.uniform01();
    pair.u1 = haar_unitary_2x2(rng);
    pair.u2 = haar_unitary_2x2(rng);
    pair.v = haar_unitary_2x2(rng);
    pair.target_qubit = target_qubit;
    return pair;
}

}  // namespace threepi
