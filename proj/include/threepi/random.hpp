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

#ifndef THREEPI_RANDOM_HPP
#define THREEPI_RANDOM_HPP

#include <array>
#include <cstdint>
#include <random>

#include "threepi/complex_matrix.hpp"
#include "threepi/state.hpp"

namespace threepi {

/// Seedable generator used by every randomized operation: mt19937_64 for
/// the raw 64-bit stream, with uniform and Gaussian variates derived in
/// project code (53-bit mantissa mapping, Box-Muller) so that a seed
/// replays bit-identically on a given platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the second variate of each pair is
    /// cached, so draws come in deterministic order.
    double normal();

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return Complex(re, im);
    }

    /// Uniform integer in [0, bound). Modulo bias is below 2^-59 for the
    /// small bounds used here.
    int uniform_int(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Fixed seed-splitting rule for campaigns: combines a campaign seed with a
/// sample index so per-sample streams are independent of evaluation order.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random pure state: normalized vector of iid standard complex
/// Gaussians. Supports 1 <= n_qubits <= 10.
PureState haar_random_pure(int n_qubits, std::uint64_t seed);
PureState haar_random_pure(int n_qubits, Rng& rng);

/// rho = G G^dagger / Tr(G G^dagger) with G a 2^n x rank complex Gaussian
/// matrix. rank = 1 yields pure states; rank = 2^n the Hilbert-Schmidt
/// ensemble.
DensityMatrix random_density(int n_qubits, int rank, std::uint64_t seed);
DensityMatrix random_density(int n_qubits, int rank, Rng& rng);

/// Haar-distributed 2x2 unitary: QR of a complex Gaussian matrix with the
/// R diagonal fixed positive (Gram-Schmidt with reorthogonalization).
ComplexMatrix haar_unitary_2x2(Rng& rng);

/// Independent Haar 2x2 unitaries for qubits A, B, C.
std::array<ComplexMatrix, 3> random_local_unitaries(std::uint64_t seed);
std::array<ComplexMatrix, 3> random_local_unitaries(Rng& rng);

/// Two-element POVM {A1, A2} on one qubit with A1 = u1 diag(a,b) v and
/// A2 = u2 diag(sqrt(1-a^2), sqrt(1-b^2)) v, so completeness
/// A1^dag A1 + A2^dag A2 = I holds by construction.
struct PovmPair {
    double a = 0.0;
    double b = 0.0;
    ComplexMatrix u1, u2, v;
    int target_qubit = 0;

    ComplexMatrix element1() const;
    ComplexMatrix element2() const;
};

PovmPair random_povm_pair(std::uint64_t seed, int target_qubit);
PovmPair random_povm_pair(Rng& rng, int target_qubit);

}  // namespace threepi

#endif  // THREEPI_RANDOM_HPP
