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

#ifndef THREEPI_STATE_HPP
#define THREEPI_STATE_HPP

#include <vector>

#include "threepi/complex_matrix.hpp"

namespace threepi {

/// Sign of the W branch in sqrt(p)|GHZ> +/- sqrt(1-p)|W>.
enum class Sign { plus, minus };

/// Normalized n-qubit ket. Qubit 0 is the most significant bit of the
/// amplitude index, so |ijk> lives at index i*4 + j*2 + k.
class PureState {
  public:
    /// With normalize=false the amplitudes must already have unit norm
    /// within 1e-10 (not_normalized otherwise); with normalize=true any
    /// vector of norm > 1e-12 is accepted and rescaled (zero_vector
    /// otherwise). Length must be exactly 2^n_qubits (wrong_length).
    static PureState from_amplitudes(int n_qubits, std::vector<Complex> amplitudes,
                                     bool normalize = false);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const noexcept { return amps_; }

  private:
    PureState(int n_qubits, std::vector<Complex> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<Complex> amps_;
};

/// Hermitian, unit-trace 2^n x 2^n matrix with its qubit count. The
/// constructor enforces shape, Hermiticity (1e-10) and trace (1e-10);
/// positive semidefiniteness is a documented invariant checked by the
/// test-suite validator rather than on every construction.
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, ComplexMatrix matrix);

    int n_qubits() const noexcept { return n_qubits_; }
    const ComplexMatrix& matrix() const noexcept { return m_; }

  private:
    int n_qubits_;
    ComplexMatrix m_;
};

PureState ghz_state();   // (|000> + |111>)/sqrt(2)
PureState w_state();     // (|100> + |010> + |001>)/sqrt(3)
PureState bell_state();  // (|01> + |10>)/sqrt(2)

/// alpha|100> + beta|010> + gamma|001> with nonnegative real coefficients
/// satisfying alpha^2 + beta^2 + gamma^2 = 1 within 1e-10.
PureState w_class_state(double alpha, double beta, double gamma);

/// sqrt(p)|GHZ> +/- sqrt(1-p)|W>, automatically normalized (the two
/// branches are orthogonal). Requires p in [0, 1].
PureState ghz_w_superposition(double p, Sign sign);

/// Rank-one projector |psi><psi|.
DensityMatrix density_of(const PureState& psi);

/// Partial trace of a density matrix down to the kept qubits.
DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep);

struct AppliedOperator {
    std::vector<Complex> amplitudes;  // unnormalized
    double weight;                    // squared norm <phi'|phi'>
};

/// Applies a 2x2 operator to one qubit, returning the unnormalized result
/// and its weight. For a unitary operator the weight is 1 up to rounding.
AppliedOperator apply_one_qubit_operator(const PureState& psi, const ComplexMatrix& op,
                                         int qubit);

/// Relabels qubits: old qubit q becomes qubit perm[q] in the result.
/// perm must be a permutation of 0..n-1.
PureState permute_qubits(const PureState& psi, const std::vector<int>& perm);

}  // namespace threepi

#endif  // THREEPI_STATE_HPP
