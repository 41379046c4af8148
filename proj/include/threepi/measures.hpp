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

#ifndef THREEPI_MEASURES_HPP
#define THREEPI_MEASURES_HPP

#include <vector>

#include "threepi/state.hpp"

namespace threepi {

/// Focus qubit of a three-qubit monogamy inequality: A, B, C map to
/// qubits 0, 1, 2.
enum class Focus { a = 0, b = 1, c = 2 };

/// Negativity across the cut (part | complement), normalized so Bell
/// states score 1: ||rho^{T_part}||_1 - 1, clamped at zero. part must be
/// a nonempty proper subset of the register.
double negativity(const DensityMatrix& rho, const std::vector<int>& part);

/// Pure-state bipartite concurrence sqrt(2 (1 - Tr rho_part^2)).
double concurrence_pure_bipartition(const PureState& psi, const std::vector<int>& part);

/// Wootters concurrence of a two-qubit density matrix, computed from the
/// spectrum of the Hermitian form sqrt(rho) rho~ sqrt(rho) (same spectrum
/// as rho rho~). Eigenvalues below 1e-12 are treated as exact zeros:
/// rank-deficient inputs otherwise leak sqrt(noise) ~ 1e-8 into the value.
double concurrence_two_qubit(const DensityMatrix& rho);

/// Residual of the squared-concurrence monogamy inequality with focus A.
double three_tangle(const PureState& psi);

/// Same residual evaluated with an arbitrary focus; agrees with
/// three_tangle for every focus (a theorem, exercised in tests).
double three_tangle_focus(const PureState& psi, Focus focus);

/// Raw squared negativities of one focus against the rest and against each
/// partner pair; slack() is the monogamy residual before clamping.
struct FocusNegativities {
    double sq_focus_rest = 0.0;
    double sq_pair_first = 0.0;   // partner with the smaller qubit index
    double sq_pair_second = 0.0;
    double slack() const { return sq_focus_rest - sq_pair_first - sq_pair_second; }
};
FocusNegativities negativity_focus_terms(const PureState& psi, int focus);

/// pi_F = N^2_{F(rest)} - N^2_{F p1} - N^2_{F p2}, clamped at zero.
double residual_pi(const PureState& psi, Focus focus);

/// Average of the three focus residuals; permutation invariant.
double three_pi(const PureState& psi);

/// n-qubit residual N^2_{focus(rest)} - sum over partners of the pairwise
/// squared negativity. Requires n >= 3; equals residual_pi at n = 3.
double n_qubit_negativity_residual(const PureState& psi, int focus);

// Closed forms for alpha|100> + beta|010> + gamma|001> and for GHZ/W
// superpositions; they serve as independent oracles for the numerical
// routes above.

struct WClassSquaredNegativities {
    double ab = 0.0;
    double ac = 0.0;
    double a_bc = 0.0;
};
WClassSquaredNegativities w_class_squared_negativities(double alpha, double beta, double gamma);

double three_pi_w_closed_form(double alpha, double beta, double gamma);

/// tau for sqrt(p)|GHZ> +/- sqrt(1-p)|W>: |p^2 +/- (8 sqrt 6 / 9) sqrt(p (1-p)^3)|.
double three_tangle_ghzw_closed_form(double p, Sign sign);

}  // namespace threepi

#endif  // THREEPI_MEASURES_HPP
