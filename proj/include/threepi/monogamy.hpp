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

#ifndef THREEPI_MONOGAMY_HPP
#define THREEPI_MONOGAMY_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "threepi/measures.hpp"
#include "threepi/state.hpp"

namespace threepi {

/// One focus row of a monogamy report: squared measure of the focus
/// against the rest, against each partner, and the residual slack.
struct FocusReport {
    double sq_focus_rest = 0.0;
    double sq_pair_first = 0.0;
    double sq_pair_second = 0.0;
    double slack = 0.0;
};

/// Per-focus monogamy data for one three-qubit pure state, together with
/// the clamped residuals, their average, and the three-tangle.
struct MonogamyReport {
    std::array<FocusReport, 3> focus;  // indexed by Focus
    double pi_a = 0.0;
    double pi_b = 0.0;
    double pi_c = 0.0;
    double pi_abc = 0.0;
    double tau_abc = 0.0;
};

/// Negativity-based report. The squared-negativity monogamy inequality is
/// a theorem for pure three-qubit states, so a slack below -1e-9 raises
/// monogamy_violation: it flags an implementation fault, not physics.
MonogamyReport ckw_negativity_report(const PureState& psi);

/// Concurrence-based report of the same shape. slack for focus A is the
/// three-tangle by definition.
MonogamyReport ckw_concurrence_report(const PureState& psi);

enum class SloccClass { full_product, a_bc, b_ac, c_ab, w, ghz };

std::string_view slocc_label(SloccClass c);  // "A-B-C", "A-BC", ..., "W", "GHZ"

/// Six-way SLOCC classification of a pure three-qubit state. A reduced
/// single-qubit state counts as pure when its smaller eigenvalue is below
/// tol. Three pure reductions: fully product. Exactly one: the matching
/// bipartite class. None: GHZ when the three-tangle exceeds tol, else W.
/// Exactly two pure reductions cannot occur for a valid state and raises
/// ambiguous_class.
SloccClass classify_slocc(const PureState& psi, double tol = 1e-9);

struct PovmTrialResult {
    double avg_pi = 0.0;     // p1 pi(phi1) + p2 pi(phi2)
    double pi_before = 0.0;  // pi(psi)
    bool pass = false;       // avg_pi <= pi_before + 1e-9
};

/// Draws a random one-qubit POVM pair (target qubit and elements seeded),
/// applies both elements, and compares the weighted average three-pi with
/// the input value. Branches with weight below 1e-12 contribute zero.
PovmTrialResult povm_monotonicity_trial(const PureState& psi, std::uint64_t seed);

struct LuTrialResult {
    double pi_after = 0.0;
    double pi_before = 0.0;
};

/// Applies seeded Haar local unitaries U_A (x) U_B (x) U_C and reports
/// three-pi before and after; the two agree within 1e-8 (asserted by
/// callers, not here).
LuTrialResult lu_invariance_trial(const PureState& psi, std::uint64_t seed);

}  // namespace threepi

#endif  // THREEPI_MONOGAMY_HPP
