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

#include "threepi/monogamy.hpp"

#include <algorithm>
#include <cmath>

#include "threepi/error.hpp"
#include "threepi/linalg.hpp"
#include "threepi/random.hpp"

namespace threepi {

namespace {

void require_three_qubits(const PureState& psi) {
    if (psi.n_qubits() != 3) {
        throw Error(errc::not_three_qubit, "operation requires a three-qubit pure state");
    }
}

}  // namespace

MonogamyReport ckw_negativity_report(const PureState& psi) {
    require_three_qubits(psi);
    MonogamyReport report;
    std::array<double, 3> pis{};
    for (int f = 0; f < 3; ++f) {
        const FocusNegativities terms = negativity_focus_terms(psi, f);
        FocusReport& row = report.focus[static_cast<std::size_t>(f)];
        row.sq_focus_rest = terms.sq_focus_rest;
        row.sq_pair_first = terms.sq_pair_first;
        row.sq_pair_second = terms.sq_pair_second;
        row.slack = terms.slack();
        if (row.slack < -1e-9) {
            throw Error(errc::monogamy_violation,
                        "negativity monogamy slack below -1e-9 on a pure state");
        }
        pis[static_cast<std::size_t>(f)] = std::max(row.slack, 0.0);
    }
    report.pi_a = pis[0];
    report.pi_b = pis[1];
    report.pi_c = pis[2];
    report.pi_abc = (pis[0] + pis[1] + pis[2]) / 3.0;
    report.tau_abc = three_tangle(psi);
    return report;
}

MonogamyReport ckw_concurrence_report(const PureState& psi) {
    require_three_qubits(psi);
    const DensityMatrix rho = density_of(psi);
    MonogamyReport report;
    std::array<double, 3> slacks{};
    for (int f = 0; f < 3; ++f) {
        FocusReport& row = report.focus[static_cast<std::size_t>(f)];
        const double c_rest = concurrence_pure_bipartition(psi, {f});
        row.sq_focus_rest = c_rest * c_rest;
        int slot = 0;
        for (int partner = 0; partner < 3; ++partner) {
            if (partner == f) continue;
            std::vector<int> keep{std::min(f, partner), std::max(f, partner)};
            const double c = concurrence_two_qubit(reduced_density(rho, keep));
            (slot++ == 0 ? row.sq_pair_first : row.sq_pair_second) = c * c;
        }
        row.slack = row.sq_focus_rest - row.sq_pair_first - row.sq_pair_second;
        slacks[static_cast<std::size_t>(f)] = std::max(row.slack, 0.0);
    }
    report.pi_a = slacks[0];
    report.pi_b = slacks[1];
    report.pi_c = slacks[2];
    report.pi_abc = (slacks[0] + slacks[1] + slacks[2]) / 3.0;
    report.tau_abc = three_tangle(psi);
    return report;
}

std::string_view slocc_label(SloccClass c) {
    switch (c) {
        case SloccClass::full_product: return "A-B-C";
        case SloccClass::a_bc: return "A-BC";
        case SloccClass::b_ac: return "B-AC";
        case SloccClass::c_ab: return "C-AB";
        case SloccClass::w: return "W";
        case SloccClass::ghz: return "GHZ";
    }
    return "?";
}

SloccClass classify_slocc(const PureState& psi, double tol) {
    require_three_qubits(psi);
    const DensityMatrix rho = density_of(psi);

    std::array<bool, 3> pure{};
    int pure_count = 0;
    for (int q = 0; q < 3; ++q) {
        const ComplexMatrix reduced = partial_trace(rho.matrix(), 3, {q});
        const auto eig = hermitian_eig(reduced);
        const double min_eig = std::max(eig.eigenvalues.front(), 0.0);
        pure[static_cast<std::size_t>(q)] = min_eig < tol;
        pure_count += pure[static_cast<std::size_t>(q)] ? 1 : 0;
    }

    if (pure_count == 3) return SloccClass::full_product;
    if (pure_count == 2) {
        throw Error(errc::ambiguous_class,
                    "exactly two pure reduced states: numerical breakdown");
    }
    if (pure_count == 1) {
        if (pure[0]) return SloccClass::a_bc;
        if (pure[1]) return SloccClass::b_ac;
        return SloccClass::c_ab;
    }
    return three_tangle(psi) > tol ? SloccClass::ghz : SloccClass::w;
}

PovmTrialResult povm_monotonicity_trial(const PureState& psi, std::uint64_t seed) {
    require_three_qubits(psi);
    Rng rng(seed);
    const int target = rng.uniform_int(3);
    const PovmPair povm = random_povm_pair(rng, target);

    PovmTrialResult result;
    result.pi_before = three_pi(psi);

    const ComplexMatrix elements[2] = {povm.element1(), povm.element2()};
    for (const ComplexMatrix& element : elements) {
        AppliedOperator applied = apply_one_qubit_operator(psi, element, target);
        if (applied.weight < 1e-12) continue;  // degenerate branch contributes zero
        PureState branch = PureState::from_amplitudes(3, std::move(applied.amplitudes),
                                                      /*normalize=*/true);
        result.avg_pi += applied.weight * three_pi(branch);
    }
    result.pass = result.avg_pi <= result.pi_before + 1e-9;
    return result;
}

LuTrialResult lu_invariance_trial(const PureState& psi, std::uint64_t seed) {
    require_three_qubits(psi);
    const auto unitaries = random_local_unitaries(seed);

    LuTrialResult result;
    result.pi_before = three_pi(psi);
    PureState rotated = psi;
    for (int q = 0; q < 3; ++q) {
        AppliedOperator applied =
            apply_one_qubit_operator(rotated, unitaries[static_cast<std::size_t>(q)], q);
        rotated = PureState::from_amplitudes(3, std::move(applied.amplitudes),
                                             /*normalize=*/true);
    }
    result.pi_after = three_pi(rotated);
    return result;
}

}  // namespace threepi
