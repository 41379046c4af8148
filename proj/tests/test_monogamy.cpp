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

#include <cmath>

#include <doctest.h>

#include "test_support.hpp"
#include "threepi/error.hpp"
#include "threepi/monogamy.hpp"
#include "threepi/random.hpp"

using namespace threepi;
namespace tt = threepi::test;

namespace {

PureState product_000() {
    std::vector<Complex> amps(8, 0.0);
    amps[0] = 1.0;
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState bell_times_zero() {
    std::vector<Complex> amps(8, 0.0);
    amps[0] = amps[6] = 1.0 / std::sqrt(2.0);
    return PureState::from_amplitudes(3, std::move(amps));
}

PureState zero_times_bell() {
    std::vector<Complex> amps(8, 0.0);
    amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
    return PureState::from_amplitudes(3, std::move(amps));
}

/// Random W-class state with every coefficient at least `floor`.
PureState random_w_class(Rng& rng, double floor, double* alpha_out = nullptr) {
    for (;;) {
        double v[3];
        double norm_sq = 0.0;
        for (double& x : v) {
            x = std::abs(rng.normal());
            norm_sq += x * x;
        }
        const double nrm = std::sqrt(norm_sq);
        v[0] /= nrm;
        v[1] /= nrm;
        v[2] /= nrm;
        if (v[0] < floor || v[1] < floor || v[2] < floor) continue;
        if (alpha_out) *alpha_out = v[0];
        return w_class_state(v[0], v[1], v[2]);
    }
}

const double kPiW = 4.0 * (std::sqrt(5.0) - 1.0) / 9.0;

}  // namespace

TEST_CASE("ckw_negativity_report: fixture values") {
    const MonogamyReport zeros = ckw_negativity_report(product_000());
    for (const auto& row : zeros.focus) CHECK(std::abs(row.slack) < 1e-12);
    CHECK(zeros.pi_abc == 0.0);
    CHECK(zeros.tau_abc == 0.0);

    const MonogamyReport w = ckw_negativity_report(w_state());
    CHECK(std::abs(w.focus[0].slack - kPiW) < 1e-9);
    CHECK(w.focus[0].slack > 1e-3);  // strict inequality for the W class
    CHECK(std::abs(w.pi_abc - kPiW) < 1e-9);
    CHECK(w.tau_abc < 1e-10);

    const MonogamyReport equality = ckw_negativity_report(bell_times_zero());
    CHECK(std::abs(equality.focus[0].slack) < 1e-9);
    CHECK(std::abs(equality.focus[1].slack) < 1e-9);
    CHECK(std::abs(equality.focus[2].slack) < 1e-9);

    CHECK(tt::thrown_code([] { ckw_negativity_report(bell_state()); }) ==
          errc::not_three_qubit);
}

TEST_CASE("ckw_negativity_report: invariants on random states") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const MonogamyReport r = ckw_negativity_report(haar_random_pure(3, rng));
        for (const auto& row : r.focus) CHECK(row.slack >= -1e-9);
        CHECK(r.pi_abc == (r.pi_a + r.pi_b + r.pi_c) / 3.0);
        CHECK(r.pi_abc >= r.tau_abc - 1e-9);
    }
}

TEST_CASE("ckw_concurrence_report: fixture values and tangle identity") {
    const MonogamyReport ghz = ckw_concurrence_report(ghz_state());
    CHECK(std::abs(ghz.focus[0].slack - 1.0) < 1e-9);

    const MonogamyReport w = ckw_concurrence_report(w_state());
    CHECK(std::abs(w.focus[0].slack) < 1e-9);  // equality class for concurrence

    const MonogamyReport zeros = ckw_concurrence_report(product_000());
    CHECK(std::abs(zeros.focus[0].slack) < 1e-12);

    Rng rng(32);
    for (int i = 0; i < 1000; ++i) {
        const PureState psi = haar_random_pure(3, rng);
        const MonogamyReport r = ckw_concurrence_report(psi);
        CHECK(std::abs(r.focus[0].slack - three_tangle(psi)) < 1e-10);
    }
}

TEST_CASE("classify_slocc: the six classes") {
    CHECK(classify_slocc(product_000()) == SloccClass::full_product);
    CHECK(classify_slocc(ghz_state()) == SloccClass::ghz);
    CHECK(classify_slocc(w_state()) == SloccClass::w);
    CHECK(classify_slocc(zero_times_bell()) == SloccClass::a_bc);
    CHECK(classify_slocc(bell_times_zero()) == SloccClass::c_ab);

    std::vector<Complex> amps(8, 0.0);
    amps[0] = amps[5] = 1.0 / std::sqrt(2.0);  // (|000> + |101>)/sqrt2: B detached
    CHECK(classify_slocc(PureState::from_amplitudes(3, std::move(amps))) == SloccClass::b_ac);

    // The tangle zero of the minus family sits in the W class.
    const double cbrt2 = std::cbrt(2.0);
    const double p_star = 4.0 * cbrt2 / (3.0 + 4.0 * cbrt2);
    CHECK(classify_slocc(ghz_w_superposition(p_star, Sign::minus)) == SloccClass::w);

    CHECK(slocc_label(SloccClass::a_bc) == "A-BC");
    CHECK(tt::thrown_code([] { classify_slocc(bell_state()); }) == errc::not_three_qubit);
}

TEST_CASE("classify_slocc: stable under local unitaries") {
    const PureState fixtures[] = {product_000(),
                                  bell_times_zero(),
                                  zero_times_bell(),
                                  ghz_state(),
                                  w_state(),
                                  ghz_w_superposition(0.2, Sign::minus),
                                  ghz_w_superposition(0.8, Sign::plus)};
    for (const PureState& psi : fixtures) {
        const SloccClass expected = classify_slocc(psi);
        for (int seed = 0; seed < 100; ++seed) {
            const auto us = random_local_unitaries(derive_stream_seed(600, seed));
            PureState rotated = psi;
            for (int q = 0; q < 3; ++q) {
                auto applied = apply_one_qubit_operator(rotated, us[q], q);
                rotated = PureState::from_amplitudes(3, std::move(applied.amplitudes), true);
            }
            CHECK(classify_slocc(rotated) == expected);
        }
    }
}

TEST_CASE("povm_monotonicity_trial") {
    // A unitary POVM element is the LU-invariance limit.
    Rng rng(41);
    PovmPair edge;
    edge.a = 1.0;
    edge.b = 1.0;
    edge.u1 = haar_unitary_2x2(rng);
    edge.u2 = haar_unitary_2x2(rng);
    edge.v = haar_unitary_2x2(rng);
    edge.target_qubit = 1;
    const PureState w = w_state();
    const double before = three_pi(w);
    auto applied = apply_one_qubit_operator(w, edge.element1(), edge.target_qubit);
    CHECK(std::abs(applied.weight - 1.0) < 1e-12);
    const double after =
        three_pi(PureState::from_amplitudes(3, std::move(applied.amplitudes), true));
    CHECK(std::abs(applied.weight * after - before) < 1e-10);

    // Product states stay at zero.
    for (int seed = 0; seed < 50; ++seed) {
        const PovmTrialResult r = povm_monotonicity_trial(product_000(), seed);
        CHECK(r.pi_before < 1e-12);
        CHECK(r.avg_pi < 1e-10);
        CHECK(r.pass);
    }

    // The W state passes across seeds.
    for (int seed = 0; seed < 1000; ++seed) {
        CHECK(povm_monotonicity_trial(w, derive_stream_seed(700, seed)).pass);
    }

    CHECK(tt::thrown_code([] { povm_monotonicity_trial(bell_state(), 1); }) ==
          errc::not_three_qubit);
}

TEST_CASE("lu_invariance_trial") {
    for (int seed = 0; seed < 100; ++seed) {
        const LuTrialResult ghz = lu_invariance_trial(ghz_state(), derive_stream_seed(800, seed));
        CHECK(std::abs(ghz.pi_after - 1.0) < 1e-8);
        CHECK(std::abs(ghz.pi_after - ghz.pi_before) < 1e-8);

        const LuTrialResult w = lu_invariance_trial(w_state(), derive_stream_seed(900, seed));
        CHECK(std::abs(w.pi_after - kPiW) < 1e-8);
    }

    Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        const PureState psi = haar_random_pure(3, rng);
        const LuTrialResult r = lu_invariance_trial(psi, rng.next());
        CHECK(std::abs(r.pi_after - r.pi_before) < 1e-8);
    }
}

TEST_CASE("W-class strictness: negativity slack strict, concurrence slack zero") {
    Rng rng(61);
    for (int i = 0; i < 1000; ++i) {
        const PureState psi = random_w_class(rng, 0.05);
        const MonogamyReport neg = ckw_negativity_report(psi);
        CHECK(neg.focus[0].slack > 1e-6);
        const MonogamyReport conc = ckw_concurrence_report(psi);
        CHECK(std::abs(conc.focus[0].slack) < 1e-9);
    }
}
