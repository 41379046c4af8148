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
#include "threepi/state.hpp"

using namespace threepi;
namespace tt = threepi::test;

TEST_CASE("from_amplitudes: construction and errors") {
    const PureState zz = PureState::from_amplitudes(2, {1.0, 0.0, 0.0, 0.0});
    CHECK(tt::valid_pure_state(zz));

    const PureState plus = PureState::from_amplitudes(2, {1.0, 1.0, 0.0, 0.0}, true);
    CHECK(tt::valid_pure_state(plus));
    CHECK(std::abs(plus.amplitudes()[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(plus.amplitudes()[1] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

    CHECK(tt::thrown_code([] { PureState::from_amplitudes(2, {1.0, 0.0}); }) ==
          errc::wrong_length);
    CHECK(tt::thrown_code([] { PureState::from_amplitudes(1, {0.0, 0.0}, true); }) ==
          errc::zero_vector);
    CHECK(tt::thrown_code([] { PureState::from_amplitudes(1, {0.5, 0.5}); }) ==
          errc::not_normalized);
}

TEST_CASE("named states") {
    const PureState ghz = ghz_state();
    CHECK(std::abs(ghz.amplitudes()[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(ghz.amplitudes()[7] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

    const PureState w = w_state();
    for (std::size_t idx : {4, 2, 1}) {
        CHECK(std::abs(w.amplitudes()[idx] - Complex(1.0 / std::sqrt(3.0), 0.0)) < 1e-15);
    }
    CHECK(std::abs(w.amplitudes()[0]) == 0.0);

    const PureState bell = bell_state();
    CHECK(std::abs(bell.amplitudes()[1] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(bell.amplitudes()[2] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
}

TEST_CASE("w_class_state: amplitude placement and domain") {
    const PureState basis = w_class_state(1.0, 0.0, 0.0);
    CHECK(std::abs(basis.amplitudes()[4] - Complex(1.0, 0.0)) < 1e-15);

    const PureState w = w_class_state(1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0),
                                      1.0 / std::sqrt(3.0));
    CHECK(tt::max_abs_diff(density_of(w).matrix(), density_of(w_state()).matrix()) < 1e-15);

    const PureState tilted = w_class_state(0.5, 0.5, 1.0 / std::sqrt(2.0));
    CHECK(std::abs(tilted.amplitudes()[4] - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(tilted.amplitudes()[2] - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(tilted.amplitudes()[1] - Complex(0.70710678, 0.0)) < 1e-8);

    CHECK(tt::thrown_code([] { w_class_state(0.9, 0.1, 0.1); }) == errc::not_normalized);
    CHECK(tt::thrown_code([] { w_class_state(-0.5, 0.5, 1.0 / std::sqrt(2.0)); }) ==
          errc::out_of_range);
}

TEST_CASE("ghz_w_superposition: endpoints, expansion, norm on a grid") {
    const PureState at_one = ghz_w_superposition(1.0, Sign::minus);
    CHECK(tt::max_abs_diff(density_of(at_one).matrix(), density_of(ghz_state()).matrix()) <
          1e-15);

    // p = 0 with the minus sign is -|W>: a global phase, identical density.
    const PureState at_zero = ghz_w_superposition(0.0, Sign::minus);
    CHECK(tt::max_abs_diff(density_of(at_zero).matrix(), density_of(w_state()).matrix()) <
          1e-15);

    const PureState half = ghz_w_superposition(0.5, Sign::plus);
    const double r6 = 1.0 / std::sqrt(6.0);
    const double expected[8] = {0.5, r6, r6, 0.0, r6, 0.0, 0.0, 0.5};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(half.amplitudes()[i] - Complex(expected[i], 0.0)) < 1e-15);
    }

    for (int i = 0; i <= 100; ++i) {
        CHECK(tt::state_norm_error(ghz_w_superposition(i / 100.0, Sign::plus)) < 1e-12);
        CHECK(tt::state_norm_error(ghz_w_superposition(i / 100.0, Sign::minus)) < 1e-12);
    }

    CHECK(tt::thrown_code([] { ghz_w_superposition(1.5, Sign::plus); }) == errc::out_of_range);
    CHECK(tt::thrown_code([] { ghz_w_superposition(-0.1, Sign::minus); }) == errc::out_of_range);
}

TEST_CASE("density_of: projectors") {
    const DensityMatrix zero = density_of(PureState::from_amplitudes(1, {1.0, 0.0}));
    CHECK(zero.matrix()(0, 0) == Complex(1.0, 0.0));
    CHECK(zero.matrix()(1, 1) == Complex(0.0, 0.0));
    CHECK(tt::valid_density(zero));

    const DensityMatrix ghz = density_of(ghz_state());
    CHECK(std::abs(ghz.matrix()(0, 0) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(ghz.matrix()(0, 7) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(ghz.matrix()(7, 0) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(ghz.matrix()(3, 3)) == 0.0);

    // Rank one: purity exactly 1 up to rounding.
    double purity = 0.0;
    for (const Complex& z : ghz.matrix().entries()) purity += std::norm(z);
    CHECK(std::abs(purity - 1.0) < 1e-10);
}

TEST_CASE("apply_one_qubit_operator") {
    const PureState bell = PureState::from_amplitudes(
        2, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});

    SUBCASE("identity leaves the state with weight one") {
        const auto out = apply_one_qubit_operator(bell, ComplexMatrix::identity(2), 0);
        CHECK(std::abs(out.weight - 1.0) < 1e-12);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(out.amplitudes[i] - bell.amplitudes()[i]) < 1e-15);
        }
    }
    SUBCASE("projector on qubit 0 halves the weight") {
        const ComplexMatrix proj{{1.0, 0.0}, {0.0, 0.0}};
        const auto out = apply_one_qubit_operator(bell, proj, 0);
        CHECK(std::abs(out.weight - 0.5) < 1e-12);
        CHECK(std::abs(out.amplitudes[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
        CHECK(std::abs(out.amplitudes[3]) == 0.0);
    }
    SUBCASE("sigma_y on the last qubit of |000>") {
        const ComplexMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
        std::vector<Complex> amps(8, 0.0);
        amps[0] = 1.0;
        const auto out =
            apply_one_qubit_operator(PureState::from_amplitudes(3, std::move(amps)), sy, 2);
        CHECK(std::abs(out.weight - 1.0) < 1e-12);
        CHECK(std::abs(out.amplitudes[1] - Complex(0.0, 1.0)) < 1e-15);
    }
    SUBCASE("errors") {
        CHECK(tt::thrown_code([&] {
                  apply_one_qubit_operator(bell, ComplexMatrix::identity(2), 2);
              }) == errc::index_out_of_range);
        CHECK(tt::thrown_code([&] {
                  apply_one_qubit_operator(bell, ComplexMatrix::identity(4), 0);
              }) == errc::dimension_mismatch);
    }
}

TEST_CASE("every state constructor satisfies the type invariants") {
    CHECK(tt::valid_pure_state(ghz_state()));
    CHECK(tt::valid_pure_state(w_state()));
    CHECK(tt::valid_pure_state(bell_state()));
    CHECK(tt::valid_pure_state(w_class_state(0.5, 0.5, 1.0 / std::sqrt(2.0))));
    for (int i = 0; i <= 10; ++i) {
        CHECK(tt::valid_pure_state(ghz_w_superposition(i / 10.0, Sign::plus)));
        CHECK(tt::valid_pure_state(ghz_w_superposition(i / 10.0, Sign::minus)));
    }
    Rng rng(808);
    for (int n = 1; n <= 4; ++n) {
        CHECK(tt::valid_pure_state(haar_random_pure(n, rng)));
        CHECK(tt::valid_density(density_of(haar_random_pure(n, rng))));
        CHECK(tt::valid_density(random_density(n, 1 + n % (1 << n), rng)));
    }
    CHECK(tt::valid_density(reduced_density(density_of(ghz_state()), {0, 2})));
}

TEST_CASE("permute_qubits relabels basis indices") {
    std::vector<Complex> amps(8, 0.0);
    amps[4] = 1.0;  // |100>
    const PureState psi = PureState::from_amplitudes(3, std::move(amps));
    // Qubit 0 -> qubit 1: |100> becomes |010>.
    const PureState rotated = permute_qubits(psi, {1, 2, 0});
    CHECK(std::abs(rotated.amplitudes()[2] - Complex(1.0, 0.0)) < 1e-15);

    CHECK(tt::thrown_code([&] { permute_qubits(psi, {0, 0, 1}); }) == errc::index_out_of_range);
}
