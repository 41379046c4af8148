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

#ifndef THREEPI_SWEEP_HPP
#define THREEPI_SWEEP_HPP

#include <vector>

#include "threepi/state.hpp"

namespace threepi {

/// One row of the W-class surface: three-pi over the (beta, gamma) simplex
/// with alpha = sqrt(1 - beta^2 - gamma^2).
struct WSweepRecord {
    double beta = 0.0;
    double gamma = 0.0;
    double pi_abc = 0.0;
};

/// One row of the GHZ/W superposition sweep. tau_abc is the numerical
/// three-tangle, cross-checked against the closed form within 1e-9 while
/// sweeping; n_sq_abc is the squared negativity of A against BC.
struct GhzwSweepRecord {
    double p = 0.0;
    double pi_abc = 0.0;
    double tau_abc = 0.0;
    double n_sq_abc = 0.0;
};

/// beta and gamma run over resolution uniform points in [0, 1]; grid points
/// with beta^2 + gamma^2 > 1 are omitted. Rows appear in row-major
/// (beta outer, gamma inner) order. Requires resolution >= 2.
std::vector<WSweepRecord> sweep_w_serial(int resolution);
std::vector<WSweepRecord> sweep_w(int resolution);  // OpenMP kernel, same output

/// p runs over p_steps uniform points in [0, 1]. Requires p_steps >= 2.
std::vector<GhzwSweepRecord> sweep_ghzw_serial(Sign sign, int p_steps);
std::vector<GhzwSweepRecord> sweep_ghzw(Sign sign, int p_steps);

}  // namespace threepi

#endif  // THREEPI_SWEEP_HPP
