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

#include "threepi/sweep.hpp"

#include <cmath>
#include <exception>

#include "threepi/error.hpp"
#include "threepi/measures.hpp"

namespace threepi {

namespace {

void check_steps(int steps) {
    if (steps < 2) {
        throw Error(errc::out_of_range, "grid needs at least two points per axis");
    }
}

std::vector<WSweepRecord> w_row(int i, int resolution) {
    const double beta = static_cast<double>(i) / (resolution - 1);
    std::vector<WSweepRecord> row;
    for (int j = 0; j < resolution; ++j) {
        const double gamma = static_cast<double>(j) / (resolution - 1);
        const double rest = 1.0 - beta * beta - gamma * gamma;
        if (rest < 0.0) continue;  // outside the simplex
        const double alpha = std::sqrt(rest);
        row.push_back({beta, gamma, three_pi(w_class_state(alpha, beta, gamma))});
    }
    return row;
}

GhzwSweepRecord ghzw_row(Sign sign, int k, int p_steps) {
    const double p = static_cast<double>(k) / (p_steps - 1);
    const PureState psi = ghz_w_superposition(p, sign);
    GhzwSweepRecord rec;
    rec.p = p;
    rec.pi_abc = three_pi(psi);
    rec.tau_abc = three_tangle(psi);
    const double closed = three_tangle_ghzw_closed_form(p, sign);
    if (std::abs(rec.tau_abc - closed) > 1e-9) {
        throw Error(errc::internal, "numeric three-tangle drifted from its closed form");
    }
    const double n = negativity(density_of(psi), {0});
    rec.n_sq_abc = n * n;
    return rec;
}

template <typename Row>
std::vector<Row> flatten(std::vector<std::vector<Row>>&& rows) {
    std::vector<Row> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

std::vector<WSweepRecord> sweep_w_serial(int resolution) {
    check_steps(resolution);
    std::vector<std::vector<WSweepRecord>> rows(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) rows[static_cast<std::size_t>(i)] = w_row(i, resolution);
    return flatten(std::move(rows));
}

std::vector<WSweepRecord> sweep_w(int resolution) {
    check_steps(resolution);
    std::vector<std::vector<WSweepRecord>> rows(static_cast<std::size_t>(resolution));
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < resolution; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = w_row(i, resolution);
        } catch (...) {
#pragma omp critical(threepi_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return flatten(std::move(rows));
}

std::vector<GhzwSweepRecord> sweep_ghzw_serial(Sign sign, int p_steps) {
    check_steps(p_steps);
    std::vector<GhzwSweepRecord> records(static_cast<std::size_t>(p_steps));
    for (int k = 0; k < p_steps; ++k) records[static_cast<std::size_t>(k)] = ghzw_row(sign, k, p_steps);
    return records;
}

std::vector<GhzwSweepRecord> sweep_ghzw(Sign sign, int p_steps) {
    check_steps(p_steps);
    std::vector<GhzwSweepRecord> records(static_cast<std::size_t>(p_steps));
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < p_steps; ++k) {
        try {
            records[static_cast<std::size_t>(k)] = ghzw_row(sign, k, p_steps);
        } catch (...) {
#pragma omp critical(threepi_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

}  // namespace threepi
