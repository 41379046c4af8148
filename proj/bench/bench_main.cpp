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

// Compares the serial reference implementations against the OpenMP kernels
// and checks that both produce identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "threepi/campaign.hpp"
#include "threepi/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool stats_equal(const threepi::CampaignStats& a, const threepi::CampaignStats& b) {
    return a.samples == b.samples && a.min_slack == b.min_slack &&
           a.violations == b.violations && a.max_pi_minus_tau == b.max_pi_minus_tau;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::cout << name << ": serial " << serial_ms << " ms, openmp " << parallel_ms
              << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (identical ? "" : "  [MISMATCH]") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t samples = 2000;
    int resolution = 120;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--samples") samples = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--resolution") resolution = std::atoi(argv[i + 1]);
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    bool all_identical = true;

    {
        threepi::CampaignConfig config;
        config.samples = samples;
        config.seed = 42;
        config.checks = threepi::kAllChecks;

        auto t0 = Clock::now();
        const auto serial = threepi::run_campaign_serial(config);
        const double serial_ms = ms_since(t0);

        t0 = Clock::now();
        const auto parallel = threepi::run_campaign(config);
        const double parallel_ms = ms_since(t0);

        const bool same = stats_equal(serial, parallel);
        all_identical = all_identical && same;
        report("campaign (" + std::to_string(samples) + " samples, all checks)", serial_ms,
               parallel_ms, same);
    }

    {
        auto t0 = Clock::now();
        const auto serial = threepi::sweep_w_serial(resolution);
        const double serial_ms = ms_since(t0);

        t0 = Clock::now();
        const auto parallel = threepi::sweep_w(resolution);
        const double parallel_ms = ms_since(t0);

        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i) {
            same = serial[i].beta == parallel[i].beta && serial[i].gamma == parallel[i].gamma &&
                   serial[i].pi_abc == parallel[i].pi_abc;
        }
        all_identical = all_identical && same;
        report("sweep-w (" + std::to_string(resolution) + "x" + std::to_string(resolution) + ")",
               serial_ms, parallel_ms, same);
    }

    return all_identical ? 0 : 1;
}
