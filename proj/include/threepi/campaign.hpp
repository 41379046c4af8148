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

#ifndef THREEPI_CAMPAIGN_HPP
#define THREEPI_CAMPAIGN_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace threepi {

/// Randomized verification checks. Each check derives its own RNG stream
/// per sample, so enabling several checks at once does not change any
/// individual check's draw sequence.
///
///   monogamy   - Haar 3-qubit state; min focus slack of the squared-
///                negativity inequality; violation below -1e-9.
///   n_le_c     - random two-qubit density (rank cycling 1..4 by sample
///                index); slack = concurrence - negativity.
///   domination - Haar 3-qubit state; slack = three_pi - three_tangle.
///   povm       - POVM monotonicity trial on the W state (POVM seeded per
///                sample); slack = pi_before - avg_pi.
///   lu         - local-unitary invariance on a Haar state; violation when
///                |delta pi| exceeds 1e-8 (does not enter min_slack).
enum class Check : unsigned {
    monogamy = 1u << 0,
    n_le_c = 1u << 1,
    domination = 1u << 2,
    povm = 1u << 3,
    lu = 1u << 4,
};

constexpr unsigned kAllChecks = 0x1f;

constexpr unsigned check_bit(Check c) { return static_cast<unsigned>(c); }

/// Parses a comma-separated check list ("monogamy,povm"); throws
/// out_of_range on an unknown name.
unsigned parse_checks(const std::string& csv);
std::string checks_to_string(unsigned checks);

struct CampaignConfig {
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    unsigned checks = kAllChecks;
};

struct CampaignStats {
    std::size_t samples = 0;
    double min_slack = 0.0;
    std::size_t violations = 0;
    double max_pi_minus_tau = 0.0;  // tracked by the domination check
    std::uint64_t seed = 0;
};

/// Serial reference implementation; the parallel kernel must reproduce its
/// output exactly (per-sample seeds are index-derived and the aggregation
/// is commutative).
CampaignStats run_campaign_serial(const CampaignConfig& config);

/// OpenMP kernel; falls back to the serial path when built without OpenMP.
CampaignStats run_campaign(const CampaignConfig& config);

}  // namespace threepi

#endif  // THREEPI_CAMPAIGN_HPP
