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

#include "threepi/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "threepi/error.hpp"
#include "threepi/measures.hpp"
#include "threepi/monogamy.hpp"
#include "threepi/random.hpp"

namespace threepi {

namespace {

constexpr double kSlackTol = 1e-9;
constexpr double kLuTol = 1e-8;

struct SampleOutcome {
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t violations = 0;
    double pi_minus_tau = -std::numeric_limits<double>::infinity();
};

// Every check gets its own stream derived from (campaign seed, sample
// index, check id): results per check do not depend on which other checks
// are enabled.
std::uint64_t check_seed(std::uint64_t campaign_seed, std::size_t index, Check check) {
    return derive_stream_seed(derive_stream_seed(campaign_seed, index),
                              static_cast<std::uint64_t>(check_bit(check)));
}

SampleOutcome evaluate_sample(const CampaignConfig& config, std::size_t index) {
    SampleOutcome outcome;
    const auto note_slack = [&outcome](double slack) {
        outcome.min_slack = std::min(outcome.min_slack, slack);
        if (slack < -kSlackTol) ++outcome.violations;
    };

    if (config.checks & check_bit(Check::monogamy)) {
        Rng rng(check_seed(config.seed, index, Check::monogamy));
        const PureState psi = haar_random_pure(3, rng);
        for (int f = 0; f < 3; ++f) note_slack(negativity_focus_terms(psi, f).slack());
    }
    if (config.checks & check_bit(Check::n_le_c)) {
        Rng rng(check_seed(config.seed, index, Check::n_le_c));
        const int rank = static_cast<int>(index % 4) + 1;
        const DensityMatrix rho = random_density(2, rank, rng);
        note_slack(concurrence_two_qubit(rho) - negativity(rho, {0}));
    }
    if (config.checks & check_bit(Check::domination)) {
        Rng rng(check_seed(config.seed, index, Check::domination));
        const PureState psi = haar_random_pure(3, rng);
        const double gap = three_pi(psi) - three_tangle(psi);
        note_slack(gap);
        outcome.pi_minus_tau = gap;
    }
    if (config.checks & check_bit(Check::povm)) {
        const PovmTrialResult trial =
            povm_monotonicity_trial(w_state(), check_seed(config.seed, index, Check::povm));
        note_slack(trial.pi_before - trial.avg_pi);
    }
    if (config.checks & check_bit(Check::lu)) {
        Rng rng(check_seed(config.seed, index, Check::lu));
        const PureState psi = haar_random_pure(3, rng);
        const LuTrialResult trial = lu_invariance_trial(psi, rng.next());
        if (std::abs(trial.pi_after - trial.pi_before) > kLuTol) ++outcome.violations;
    }
    return outcome;
}

void validate(const CampaignConfig& config) {
    if (config.samples < 1) {
        throw Error(errc::out_of_range, "campaign needs at least one sample");
    }
    if ((config.checks & kAllChecks) == 0) {
        throw Error(errc::out_of_range, "campaign needs at least one check");
    }
}

// Slacks and pi-tau gaps are O(1); anything of sentinel magnitude means the
// aggregate was never updated (the OpenMP reduction identity may be either
// the infinity or the largest finite double).
bool never_updated(double v) { return !(std::abs(v) < 1e300); }

CampaignStats finalize(const CampaignConfig& config, double min_slack, std::size_t violations,
                       double max_pi_minus_tau) {
    CampaignStats stats;
    stats.samples = config.samples;
    stats.seed = config.seed;
    stats.violations = violations;
    stats.min_slack = never_updated(min_slack) ? 0.0 : min_slack;
    stats.max_pi_minus_tau = never_updated(max_pi_minus_tau) ? 0.0 : max_pi_minus_tau;
    return stats;
}

}  // namespace

unsigned parse_checks(const std::string& csv) {
    unsigned checks = 0;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string::npos) end = csv.size();
        const std::string name = csv.substr(start, end - start);
        if (name == "monogamy") checks |= check_bit(Check::monogamy);
        else if (name == "n_le_c") checks |= check_bit(Check::n_le_c);
        else if (name == "domination") checks |= check_bit(Check::domination);
        else if (name == "povm") checks |= check_bit(Check::povm);
        else if (name == "lu") checks |= check_bit(Check::lu);
        else throw Error(errc::out_of_range, "unknown check '" + name + "'");
        start = end + 1;
        if (end == csv.size()) break;
    }
    return checks;
}

std::string checks_to_string(unsigned checks) {
    std::string out;
    const auto add = [&out](const char* name) {
        if (!out.empty()) out += ',';
        out += name;
    };
    if (checks & check_bit(Check::monogamy)) add("monogamy");
    if (checks & check_bit(Check::n_le_c)) add("n_le_c");
    if (checks & check_bit(Check::domination)) add("domination");
    if (checks & check_bit(Check::povm)) add("povm");
    if (checks & check_bit(Check::lu)) add("lu");
    return out;
}

CampaignStats run_campaign_serial(const CampaignConfig& config) {
    validate(config);
    double min_slack = std::numeric_limits<double>::infinity();
    double max_pt = -std::numeric_limits<double>::infinity();
    std::size_t violations = 0;
    for (std::size_t i = 0; i < config.samples; ++i) {
        const SampleOutcome outcome = evaluate_sample(config, i);
        min_slack = std::min(min_slack, outcome.min_slack);
        max_pt = std::max(max_pt, outcome.pi_minus_tau);
        violations += outcome.violations;
    }
    return finalize(config, min_slack, violations, max_pt);
}

CampaignStats run_campaign(const CampaignConfig& config) {
    validate(config);
    double min_slack = std::numeric_limits<double>::infinity();
    double max_pt = -std::numeric_limits<double>::infinity();
    long long violations = 0;
    const long long n = static_cast<long long>(config.samples);
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(static) reduction(min : min_slack) \
    reduction(max : max_pt) reduction(+ : violations)
    for (long long i = 0; i < n; ++i) {
        try {
            const SampleOutcome outcome = evaluate_sample(config, static_cast<std::size_t>(i));
            min_slack = std::min(min_slack, outcome.min_slack);
            max_pt = std::max(max_pt, outcome.pi_minus_tau);
            violations += static_cast<long long>(outcome.violations);
        } catch (...) {
#pragma omp critical(threepi_campaign_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return finalize(config, min_slack, static_cast<std::size_t>(violations), max_pt);
}

}  // namespace threepi
