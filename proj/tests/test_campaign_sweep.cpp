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
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "test_support.hpp"
#include "threepi/campaign.hpp"
#include "threepi/error.hpp"
#include "threepi/measures.hpp"
#include "threepi/sweep.hpp"
#include "threepi/text_format.hpp"

using namespace threepi;
namespace tt = threepi::test;

namespace {

bool same_stats(const CampaignStats& a, const CampaignStats& b) {
    return a.samples == b.samples && a.min_slack == b.min_slack &&
           a.violations == b.violations && a.max_pi_minus_tau == b.max_pi_minus_tau &&
           a.seed == b.seed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parse_checks") {
    CHECK(parse_checks("monogamy") == check_bit(Check::monogamy));
    CHECK(parse_checks("monogamy,lu") == (check_bit(Check::monogamy) | check_bit(Check::lu)));
    CHECK(parse_checks("monogamy,n_le_c,domination,povm,lu") == kAllChecks);
    CHECK(tt::thrown_code([] { parse_checks("bogus"); }) == errc::out_of_range);
    CHECK(checks_to_string(kAllChecks) == "monogamy,n_le_c,domination,povm,lu");
}

TEST_CASE("campaign: determinism and serial/parallel agreement") {
    CampaignConfig config;
    config.samples = 500;
    config.seed = 7;
    config.checks = kAllChecks;

    const CampaignStats serial_a = run_campaign_serial(config);
    const CampaignStats serial_b = run_campaign_serial(config);
    CHECK(same_stats(serial_a, serial_b));

    const CampaignStats parallel = run_campaign(config);
    CHECK(same_stats(serial_a, parallel));

    config.samples = 1;
    CHECK(same_stats(run_campaign(config), run_campaign(config)));
}

TEST_CASE("campaign: per-check streams do not interact") {
    CampaignConfig lone;
    lone.samples = 300;
    lone.seed = 99;
    lone.checks = check_bit(Check::monogamy);
    const CampaignStats alone = run_campaign(lone);

    CampaignConfig both = lone;
    both.checks = check_bit(Check::monogamy) | check_bit(Check::lu);
    const CampaignStats mixed = run_campaign(both);
    // lu adds no inequality slack, so min_slack must be unchanged.
    CHECK(alone.min_slack == mixed.min_slack);
}

TEST_CASE("campaign: theorem instances hold at scale") {
    CampaignConfig config;
    config.samples = 10000;
    config.seed = 20260810;

    config.checks = check_bit(Check::monogamy);
    const CampaignStats monogamy = run_campaign(config);
    CHECK(monogamy.violations == 0);
    CHECK(monogamy.min_slack > 0.0);

    config.checks = check_bit(Check::n_le_c);
    const CampaignStats n_le_c = run_campaign(config);
    CHECK(n_le_c.violations == 0);
    CHECK(n_le_c.min_slack > -1e-9);

    config.checks = check_bit(Check::domination);
    const CampaignStats domination = run_campaign(config);
    CHECK(domination.violations == 0);
    CHECK(domination.max_pi_minus_tau >= 0.0);

    config.samples = 1000;
    config.checks = check_bit(Check::povm) | check_bit(Check::lu);
    const CampaignStats trials = run_campaign(config);
    CHECK(trials.violations == 0);
}

TEST_CASE("campaign: unset aggregates come back as zero") {
    CampaignConfig config;
    config.samples = 50;
    config.seed = 5;
    config.checks = check_bit(Check::lu);  // no inequality slack, no pi-tau gap
    const CampaignStats serial = run_campaign_serial(config);
    const CampaignStats parallel = run_campaign(config);
    CHECK(same_stats(serial, parallel));
    CHECK(serial.min_slack == 0.0);
    CHECK(serial.max_pi_minus_tau == 0.0);

    config.checks = check_bit(Check::monogamy);
    const CampaignStats monogamy = run_campaign(config);
    CHECK(monogamy.max_pi_minus_tau == 0.0);  // only domination tracks the gap
}

TEST_CASE("campaign: input validation") {
    CampaignConfig config;
    config.samples = 0;
    CHECK(tt::thrown_code([&] { run_campaign(config); }) == errc::out_of_range);
    config.samples = 1;
    config.checks = 0;
    CHECK(tt::thrown_code([&] { run_campaign(config); }) == errc::out_of_range);
}

TEST_CASE("sweep_w: grid semantics") {
    const auto tiny = sweep_w(2);
    // (1,1) lies outside the simplex; the three corners remain.
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0].beta == 0.0);
    CHECK(tiny[0].gamma == 0.0);
    CHECK(tiny[1].beta == 0.0);
    CHECK(tiny[1].gamma == 1.0);
    CHECK(tiny[2].beta == 1.0);
    CHECK(tiny[2].gamma == 0.0);
    for (const auto& r : tiny) CHECK(r.pi_abc < 1e-12);  // product corners

    const auto serial = sweep_w_serial(41);
    const auto parallel = sweep_w(41);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].beta == parallel[i].beta);
        CHECK(serial[i].gamma == parallel[i].gamma);
        CHECK(serial[i].pi_abc == parallel[i].pi_abc);
    }

    CHECK(tt::thrown_code([] { sweep_w(1); }) == errc::out_of_range);
}

TEST_CASE("sweep_ghzw: endpoints and serial/parallel agreement") {
    const auto minus = sweep_ghzw(Sign::minus, 11);
    REQUIRE(minus.size() == 11);
    CHECK(minus.front().p == 0.0);
    CHECK(minus.back().p == 1.0);
    CHECK(std::abs(minus.back().pi_abc - 1.0) < 1e-9);
    CHECK(std::abs(minus.back().tau_abc - 1.0) < 1e-9);
    CHECK(std::abs(minus.back().n_sq_abc - 1.0) < 1e-9);
    const double pi_w = 4.0 * (std::sqrt(5.0) - 1.0) / 9.0;
    CHECK(std::abs(minus.front().pi_abc - pi_w) < 1e-9);
    CHECK(minus.front().tau_abc < 1e-9);

    const auto serial = sweep_ghzw_serial(Sign::minus, 11);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].pi_abc == minus[i].pi_abc);
        CHECK(serial[i].tau_abc == minus[i].tau_abc);
        CHECK(serial[i].n_sq_abc == minus[i].n_sq_abc);
    }

    CHECK(tt::thrown_code([] { sweep_ghzw(Sign::plus, 0); }) == errc::out_of_range);
}

TEST_CASE("format_double round-trips") {
    Rng rng(321);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.normal() * std::pow(10.0, rng.uniform_int(20) - 10);
        const std::string text = format_double(v);
        CHECK(std::stod(text) == v);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("golden files: figure fixtures at resolution 101") {
    {
        std::ostringstream out;
        write_w_sweep(out, sweep_w(101), OutputFormat::csv);
        CHECK(out.str() == read_file(std::string(THREEPI_GOLDEN_DIR) + "/sweep_w_101.csv"));
    }
    {
        std::ostringstream out;
        write_ghzw_sweep(out, sweep_ghzw(Sign::minus, 101), OutputFormat::csv);
        CHECK(out.str() ==
              read_file(std::string(THREEPI_GOLDEN_DIR) + "/sweep_ghzw_minus_101.csv"));
    }
    {
        std::ostringstream out;
        write_ghzw_sweep(out, sweep_ghzw(Sign::plus, 101), OutputFormat::csv);
        CHECK(out.str() ==
              read_file(std::string(THREEPI_GOLDEN_DIR) + "/sweep_ghzw_plus_101.csv"));
    }
}

TEST_CASE("campaign stats text rows") {
    CampaignStats stats;
    stats.samples = 10;
    stats.min_slack = 0.25;
    stats.violations = 0;
    stats.max_pi_minus_tau = 0.5;
    stats.seed = 7;
    const KeyValues kv = campaign_stats_rows(stats);
    std::ostringstream text;
    write_kv_text(text, kv);
    CHECK(text.str() ==
          "samples = 10\nmin_slack = 0.25\nviolations = 0\nmax_pi_minus_tau = 0.5\nseed = 7\n");
    std::ostringstream json;
    write_kv_json_line(json, kv);
    CHECK(json.str() ==
          "{\"samples\":10,\"min_slack\":0.25,\"violations\":0,"
          "\"max_pi_minus_tau\":0.5,\"seed\":7}\n");
}
