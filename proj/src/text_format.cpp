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

#include "threepi/text_format.hpp"

#include <charconv>

#include "threepi/error.hpp"

namespace threepi {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw Error(errc::internal, "number formatting failed");
    }
    return std::string(buf, res.ptr);
}

void write_w_sweep(std::ostream& out, const std::vector<WSweepRecord>& records,
                   OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "beta,gamma,pi_abc\n";
        for (const auto& r : records) {
            out << format_double(r.beta) << ',' << format_double(r.gamma) << ','
                << format_double(r.pi_abc) << '\n';
        }
    } else {
        for (const auto& r : records) {
            out << "{\"beta\":" << format_double(r.beta) << ",\"gamma\":" << format_double(r.gamma)
                << ",\"pi_abc\":" << format_double(r.pi_abc) << "}\n";
        }
    }
}

void write_ghzw_sweep(std::ostream& out, const std::vector<GhzwSweepRecord>& records,
                      OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "p,pi_abc,tau_abc,n_sq_abc\n";
        for (const auto& r : records) {
            out << format_double(r.p) << ',' << format_double(r.pi_abc) << ','
                << format_double(r.tau_abc) << ',' << format_double(r.n_sq_abc) << '\n';
        }
    } else {
        for (const auto& r : records) {
            out << "{\"p\":" << format_double(r.p) << ",\"pi_abc\":" << format_double(r.pi_abc)
                << ",\"tau_abc\":" << format_double(r.tau_abc)
                << ",\"n_sq_abc\":" << format_double(r.n_sq_abc) << "}\n";
        }
    }
}

void write_kv_text(std::ostream& out, const KeyValues& kv) {
    for (const auto& [key, value] : kv) out << key << " = " << value << '\n';
}

void write_kv_csv(std::ostream& out, const KeyValues& kv) {
    for (std::size_t i = 0; i < kv.size(); ++i) out << kv[i].first << (i + 1 < kv.size() ? ',' : '\n');
    for (std::size_t i = 0; i < kv.size(); ++i) out << kv[i].second << (i + 1 < kv.size() ? ',' : '\n');
}

void write_kv_json_line(std::ostream& out, const KeyValues& kv) {
    // Values are numeric tokens; no quoting needed.
    out << '{';
    for (std::size_t i = 0; i < kv.size(); ++i) {
        if (i) out << ',';
        out << '"' << kv[i].first << "\":" << kv[i].second;
    }
    out << "}\n";
}

KeyValues campaign_stats_rows(const CampaignStats& stats) {
    return {
        {"samples", std::to_string(stats.samples)},
        {"min_slack", format_double(stats.min_slack)},
        {"violations", std::to_string(stats.violations)},
        {"max_pi_minus_tau", format_double(stats.max_pi_minus_tau)},
        {"seed", std::to_string(stats.seed)},
    };
}

}  // namespace threepi
