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

#ifndef THREEPI_TEXT_FORMAT_HPP
#define THREEPI_TEXT_FORMAT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "threepi/campaign.hpp"
#include "threepi/sweep.hpp"

namespace threepi {

/// Shortest decimal representation that round-trips to the same double
/// (std::to_chars); all emitted numbers go through this.
std::string format_double(double value);

enum class OutputFormat { csv, json_lines };

void write_w_sweep(std::ostream& out, const std::vector<WSweepRecord>& records,
                   OutputFormat format);
void write_ghzw_sweep(std::ostream& out, const std::vector<GhzwSweepRecord>& records,
                      OutputFormat format);

/// Key/value report rows used by the measure and verify commands. Values
/// are already formatted.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

void write_kv_text(std::ostream& out, const KeyValues& kv);        // "key = value" lines
void write_kv_csv(std::ostream& out, const KeyValues& kv);         // header row + one row
void write_kv_json_line(std::ostream& out, const KeyValues& kv);   // one JSON object

KeyValues campaign_stats_rows(const CampaignStats& stats);

}  // namespace threepi

#endif  // THREEPI_TEXT_FORMAT_HPP
