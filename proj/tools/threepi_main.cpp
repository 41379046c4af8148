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
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "threepi/campaign.hpp"
#include "threepi/error.hpp"
#include "threepi/ket_parser.hpp"
#include "threepi/measures.hpp"
#include "threepi/monogamy.hpp"
#include "threepi/sweep.hpp"
#include "threepi/text_format.hpp"

namespace {

using threepi::Error;
using threepi::errc;
using threepi::KeyValues;
using threepi::OutputFormat;
using threepi::PureState;
using threepi::format_double;

// Exit codes: 0 success, 1 verification failure or internal fault,
// 2 parse errors, 3 dimension errors, 4 usage errors.
int exit_code_for(errc code) {
    switch (code) {
        case errc::syntax_error:
        case errc::mixed_qubit_counts:
        case errc::zero_vector:
        case errc::not_normalized:
            return 2;
        case errc::dimension_mismatch:
        case errc::index_out_of_range:
        case errc::empty_keep_set:
        case errc::wrong_length:
        case errc::non_square:
        case errc::not_hermitian:
        case errc::not_two_qubit:
        case errc::not_three_qubit:
        case errc::too_few_qubits:
            return 3;
        case errc::out_of_range:
            return 4;
        default:
            return 1;
    }
}

struct StateOptions {
    std::string name;   // ghz | w | bell
    std::string expr;   // ket expression
    bool normalize = false;
};

void add_state_options(CLI::App* cmd, StateOptions& opts) {
    auto* state = cmd->add_option("--state", opts.name, "Named state: ghz, w, or bell")
                      ->check(CLI::IsMember({"ghz", "w", "bell"}));
    auto* expr = cmd->add_option("--expr", opts.expr, "Ket expression, e.g. \"0.5|100> + 0.5|010> + 0.7071067811865476|001>\"");
    cmd->add_flag("--normalize", opts.normalize, "Normalize the parsed expression");
    state->excludes(expr);
    expr->excludes(state);
}

PureState load_state(const StateOptions& opts) {
    if (!opts.name.empty()) {
        if (opts.name == "ghz") return threepi::ghz_state();
        if (opts.name == "w") return threepi::w_state();
        return threepi::bell_state();
    }
    return threepi::parse_ket(opts.expr, opts.normalize);
}

struct OutputOptions {
    std::string path;           // empty = stdout
    std::string format;         // "", "csv", or "json-lines"
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool format_flag = true) {
    cmd->add_option("--output", opts.path, "Write to a file instead of standard output");
    if (format_flag) {
        cmd->add_option("--format", opts.format, "Output format")
            ->check(CLI::IsMember({"csv", "json-lines"}));
    }
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error(errc::out_of_range, "cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_kv(std::ostream& out, const KeyValues& kv, const std::string& format) {
    if (format == "csv") {
        threepi::write_kv_csv(out, kv);
    } else if (format == "json-lines") {
        threepi::write_kv_json_line(out, kv);
    } else {
        threepi::write_kv_text(out, kv);
    }
}

KeyValues measure_rows(const PureState& psi) {
    KeyValues kv;
    const int n = psi.n_qubits();
    kv.emplace_back("n_qubits", std::to_string(n));
    const threepi::DensityMatrix rho = threepi::density_of(psi);

    if (n == 1) return kv;
    if (n == 2) {
        kv.emplace_back("n_a_b", format_double(threepi::negativity(rho, {0})));
        kv.emplace_back("c_ab", format_double(threepi::concurrence_two_qubit(rho)));
        return kv;
    }
    if (n == 3) {
        const threepi::MonogamyReport report = threepi::ckw_negativity_report(psi);
        kv.emplace_back("n_a_bc", format_double(std::sqrt(report.focus[0].sq_focus_rest)));
        kv.emplace_back("n_b_ac", format_double(std::sqrt(report.focus[1].sq_focus_rest)));
        kv.emplace_back("n_c_ab", format_double(std::sqrt(report.focus[2].sq_focus_rest)));
        kv.emplace_back("n_ab", format_double(std::sqrt(report.focus[0].sq_pair_first)));
        kv.emplace_back("n_ac", format_double(std::sqrt(report.focus[0].sq_pair_second)));
        kv.emplace_back("n_bc", format_double(std::sqrt(report.focus[1].sq_pair_second)));
        kv.emplace_back("pi_a", format_double(report.pi_a));
        kv.emplace_back("pi_b", format_double(report.pi_b));
        kv.emplace_back("pi_c", format_double(report.pi_c));
        kv.emplace_back("pi_abc", format_double(report.pi_abc));
        kv.emplace_back("tau_abc", format_double(report.tau_abc));
        return kv;
    }
    // n >= 4: one-vs-rest cuts, pairwise negativities, per-focus residuals.
    for (int q = 0; q < n; ++q) {
        kv.emplace_back("n_" + std::to_string(q) + "_rest",
                        format_double(threepi::negativity(rho, {q})));
    }
    for (int q = 0; q < n; ++q) {
        for (int r = q + 1; r < n; ++r) {
            const threepi::DensityMatrix pair = threepi::reduced_density(rho, {q, r});
            kv.emplace_back("n_" + std::to_string(q) + std::to_string(r),
                            format_double(threepi::negativity(pair, {0})));
        }
    }
    for (int q = 0; q < n; ++q) {
        kv.emplace_back("residual_" + std::to_string(q),
                        format_double(threepi::n_qubit_negativity_residual(psi, q)));
    }
    return kv;
}

int run_measure(const StateOptions& state_opts, const OutputOptions& out_opts) {
    const PureState psi = load_state(state_opts);
    Output output(out_opts.path);
    emit_kv(output.stream(), measure_rows(psi), out_opts.format);
    return 0;
}

int run_sweep_w(int resolution, const OutputOptions& out_opts) {
    const auto records = threepi::sweep_w(resolution);
    Output output(out_opts.path);
    const OutputFormat fmt =
        out_opts.format == "json-lines" ? OutputFormat::json_lines : OutputFormat::csv;
    threepi::write_w_sweep(output.stream(), records, fmt);
    return 0;
}

int run_sweep_ghzw(const std::string& sign_text, int p_steps, const OutputOptions& out_opts) {
    const threepi::Sign sign = (sign_text == "-" || sign_text == "minus")
                                   ? threepi::Sign::minus
                                   : threepi::Sign::plus;
    const auto records = threepi::sweep_ghzw(sign, p_steps);
    Output output(out_opts.path);
    const OutputFormat fmt =
        out_opts.format == "json-lines" ? OutputFormat::json_lines : OutputFormat::csv;
    threepi::write_ghzw_sweep(output.stream(), records, fmt);
    return 0;
}

int run_verify(std::size_t samples, std::uint64_t seed, const std::string& checks_csv,
               const OutputOptions& out_opts) {
    threepi::CampaignConfig config;
    config.samples = samples;
    config.seed = seed;
    config.checks = checks_csv.empty() ? threepi::kAllChecks : threepi::parse_checks(checks_csv);

    const threepi::CampaignStats stats = threepi::run_campaign(config);
    Output output(out_opts.path);
    emit_kv(output.stream(), threepi::campaign_stats_rows(stats), out_opts.format);
    return stats.violations == 0 ? 0 : 1;
}

int run_classify(const StateOptions& state_opts, double tol, const OutputOptions& out_opts) {
    const PureState psi = load_state(state_opts);
    const threepi::SloccClass cls = threepi::classify_slocc(psi, tol);
    Output output(out_opts.path);
    output.stream() << threepi::slocc_label(cls) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement measures for few-qubit states: negativity monogamy, "
                 "three-pi, three-tangle, SLOCC classification"};
    app.require_subcommand(1);

    StateOptions measure_state, classify_state;
    OutputOptions measure_out, sweep_w_out, sweep_ghzw_out, verify_out, classify_out;
    int resolution = 101;
    int p_steps = 101;
    std::string sign_text = "-";
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::string checks_csv;
    double classify_tol = 1e-9;

    CLI::App* measure = app.add_subcommand(
        "measure", "Evaluate negativities, residuals, and the three-tangle of a state");
    add_state_options(measure, measure_state);
    add_output_options(measure, measure_out);

    CLI::App* sweep_w_cmd = app.add_subcommand(
        "sweep-w", "Three-pi over the W-class simplex grid (columns beta,gamma,pi_abc)");
    sweep_w_cmd->add_option("--resolution", resolution, "Grid points per axis")
        ->check(CLI::Range(2, 100000));
    add_output_options(sweep_w_cmd, sweep_w_out);

    CLI::App* sweep_ghzw_cmd = app.add_subcommand(
        "sweep-ghzw",
        "Three-pi, three-tangle, and squared negativity along sqrt(p)|GHZ> +/- sqrt(1-p)|W>");
    sweep_ghzw_cmd->add_option("--sign", sign_text, "Superposition sign: + or -")
        ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    sweep_ghzw_cmd->add_option("--p-steps", p_steps, "Number of p grid points")
        ->check(CLI::Range(2, 100000));
    add_output_options(sweep_ghzw_cmd, sweep_ghzw_out);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run seeded randomized verification campaigns (exit 1 on any violation)");
    verify->add_option("--samples", samples, "Sample count")->check(CLI::Range(std::size_t(1), std::size_t(100000000)));
    verify->add_option("--seed", seed, "Campaign seed");
    verify->add_option("--checks", checks_csv,
                       "Comma-separated subset of monogamy,n_le_c,domination,povm,lu");
    add_output_options(verify, verify_out);

    CLI::App* classify = app.add_subcommand(
        "classify", "Print the SLOCC class of a three-qubit state");
    add_state_options(classify, classify_state);
    classify->add_option("--tol", classify_tol, "Purity tolerance for reduced states");
    add_output_options(classify, classify_out, /*format_flag=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 4;
    }

    try {
        if (app.got_subcommand(measure)) {
            if (measure_state.name.empty() && measure_state.expr.empty()) {
                std::cerr << "measure requires --state or --expr\n";
                return 4;
            }
            return run_measure(measure_state, measure_out);
        }
        if (app.got_subcommand(sweep_w_cmd)) return run_sweep_w(resolution, sweep_w_out);
        if (app.got_subcommand(sweep_ghzw_cmd))
            return run_sweep_ghzw(sign_text, p_steps, sweep_ghzw_out);
        if (app.got_subcommand(verify)) return run_verify(samples, seed, checks_csv, verify_out);
        if (app.got_subcommand(classify)) {
            if (classify_state.name.empty() && classify_state.expr.empty()) {
                std::cerr << "classify requires --state or --expr\n";
                return 4;
            }
            return run_classify(classify_state, classify_tol, classify_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
