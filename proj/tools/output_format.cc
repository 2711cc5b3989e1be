// Copyright 2026 The eqfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "output_format.h"

#include <fmt/format.h>
#include <json.hpp>

namespace eqfid::cli {

namespace {

using nlohmann::ordered_json;

ordered_json phase_source_json(const PhaseSource &source) {
    if (source.is_uniform()) {
        return "uniform";
    }
    return source.fixed->value();
}

std::string phase_source_text(const PhaseSource &source) {
    return source.is_uniform() ? std::string("uniform") : format_double(source.fixed->value());
}

std::string join_tallies(const std::vector<std::uint64_t> &tallies) {
    return fmt::format("{}", fmt::join(tallies, ";"));
}

}  // namespace

std::string format_double(double x) {
    return fmt::format("{:.17g}", x);
}

std::string curves_csv(const std::vector<StrategyCurvePoint> &rows) {
    std::string out = fmt::format("{}\n", fmt::join(kCurveColumns, ","));
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.n_copies, format_double(r.f_bar), format_double(r.f_eqcm),
                           format_double(r.f_cnot), format_double(r.f_gcnot), format_double(r.p_measurement),
                           format_double(r.p_cloning), format_double(r.p_unified_pair),
                           format_double(r.p_unified_collective));
    }
    return out;
}

std::string curves_json(const std::vector<StrategyCurvePoint> &rows) {
    ordered_json arr = ordered_json::array();
    for (const auto &r : rows) {
        arr.push_back({
            {"n", r.n_copies},
            {"f_bar", r.f_bar},
            {"f_eqcm", r.f_eqcm},
            {"f_cnot", r.f_cnot},
            {"f_gcnot", r.f_gcnot},
            {"p_measurement", r.p_measurement},
            {"p_cloning", r.p_cloning},
            {"p_unified_pair", r.p_unified_pair},
            {"p_unified_collective", r.p_unified_collective},
        });
    }
    return ordered_json{{"curves", arr}}.dump(2) + "\n";
}

std::string curves_gnuplot(const std::string &csv_path) {
    return fmt::format(
        "set datafile separator ','\n"
        "set key bottom right\n"
        "set xlabel 'N'\n"
        "set ylabel 'probability to reconstruct the fidelity'\n"
        "set terminal pngcairo size 800,600\n"
        "set output '{0}.png'\n"
        "plot '{0}' using 1:6 skip 1 with points pt 7 title 'measurement-based', \\\n"
        "     '{0}' using 1:9 skip 1 with points pt 5 title 'collective unified'\n",
        csv_path);
}

std::string report_json(const TrialConfig &config, const TrialReport &report) {
    ordered_json j;
    j["config"] = {
        {"strategy", to_string(config.strategy)},
        {"n", config.n_copies},
        {"trials", config.trials},
        {"seed", config.seed},
        {"phase_a", phase_source_json(config.phase_a)},
        {"phase_b", phase_source_json(config.phase_b)},
        {"mixed_mode", to_string(config.mixed_mode)},
    };
    j["mean_overlap_product"] = report.mean_overlap_product;
    j["overlap_standard_error"] = report.overlap_standard_error;
    j["analytic_reference"] = analytic_reference(config);
    j["mean_abs_fidelity_error"] = report.mean_abs_fidelity_error;
    j["fidelity_error_standard_error"] = report.fidelity_error_standard_error;
    j["gate_factor"] = report.gate_factor;
    j["outcome_tallies"] = report.outcome_tallies;
    j["perp_probability"] = report.perp_probability ? ordered_json(*report.perp_probability) : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

std::string report_csv(const TrialConfig &config, const TrialReport &report) {
    std::string header =
        "strategy,n,trials,seed,phase_a,phase_b,mixed_mode,mean_overlap_product,overlap_standard_error,"
        "analytic_reference,mean_abs_fidelity_error,fidelity_error_standard_error,gate_factor,perp_probability";
    std::string row = fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}", to_string(config.strategy), config.n_copies, config.trials,
        config.seed, phase_source_text(config.phase_a), phase_source_text(config.phase_b),
        to_string(config.mixed_mode), format_double(report.mean_overlap_product),
        format_double(report.overlap_standard_error), format_double(analytic_reference(config)),
        format_double(report.mean_abs_fidelity_error), format_double(report.fidelity_error_standard_error),
        format_double(report.gate_factor), report.perp_probability ? format_double(*report.perp_probability) : "");
    for (std::size_t r = 0; r < report.outcome_tallies.size(); ++r) {
        header += fmt::format(",tallies_{}", r);
        row += "," + join_tallies(report.outcome_tallies[r]);
    }
    return header + "\n" + row + "\n";
}

std::string povm_csv(int n_copies, const OutcomeDistribution &dist) {
    std::string out = "k,probability,phase_estimate\n";
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        out += fmt::format("{},{},{}\n", k, format_double(dist.probabilities[k]),
                           format_double(estimate_phase(static_cast<int>(k), n_copies).value()));
    }
    return out;
}

std::string povm_json(int n_copies, Phase phase, const OutcomeDistribution &dist) {
    std::vector<double> estimates;
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        estimates.push_back(estimate_phase(static_cast<int>(k), n_copies).value());
    }
    ordered_json j{
        {"n", n_copies},
        {"phase", phase.value()},
        {"probabilities", dist.probabilities},
        {"phase_estimates", estimates},
    };
    return j.dump(2) + "\n";
}

}  // namespace eqfid::cli
