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

#include "eqfid_cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "eqfid/errors.h"
#include "eqfid/montecarlo.h"
#include "eqfid/povm.h"
#include "eqfid/strategy.h"
#include "eqfid/verification.h"
#include "output_format.h"

namespace eqfid::cli {

namespace {

/// Thrown when an output file cannot be written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::filesystem::path resolve_output(const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char *dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    auto path = resolve_output(out_path);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open output file " + path.string());
    }
    f << text;
    if (!f.flush()) {
        throw IoError("failed writing output file " + path.string());
    }
}

Format parse_format(const std::string &text) {
    if (text == "csv") {
        return Format::kCsv;
    }
    if (text == "json") {
        return Format::kJson;
    }
    throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

double parse_radians(const std::string &text, bool degrees) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw UsageError("invalid phase '" + text + "'");
    }
    return degrees ? Phase::from_degrees(v).value() : v;
}

PhaseSource parse_phase_source(const std::string &text, bool degrees) {
    if (text == "uniform") {
        return PhaseSource::uniform();
    }
    return PhaseSource::at(Phase(parse_radians(text, degrees)));
}

struct CurvesArgs {
    int n_min = 1;
    int n_max = 10;
    std::string format = "csv";
    std::string out;
    bool gnuplot = false;
};

struct SimulateArgs {
    std::string strategy;
    int n = 1;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string phase_a = "uniform";
    std::string phase_b = "uniform";
    std::string mixed_mode = "analytic";
    std::string format = "json";
    std::string out;
    bool degrees = false;
};

struct PovmArgs {
    int n = 1;
    std::string phase = "0";
    std::string format = "csv";
    std::string out;
    bool degrees = false;
};

struct VerifyArgs {
    int n_max = 30;
};

int cmd_curves(const CurvesArgs &a, std::ostream &out) {
    Format format = parse_format(a.format);
    if (a.gnuplot && (a.out.empty() || format != Format::kCsv)) {
        throw UsageError("--gnuplot needs --out and csv format");
    }
    auto rows = curve_table(a.n_min, a.n_max);
    emit(format == Format::kCsv ? curves_csv(rows) : curves_json(rows), a.out, out);
    if (a.gnuplot) {
        emit(curves_gnuplot(resolve_output(a.out).string()), a.out + ".gp", out);
    }
    return kExitOk;
}

int cmd_simulate(const SimulateArgs &a, std::ostream &out) {
    Format format = parse_format(a.format);
    TrialConfig config;
    auto strategy = parse_strategy(a.strategy);
    if (!strategy) {
        throw UsageError("unknown strategy '" + a.strategy + "'");
    }
    auto mode = parse_mixed_mode(a.mixed_mode);
    if (!mode) {
        throw UsageError("unknown mixed mode '" + a.mixed_mode + "' (expected analytic or full)");
    }
    config.strategy = *strategy;
    config.mixed_mode = *mode;
    config.n_copies = a.n;
    config.trials = a.trials;
    config.seed = a.seed;
    config.phase_a = parse_phase_source(a.phase_a, a.degrees);
    config.phase_b = parse_phase_source(a.phase_b, a.degrees);
    config.validate();
    TrialReport report = simulate(config);
    emit(format == Format::kJson ? report_json(config, report) : report_csv(config, report), a.out, out);
    return kExitOk;
}

int cmd_povm(const PovmArgs &a, std::ostream &out) {
    Format format = parse_format(a.format);
    Phase phase(parse_radians(a.phase, a.degrees));
    auto dist = outcome_distribution(a.n, phase);
    emit(format == Format::kCsv ? povm_csv(a.n, dist) : povm_json(a.n, phase, dist), a.out, out);
    return kExitOk;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    auto results = run_invariant_suite(a.n_max);
    bool all = true;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) {
            out << ": " << r.detail;
        }
        out << "\n";
        all = all && r.passed;
    }
    out << (all ? "all checks passed" : "verification failed") << "\n";
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fidelity estimation between finite ensembles of equatorial qubits"};
    app.require_subcommand(1);

    CurvesArgs curves;
    auto *c = app.add_subcommand("curves", "Strategy probability table for a range of ensemble sizes");
    c->add_option("--n-min", curves.n_min, "Smallest ensemble size");
    c->add_option("--n-max", curves.n_max, "Largest ensemble size");
    c->add_option("--format", curves.format, "csv or json");
    c->add_option("--out", curves.out, "Output file (default stdout)");
    c->add_flag("--gnuplot", curves.gnuplot, "Also write <out>.gp plotting the CSV");

    SimulateArgs sim;
    auto *s = app.add_subcommand("simulate", "Monte Carlo run of one estimation strategy");
    s->add_option("--strategy", sim.strategy, "measurement, unified-pair or unified-collective")->required();
    s->add_option("--n", sim.n, "Copies per ensemble");
    s->add_option("--trials", sim.trials, "Number of trials");
    s->add_option("--seed", sim.seed, "64-bit seed");
    s->add_option("--phase-a", sim.phase_a, "Radians, or 'uniform'");
    s->add_option("--phase-b", sim.phase_b, "Radians, or 'uniform'");
    s->add_option("--mixed-mode", sim.mixed_mode, "analytic or full");
    s->add_option("--format", sim.format, "json or csv");
    s->add_option("--out", sim.out, "Output file (default stdout)");
    s->add_flag("--degrees", sim.degrees, "Read phases in degrees");

    PovmArgs povm;
    auto *p = app.add_subcommand("povm", "Outcome distribution and phase estimates of the optimal POVM");
    p->add_option("--n", povm.n, "Copies");
    p->add_option("--phase", povm.phase, "True phase (radians)");
    p->add_option("--format", povm.format, "csv or json");
    p->add_option("--out", povm.out, "Output file (default stdout)");
    p->add_flag("--degrees", povm.degrees, "Read the phase in degrees");

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "Run the cross-module invariant suite");
    v->add_option("--n-max", verify.n_max, "Largest ensemble size checked");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_curves(curves, out);
        }
        if (s->parsed()) {
            return cmd_simulate(sim, out);
        }
        if (p->parsed()) {
            return cmd_povm(povm, out);
        }
        return cmd_verify(verify, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace eqfid::cli
