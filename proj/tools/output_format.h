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

#ifndef EQFID_TOOLS_OUTPUT_FORMAT_H
#define EQFID_TOOLS_OUTPUT_FORMAT_H

#include <string>
#include <vector>

#include "eqfid/montecarlo.h"
#include "eqfid/povm.h"
#include "eqfid/strategy.h"

namespace eqfid::cli {

enum class Format { kCsv, kJson };

/// 17 significant digits, '.' separator; parses back to the same double.
std::string format_double(double x);

/// Column order is part of the file format; only append new columns.
inline const std::vector<std::string> kCurveColumns = {
    "N", "f_bar", "f_eqcm", "f_cnot", "f_gcnot", "p_measurement", "p_cloning", "p_unified_pair", "p_unified_collective",
};

std::string curves_csv(const std::vector<StrategyCurvePoint> &rows);
std::string curves_json(const std::vector<StrategyCurvePoint> &rows);

/// Gnuplot script drawing the measurement (dots) and collective (squares)
/// columns of a curves CSV.
std::string curves_gnuplot(const std::string &csv_path);

std::string report_json(const TrialConfig &config, const TrialReport &report);
std::string report_csv(const TrialConfig &config, const TrialReport &report);

std::string povm_csv(int n_copies, const OutcomeDistribution &dist);
std::string povm_json(int n_copies, Phase phase, const OutcomeDistribution &dist);

}  // namespace eqfid::cli

#endif
