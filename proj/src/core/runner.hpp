// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_RUNNER_HPP
#define EB_CORE_RUNNER_HPP

#include <filesystem>
#include <string>

#include "config.hpp"

namespace eb {

struct SvdReportSummary {
    int num_points = 0;
    int num_elements = 0;
    double power_at_rank4 = 0.0;
    double power_at_rank8 = 0.0;
};

struct EquivalenceSummary {
    double max_residual = 0.0;
    double mean_residual = 0.0;
    bool pass = false;
};

// Each command writes its CSV outputs under out_dir (created if missing) and
// returns the headline numbers. Outputs are byte-deterministic for a fixed
// config.

// singular_values.csv, cumulative_power.csv, svd_summary.txt
SvdReportSummary run_svd_report(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir);

// equivalence_residuals.csv, equivalence_summary.txt, schedule.csv.
// perturb_beams deliberately corrupts W as a negative control.
EquivalenceSummary run_equivalence(const ExperimentConfig& config,
                                   const std::filesystem::path& out_dir,
                                   bool perturb_beams = false);

// pattern_beam<i>.csv and element_power_beam<i>.csv for i = 1..t
void run_patterns(const ExperimentConfig& config, const std::filesystem::path& out_dir);

// sinr_map.csv
void run_sinr_map(const ExperimentConfig& config, const std::filesystem::path& out_dir);

} // namespace eb

#endif
