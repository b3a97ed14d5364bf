// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_CONFIG_HPP
#define EB_CORE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace eb {

// Flat sectioned key-value experiment configuration. Defaults reproduce the
// reference scenario: 2 GHz, 4x12 staggered array, 1.732 km ISD, 32 m tower,
// 20 W, 5 MHz, 6 degree downtilt.
struct ExperimentConfig {
    // [geometry]
    int columns = 4;
    int rows = 12;
    double carrier_frequency_hz = 2e9;
    double inter_site_distance_m = 1732.0;
    double tower_height_m = 32.0;
    double grid_spacing_m = 38.5;
    double grid_min_distance_m = 100.0;
    std::vector<double> height_levels_m = {1.5, 5.0, 8.5};

    // [channel]
    double path_loss_exponent = 2.0;
    std::string scatter_model = "diagonal-fading";
    int subbands = 25;
    std::uint64_t seed = 1;

    // [analysis]
    int rank_budget = 4;
    int rf_chains = 4;

    // [netmap]
    int rings = 2;
    int sectors = 3;
    double tx_power_w = 20.0;
    double bandwidth_hz = 5e6;
    double downtilt_deg = 6.0;
    double noise_figure_db = 9.0;
    double map_spacing_m = 50.0;
    double netmap_path_loss_exponent = 3.76;
    double horizontal_beamwidth_deg = 65.0;
    double vertical_beamwidth_deg = 10.0;
    double front_to_back_db = 30.0;
    double max_gain_dbi = 15.0;
    double rx_height_m = 1.5;

    // [output]
    std::string output_directory = "out";

    bool operator==(const ExperimentConfig&) const = default;
};

// Parses the sectioned key=value text. Unspecified keys keep their defaults;
// unknown keys and malformed values fail with the offending line number.
ExperimentConfig parse_config(const std::string& text);

// Canonical serialization; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

// Range checks beyond syntax (positive physical quantities, rank <= N).
void validate_config(const ExperimentConfig& config);

} // namespace eb

#endif
