// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_NETMAP_HPP
#define EB_CORE_NETMAP_HPP

#include <string>
#include <vector>

#include "geometry.hpp"
#include "types.hpp"

namespace eb {

// Parabolic sector antenna model with a front-to-back floor.
struct SectorPattern {
    double horizontal_beamwidth = 65.0; // 3 dB, degrees
    double vertical_beamwidth = 10.0;   // 3 dB, degrees
    double front_to_back = 30.0;        // A_m, dB
    double max_gain = 15.0;             // dBi
    double downtilt = 6.0;              // degrees
};

struct SinrMap {
    std::vector<Vec2> points;        // m
    std::vector<double> sinr_db;
    std::vector<int> serving_sector; // global index = site * sectors_per_site + sector
    double noise_power_dbm = 0.0;
};

struct LinkBudget {
    double tx_power_w = 20.0;
    double bandwidth_hz = 5e6;
    double carrier_frequency_hz = 2e9;
    double path_loss_exponent = 3.76;
    double noise_figure_db = 9.0;
    double rx_height_m = 1.5;
};

// gain = max_gain - min(12 (daz/hbw)^2 + 12 (del/vbw)^2, A_m), angles
// measured off the downtilted boresight.
double sector_gain(const SectorPattern& pattern, double az_off_deg, double el_off_deg);

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

SinrMap compute_sinr_map(const CellLayout& layout, const SectorPattern& pattern,
                         const LinkBudget& budget, const std::vector<Vec2>& grid);

// Rectangular lattice covering the layout plus one cell radius of margin.
std::vector<Vec2> netmap_grid(const CellLayout& layout, double spacing);

std::string sinr_map_to_csv(const SinrMap& map);

} // namespace eb

#endif
