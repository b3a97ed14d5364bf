// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_PATTERNS_HPP
#define EB_CORE_PATTERNS_HPP

#include <string>
#include <vector>

#include "geometry.hpp"
#include "types.hpp"

namespace eb {

struct BeamPattern {
    std::vector<double> azimuth_deg;   // strictly increasing
    std::vector<double> elevation_deg; // strictly increasing
    RMatrix gain_db;                   // elevation rows x azimuth cols
    double weight_norm = 0.0;
};

struct ElementPowerMap {
    RMatrix power;      // rows_per_column x columns, peak-normalized to 1
    double total = 0.0; // sum of unnormalized |w_n|^2 = ||w||^2
};

// Far-field unit response a_n = exp(+j 2 pi (u . p_n) / lambda), with u the
// unit direction at (azimuth, elevation) and p_n the element position.
CVector steering_vector(const ArrayGeometry& array, double azimuth_deg, double elevation_deg);

std::vector<double> degree_range(double start, double stop, double step);

BeamPattern beam_pattern(const ArrayGeometry& array, const CVector& weights,
                         const std::vector<double>& azimuth_grid,
                         const std::vector<double>& elevation_grid);

ElementPowerMap element_power(const ArrayGeometry& array, const CVector& weights);

// (azimuth, elevation, gain_dB) triples, gain clamped at -60 dB for export.
std::string pattern_to_csv(const BeamPattern& pattern);
std::string power_map_to_csv(const ElementPowerMap& map);

} // namespace eb

#endif
