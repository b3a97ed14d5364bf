// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "patterns.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace eb {

CVector steering_vector(const ArrayGeometry& array, double azimuth_deg, double elevation_deg) {
    const double az = deg2rad(azimuth_deg);
    const double el = deg2rad(elevation_deg);
    const Vec3 u(std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el));
    const double k0 = 2.0 * kPi / array.wavelength;

    CVector a(array.num_elements());
    for (Eigen::Index n = 0; n < a.size(); ++n)
        a(n) = std::polar(1.0, k0 * u.dot(array.element_positions[static_cast<std::size_t>(n)]));
    return a;
}

std::vector<double> degree_range(double start, double stop, double step) {
    if (!(step > 0.0) || stop < start)
        throw invalid_parameter_error("degree_range: need stop >= start and step > 0");
    std::vector<double> out;
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    out.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) out.push_back(start + i * step);
    return out;
}

BeamPattern beam_pattern(const ArrayGeometry& array, const CVector& weights,
                         const std::vector<double>& azimuth_grid,
                         const std::vector<double>& elevation_grid) {
    if (weights.size() != array.num_elements())
        throw shape_error("beam_pattern: weight length does not match array");
    const double wnorm = weights.norm();
    if (!(wnorm > 0.0)) throw invalid_parameter_error("beam_pattern: zero weight vector");
    if (azimuth_grid.empty() || elevation_grid.empty())
        throw invalid_parameter_error("beam_pattern: empty angle grid");

    BeamPattern p;
    p.azimuth_deg = azimuth_grid;
    p.elevation_deg = elevation_grid;
    p.weight_norm = wnorm;
    p.gain_db.resize(static_cast<Eigen::Index>(elevation_grid.size()),
                     static_cast<Eigen::Index>(azimuth_grid.size()));
    const double wnorm2 = wnorm * wnorm;
    for (std::size_t ei = 0; ei < elevation_grid.size(); ++ei) {
        for (std::size_t ai = 0; ai < azimuth_grid.size(); ++ai) {
            const CVector a = steering_vector(array, azimuth_grid[ai], elevation_grid[ei]);
            const double g = std::norm(a.dot(weights)) / wnorm2;
            p.gain_db(static_cast<Eigen::Index>(ei), static_cast<Eigen::Index>(ai)) =
                10.0 * std::log10(g);
        }
    }
    return p;
}

ElementPowerMap element_power(const ArrayGeometry& array, const CVector& weights) {
    if (weights.size() != array.num_elements())
        throw shape_error("element_power: weight length does not match array");

    ElementPowerMap map;
    map.power.setZero(array.rows_per_column, array.columns);
    double peak = 0.0;
    for (int c = 0; c < array.columns; ++c) {
        for (int r = 0; r < array.rows_per_column; ++r) {
            // build_array emits elements column-major: element index = c*rows + r
            const double pw = std::norm(weights(c * array.rows_per_column + r));
            map.power(r, c) = pw;
            peak = std::max(peak, pw);
        }
    }
    map.total = map.power.sum();
    if (peak > 0.0) map.power /= peak;
    return map;
}

std::string pattern_to_csv(const BeamPattern& pattern) {
    std::ostringstream os;
    os.precision(17);
    os << "azimuth_deg,elevation_deg,gain_db\n";
    for (std::size_t ei = 0; ei < pattern.elevation_deg.size(); ++ei)
        for (std::size_t ai = 0; ai < pattern.azimuth_deg.size(); ++ai) {
            const double g = pattern.gain_db(static_cast<Eigen::Index>(ei),
                                             static_cast<Eigen::Index>(ai));
            os << pattern.azimuth_deg[ai] << ',' << pattern.elevation_deg[ei] << ','
               << std::max(g, -60.0) << '\n';
        }
    return os.str();
}

std::string power_map_to_csv(const ElementPowerMap& map) {
    std::ostringstream os;
    os.precision(17);
    for (Eigen::Index r = 0; r < map.power.rows(); ++r) {
        for (Eigen::Index c = 0; c < map.power.cols(); ++c) {
            if (c) os << ',';
            os << map.power(r, c);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace eb
