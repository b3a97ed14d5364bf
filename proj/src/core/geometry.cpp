// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace eb {

ArrayGeometry build_array(int columns, int rows, double carrier_frequency) {
    if (columns < 1 || rows < 1)
        throw invalid_parameter_error("build_array: columns and rows must be >= 1");
    if (!(carrier_frequency > 0.0))
        throw invalid_parameter_error("build_array: carrier frequency must be positive");

    ArrayGeometry a;
    a.carrier_frequency = carrier_frequency;
    a.wavelength = kSpeedOfLight / carrier_frequency;
    a.columns = columns;
    a.rows_per_column = rows;

    const double dh = a.horizontal_pitch();
    const double dv = a.vertical_pitch();
    a.element_positions.reserve(static_cast<std::size_t>(columns) * rows);
    for (int c = 0; c < columns; ++c) {
        const double stagger = (c % 2 == 1) ? 0.5 * dv : 0.0;
        for (int r = 0; r < rows; ++r)
            a.element_positions.emplace_back(0.0, c * dh, r * dv + stagger);
    }

    Vec3 centroid = Vec3::Zero();
    for (const auto& p : a.element_positions) centroid += p;
    centroid /= static_cast<double>(a.element_positions.size());
    for (auto& p : a.element_positions) p -= centroid;
    return a;
}

CellLayout build_hex_layout(double inter_site_distance, int rings, double tower_height,
                            double downtilt) {
    if (!(inter_site_distance > 0.0))
        throw invalid_parameter_error("build_hex_layout: inter-site distance must be positive");
    if (rings < 0) throw invalid_parameter_error("build_hex_layout: rings must be >= 0");

    CellLayout layout;
    layout.inter_site_distance = inter_site_distance;
    layout.tower_height = tower_height;
    layout.downtilt = downtilt;
    layout.sectors_per_site = 3;
    layout.boresight_azimuths = {0.0, 120.0, 240.0};

    // Axial hex-grid coordinates; neighbors are exactly one ISD apart.
    const double d = inter_site_distance;
    const Vec2 e1(d, 0.0);
    const Vec2 e2(d * 0.5, d * std::sqrt(3.0) / 2.0);
    for (int q = -rings; q <= rings; ++q) {
        for (int r = -rings; r <= rings; ++r) {
            if (std::abs(q + r) > rings) continue;
            layout.site_positions.emplace_back(q * e1 + r * e2);
        }
    }
    return layout;
}

std::vector<Vec2> sector_polygon(const CellLayout& layout, int sector_id) {
    if (sector_id < 0 || sector_id >= layout.sectors_per_site)
        throw invalid_parameter_error("sector_polygon: sector id out of range");
    const double circumradius = layout.inter_site_distance / std::sqrt(3.0);
    const double bore = layout.boresight_azimuths[static_cast<std::size_t>(sector_id)];
    std::vector<Vec2> poly;
    poly.emplace_back(0.0, 0.0);
    for (double off : {-60.0, 0.0, 60.0}) {
        const double a = deg2rad(bore + off);
        poly.emplace_back(circumradius * std::cos(a), circumradius * std::sin(a));
    }
    return poly;
}

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& polygon) {
    // Ray crossing test; boundary points count as inside on the lower edge.
    bool inside = false;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = polygon[i];
        const Vec2& b = polygon[j];
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double x_cross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < x_cross) inside = !inside;
        }
    }
    return inside;
}

ObservationGrid build_observation_grid(const CellLayout& layout, int sector_id,
                                       double horizontal_spacing,
                                       const std::vector<double>& height_levels,
                                       double min_distance) {
    if (!(horizontal_spacing > 0.0))
        throw invalid_parameter_error("build_observation_grid: spacing must be positive");
    if (height_levels.empty())
        throw invalid_parameter_error("build_observation_grid: no height levels");
    for (double h : height_levels)
        if (h < 0.0 || h > 10.0)
            throw invalid_parameter_error("build_observation_grid: heights must lie in [0, 10] m");

    const auto poly = sector_polygon(layout, sector_id);
    const double circumradius = layout.inter_site_distance / std::sqrt(3.0);

    ObservationGrid grid;
    grid.sector_id = sector_id;
    grid.height_min = *std::min_element(height_levels.begin(), height_levels.end());
    grid.height_max = *std::max_element(height_levels.begin(), height_levels.end());

    const long steps = static_cast<long>(std::floor(2.0 * circumradius / horizontal_spacing));
    for (long ix = 0; ix <= steps; ++ix) {
        const double x = -circumradius + ix * horizontal_spacing;
        for (long iy = 0; iy <= steps; ++iy) {
            const double y = -circumradius + iy * horizontal_spacing;
            if (std::hypot(x, y) < min_distance) continue;
            if (!point_in_polygon(Vec2(x, y), poly)) continue;
            for (double h : height_levels) grid.points.emplace_back(x, y, h);
        }
    }
    if (grid.points.empty())
        throw empty_grid_error("build_observation_grid: no lattice point falls inside the sector");
    return grid;
}

DepartureAngles departure_geometry(const Vec3& array_origin, double boresight_deg,
                                   const Vec3& point) {
    const Vec3 delta = point - array_origin;
    const double dist = delta.norm();
    if (dist == 0.0)
        throw invalid_parameter_error("departure_geometry: point coincides with the array origin");

    DepartureAngles out;
    out.distance = dist;
    const double horiz = std::hypot(delta.x(), delta.y());
    if (horiz == 0.0) {
        out.azimuth = 0.0;
        out.elevation = (delta.z() > 0.0) ? 90.0 : -90.0;
    } else {
        out.azimuth = wrap_deg(rad2deg(std::atan2(delta.y(), delta.x())) - boresight_deg);
        out.elevation = rad2deg(std::atan2(delta.z(), horiz));
    }
    return out;
}

std::string positions_to_csv(const std::vector<Vec3>& positions) {
    std::ostringstream os;
    os.precision(17);
    os << "index,x,y,z\n";
    for (std::size_t i = 0; i < positions.size(); ++i)
        os << i << ',' << positions[i].x() << ',' << positions[i].y() << ',' << positions[i].z()
           << '\n';
    return os.str();
}

} // namespace eb
