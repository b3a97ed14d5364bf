// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_GEOMETRY_HPP
#define EB_CORE_GEOMETRY_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace eb {

// Staggered planar antenna array in the y-z plane, phase center at the origin.
// Columns advance along +y with half-wavelength pitch; elements within a
// column advance along +z with 0.7-wavelength pitch; odd columns are shifted
// up by half the vertical pitch.
struct ArrayGeometry {
    std::vector<Vec3> element_positions; // meters, centroid at origin
    double carrier_frequency = 0.0;      // Hz
    double wavelength = 0.0;             // m
    int columns = 0;
    int rows_per_column = 0;

    int num_elements() const { return static_cast<int>(element_positions.size()); }
    double horizontal_pitch() const { return wavelength / 2.0; }
    double vertical_pitch() const { return 0.7 * wavelength; }
};

struct CellLayout {
    std::vector<Vec2> site_positions;       // m
    double inter_site_distance = 0.0;       // m
    int sectors_per_site = 3;
    double tower_height = 0.0;              // m
    std::vector<double> boresight_azimuths; // degrees, one per sector
    double downtilt = 0.0;                  // degrees
};

struct ObservationGrid {
    std::vector<Vec3> points; // m, deterministic row-major order
    double height_min = 0.0;
    double height_max = 0.0;
    int sector_id = 0;

    int size() const { return static_cast<int>(points.size()); }
};

struct DepartureAngles {
    double azimuth = 0.0;   // degrees relative to boresight, in (-180, 180]
    double elevation = 0.0; // degrees relative to horizontal, negative below
    double distance = 0.0;  // m from the array reference point
};

ArrayGeometry build_array(int columns, int rows, double carrier_frequency);

// Center site + `rings` hexagonal rings (rings = 2 gives the 19-site layout),
// tri-sector, boresights at 0/120/240 degrees.
CellLayout build_hex_layout(double inter_site_distance, int rings, double tower_height,
                            double downtilt);

// The 120-degree wedge of the hexagonal cell facing the sector boresight.
// Vertices: site center plus the three hexagon corners at boresight and
// boresight +/- 60 degrees, at the cell circumradius isd/sqrt(3).
std::vector<Vec2> sector_polygon(const CellLayout& layout, int sector_id);

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& polygon);

// Regular lattice clipped to the sector polygon. Points closer than
// min_distance (horizontal) to the site are excluded. Ordering is
// deterministic: by x, then y, then height.
ObservationGrid build_observation_grid(const CellLayout& layout, int sector_id,
                                       double horizontal_spacing,
                                       const std::vector<double>& height_levels,
                                       double min_distance = 0.0);

DepartureAngles departure_geometry(const Vec3& array_origin, double boresight_deg,
                                   const Vec3& point);

// One row per entry: index,x,y,z
std::string positions_to_csv(const std::vector<Vec3>& positions);

} // namespace eb

#endif
