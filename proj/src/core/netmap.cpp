// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "netmap.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "channel.hpp"
#include "errors.hpp"

namespace eb {

double sector_gain(const SectorPattern& pattern, double az_off_deg, double el_off_deg) {
    if (!(pattern.horizontal_beamwidth > 0.0) || !(pattern.vertical_beamwidth > 0.0))
        throw invalid_parameter_error("sector_gain: beamwidths must be positive");
    if (!(pattern.front_to_back > 0.0))
        throw invalid_parameter_error("sector_gain: front-to-back floor must be positive");
    const double daz = wrap_deg(az_off_deg) / pattern.horizontal_beamwidth;
    const double del = el_off_deg / pattern.vertical_beamwidth;
    const double attenuation = 12.0 * daz * daz + 12.0 * del * del;
    return pattern.max_gain - std::min(attenuation, pattern.front_to_back);
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

std::vector<Vec2> netmap_grid(const CellLayout& layout, double spacing) {
    if (!(spacing > 0.0)) throw invalid_parameter_error("netmap_grid: spacing must be positive");
    double extent = 0.0;
    for (const auto& s : layout.site_positions) extent = std::max(extent, s.norm());
    extent += layout.inter_site_distance / std::sqrt(3.0);

    std::vector<Vec2> grid;
    const long steps = static_cast<long>(std::floor(2.0 * extent / spacing));
    for (long ix = 0; ix <= steps; ++ix)
        for (long iy = 0; iy <= steps; ++iy)
            grid.emplace_back(-extent + ix * spacing, -extent + iy * spacing);
    return grid;
}

SinrMap compute_sinr_map(const CellLayout& layout, const SectorPattern& pattern,
                         const LinkBudget& budget, const std::vector<Vec2>& grid) {
    if (layout.site_positions.empty())
        throw invalid_parameter_error("compute_sinr_map: layout has no sites");
    if (!(budget.tx_power_w > 0.0) || !(budget.bandwidth_hz > 0.0))
        throw invalid_parameter_error("compute_sinr_map: power and bandwidth must be positive");
    if (grid.empty()) throw empty_grid_error("compute_sinr_map: empty grid");

    const double wavelength = kSpeedOfLight / budget.carrier_frequency_hz;
    const double tx_dbm = 10.0 * std::log10(budget.tx_power_w * 1000.0);
    const double noise_dbm = thermal_noise_dbm(budget.bandwidth_hz, budget.noise_figure_db);
    const double noise_mw = std::pow(10.0, noise_dbm / 10.0);
    const double dz = layout.tower_height - budget.rx_height_m;

    SinrMap map;
    map.points = grid;
    map.noise_power_dbm = noise_dbm;
    map.sinr_db.reserve(grid.size());
    map.serving_sector.reserve(grid.size());

    for (const auto& p : grid) {
        double best_mw = -1.0;
        int best_idx = -1;
        double total_mw = 0.0;
        for (std::size_t si = 0; si < layout.site_positions.size(); ++si) {
            const Vec2 d2 = p - layout.site_positions[si];
            const double horiz = std::max(d2.norm(), 1.0); // avoid the tower singularity
            const double dist3d = std::hypot(horiz, dz);
            const double az = rad2deg(std::atan2(d2.y(), d2.x()));
            const double el = rad2deg(std::atan2(-dz, horiz)); // negative: below the tower
            // path_gain is an amplitude; power loss in dB is -20 log10.
            const double pl_db =
                -20.0 * std::log10(path_gain(dist3d, wavelength, budget.path_loss_exponent));
            for (int sec = 0; sec < layout.sectors_per_site; ++sec) {
                const double bore = layout.boresight_azimuths[static_cast<std::size_t>(sec)];
                const double gain = sector_gain(pattern, az - bore, el + pattern.downtilt);
                const double rx_dbm = tx_dbm + gain - pl_db;
                const double rx_mw = std::pow(10.0, rx_dbm / 10.0);
                total_mw += rx_mw;
                if (rx_mw > best_mw) {
                    best_mw = rx_mw;
                    best_idx = static_cast<int>(si) * layout.sectors_per_site + sec;
                }
            }
        }
        const double interference_mw = total_mw - best_mw;
        map.sinr_db.push_back(10.0 * std::log10(best_mw / (interference_mw + noise_mw)));
        map.serving_sector.push_back(best_idx);
    }
    return map;
}

std::string sinr_map_to_csv(const SinrMap& map) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y,serving_sector,sinr_db\n";
    for (std::size_t i = 0; i < map.points.size(); ++i)
        os << map.points[i].x() << ',' << map.points[i].y() << ',' << map.serving_sector[i] << ','
           << map.sinr_db[i] << '\n';
    return os.str();
}

} // namespace eb
