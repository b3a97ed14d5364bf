// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "runner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "channel.hpp"
#include "eigenbeams.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "matrix_io.hpp"
#include "netmap.hpp"
#include "patterns.hpp"
#include "simulate.hpp"

namespace eb {

namespace {

constexpr double kEquivalenceBound = 1e-10;

struct Scenario {
    ArrayGeometry array;
    ObservationGrid grid;
    LongTermChannel channel;
    ChannelSvd svd;
};

Scenario build_scenario(const ExperimentConfig& c) {
    validate_config(c);
    Scenario s;
    s.array = build_array(c.columns, c.rows, c.carrier_frequency_hz);
    CellLayout layout =
        build_hex_layout(c.inter_site_distance_m, 0, c.tower_height_m, c.downtilt_deg);
    s.grid = build_observation_grid(layout, 0, c.grid_spacing_m, c.height_levels_m,
                                    c.grid_min_distance_m);
    s.channel =
        build_long_term_channel(s.array, s.grid, c.tower_height_m, c.path_loss_exponent);
    s.svd = svd_decompose(s.channel);
    return s;
}

CellLayout netmap_layout(const ExperimentConfig& c) {
    CellLayout layout =
        build_hex_layout(c.inter_site_distance_m, c.rings, c.tower_height_m, c.downtilt_deg);
    layout.sectors_per_site = c.sectors;
    layout.boresight_azimuths.resize(static_cast<std::size_t>(c.sectors));
    return layout;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory: " + dir.string());
}

} // namespace

SvdReportSummary run_svd_report(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir) {
    ensure_dir(out_dir);
    const Scenario s = build_scenario(config);
    const RankProfile profile = cumulative_power(s.svd);

    std::ostringstream sv;
    sv.precision(17);
    sv << "rank,singular_value\n";
    for (Eigen::Index j = 0; j < s.svd.rank(); ++j)
        sv << (j + 1) << ',' << s.svd.singular_values(j) << '\n';
    write_text_file(out_dir / "singular_values.csv", sv.str());
    write_text_file(out_dir / "cumulative_power.csv", rank_profile_to_csv(profile));

    SvdReportSummary summary;
    summary.num_points = s.grid.size();
    summary.num_elements = s.array.num_elements();
    const auto& cp = profile.cumulative_power;
    summary.power_at_rank4 = cp.size() >= 4 ? cp[3] : cp.back();
    summary.power_at_rank8 = cp.size() >= 8 ? cp[7] : cp.back();

    std::ostringstream sum;
    sum.precision(17);
    sum << "points " << summary.num_points << '\n';
    sum << "elements " << summary.num_elements << '\n';
    sum << "cumulative_power_rank4 " << summary.power_at_rank4 << '\n';
    sum << "cumulative_power_rank8 " << summary.power_at_rank8 << '\n';
    write_text_file(out_dir / "svd_summary.txt", sum.str());
    return summary;
}

EquivalenceSummary run_equivalence(const ExperimentConfig& config,
                                   const std::filesystem::path& out_dir, bool perturb_beams) {
    ensure_dir(out_dir);
    const Scenario s = build_scenario(config);
    const int t = config.rank_budget;

    const TruncatedChannel truncated = truncate(s.svd, t);
    EigenbeamSet beams = extract_eigenbeams(s.svd, t);
    if (perturb_beams) beams.beams.col(0) *= 0.5; // breaks V_t^H W = I

    const auto scatter =
        sample_local_scatter(s.grid.size(), config.subbands,
                             scatter_model_from_string(config.scatter_model), config.seed);
    const CompositeChannel composite = compose_channel(scatter, truncated.matrix);

    const PrecoderSet digital = random_digital_precoders(s.array.num_elements(), t,
                                                         config.subbands, config.seed);
    const SourceSymbols symbols = random_symbols(t, config.subbands, config.seed);
    const ReceivedField noise = zero_noise(s.grid.size(), config.subbands);

    PrecoderSet baseband;
    baseband.role = PrecoderRole::Baseband;
    baseband.per_subband = effective_precoder(beams, digital.per_subband);

    const ReceivedField y_digital = digital_downlink(composite, digital, symbols, noise);
    const ReceivedField y_hybrid = hybrid_downlink(composite, beams, baseband, symbols, noise);
    const auto residuals = equivalence_residual(y_digital, y_hybrid);

    EquivalenceSummary summary;
    summary.max_residual = *std::max_element(residuals.begin(), residuals.end());
    summary.mean_residual =
        std::accumulate(residuals.begin(), residuals.end(), 0.0) / residuals.size();
    summary.pass = summary.max_residual < kEquivalenceBound;

    write_text_file(out_dir / "equivalence_residuals.csv", residuals_to_csv(residuals));
    write_text_file(out_dir / "schedule.csv",
                    schedule_to_csv(subframe_multiplex(t, config.rf_chains)));

    std::ostringstream sum;
    sum.precision(17);
    sum << "max_residual " << summary.max_residual << '\n';
    sum << "mean_residual " << summary.mean_residual << '\n';
    sum << "bound " << kEquivalenceBound << '\n';
    sum << "result " << (summary.pass ? "PASS" : "FAIL") << '\n';
    write_text_file(out_dir / "equivalence_summary.txt", sum.str());
    return summary;
}

void run_patterns(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
    ensure_dir(out_dir);
    const Scenario s = build_scenario(config);
    const EigenbeamSet beams = extract_eigenbeams(s.svd, config.rank_budget);

    const auto az = degree_range(-90.0, 90.0, 1.0);
    const auto el = degree_range(-90.0, 30.0, 1.0);
    for (int j = 0; j < config.rank_budget; ++j) {
        const CVector w = beams.beams.col(j);
        const BeamPattern pattern = beam_pattern(s.array, w, az, el);
        const ElementPowerMap map = element_power(s.array, w);
        write_text_file(out_dir / ("pattern_beam" + std::to_string(j + 1) + ".csv"),
                        pattern_to_csv(pattern));
        write_text_file(out_dir / ("element_power_beam" + std::to_string(j + 1) + ".csv"),
                        power_map_to_csv(map));
    }
}

void run_sinr_map(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
    ensure_dir(out_dir);
    validate_config(config);
    const CellLayout layout = netmap_layout(config);

    SectorPattern pattern;
    pattern.horizontal_beamwidth = config.horizontal_beamwidth_deg;
    pattern.vertical_beamwidth = config.vertical_beamwidth_deg;
    pattern.front_to_back = config.front_to_back_db;
    pattern.max_gain = config.max_gain_dbi;
    pattern.downtilt = config.downtilt_deg;

    LinkBudget budget;
    budget.tx_power_w = config.tx_power_w;
    budget.bandwidth_hz = config.bandwidth_hz;
    budget.carrier_frequency_hz = config.carrier_frequency_hz;
    budget.path_loss_exponent = config.netmap_path_loss_exponent;
    budget.noise_figure_db = config.noise_figure_db;
    budget.rx_height_m = config.rx_height_m;

    const auto grid = netmap_grid(layout, config.map_spacing_m);
    const SinrMap map = compute_sinr_map(layout, pattern, budget, grid);
    write_text_file(out_dir / "sinr_map.csv", sinr_map_to_csv(map));
}

} // namespace eb
