// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/eigenbeams.hpp"
#include "core/geometry.hpp"
#include "core/matrix_io.hpp"
#include "core/netmap.hpp"
#include "core/patterns.hpp"
#include "core/rng.hpp"
#include "core/runner.hpp"
#include "core/simulate.hpp"

using namespace eb;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++g_failures;
}

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    auto gen = derive_stream(seed, "acceptance-matrix");
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = standard_complex_gaussian(gen);
    return m;
}

CVector phase_normalize(const CVector& v) {
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const double mag = std::abs(v(imax));
    if (mag == 0.0) return v;
    return v * (std::conj(v(imax)) / mag);
}

struct PaperScenario {
    ArrayGeometry array;
    ObservationGrid grid;
    LongTermChannel channel;
    ChannelSvd svd;
    double svd_seconds = 0.0;
};

PaperScenario build_paper_scenario() {
    const ExperimentConfig c;
    PaperScenario s;
    s.array = build_array(c.columns, c.rows, c.carrier_frequency_hz);
    const CellLayout layout =
        build_hex_layout(c.inter_site_distance_m, 0, c.tower_height_m, c.downtilt_deg);
    s.grid = build_observation_grid(layout, 0, c.grid_spacing_m, c.height_levels_m,
                                    c.grid_min_distance_m);
    s.channel = build_long_term_channel(s.array, s.grid, c.tower_height_m, c.path_loss_exponent);
    const auto t0 = std::chrono::steady_clock::now();
    s.svd = svd_decompose(s.channel);
    s.svd_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

// Criterion 1: hybrid/digital equivalence over 50 randomized trials.
void criterion_equivalence(const PaperScenario& s) {
    const auto t0 = std::chrono::steady_clock::now();
    const int num_subbands = 25;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int t = 1 + trial % 8;
        const ScatterModel model =
            (trial % 2 == 0) ? ScatterModel::DiagonalFading : ScatterModel::BandedMixing;
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(trial);

        const TruncatedChannel tc = truncate(s.svd, t);
        const EigenbeamSet beams = extract_eigenbeams(s.svd, t);
        const auto scatter = sample_local_scatter(s.grid.size(), num_subbands, model, seed);
        const CompositeChannel composite = compose_channel(scatter, tc.matrix);

        const PrecoderSet digital =
            random_digital_precoders(s.array.num_elements(), t, num_subbands, seed + 1);
        const SourceSymbols symbols = random_symbols(t, num_subbands, seed + 2);
        const ReceivedField noise = zero_noise(s.grid.size(), num_subbands);

        PrecoderSet baseband;
        baseband.role = PrecoderRole::Baseband;
        baseband.per_subband = effective_precoder(beams, digital.per_subband);

        const ReceivedField yd = digital_downlink(composite, digital, symbols, noise);
        const ReceivedField yh = hybrid_downlink(composite, beams, baseband, symbols, noise);
        for (double r : equivalence_residual(yd, yh)) worst = std::max(worst, r);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "equivalence theorem, 50 trials: max residual %.3e (< 1e-10), %.1f s (< 30 s)",
                  worst, seconds);
    report(1, worst < 1e-10 && seconds < 30.0, buf);
}

// Criterion 2: cumulative singular power of the reference geometry.
void criterion_cumulative_power(const PaperScenario& s) {
    const RankProfile profile = cumulative_power(s.svd);
    const double p4 = profile.cumulative_power[3];
    const double p8 = profile.cumulative_power[7];
    bool monotone_marginals = true;
    for (Eigen::Index j = 1; j < s.svd.rank(); ++j)
        if (s.svd.singular_values(j) > s.svd.singular_values(j - 1)) monotone_marginals = false;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "cumulative power: rank4 %.3f in [0.45,0.75], rank8 %.3f in [0.70,0.95], "
                  "marginals nonincreasing %s, SVD %.1f s (< 10 s)",
                  p4, p8, monotone_marginals ? "yes" : "no", s.svd_seconds);
    report(2,
           p4 >= 0.45 && p4 <= 0.75 && p8 >= 0.70 && p8 <= 0.95 && monotone_marginals &&
               s.svd_seconds < 10.0,
           buf);
}

// Criterion 3: Eckart-Young identity and optimality on random matrices.
void criterion_eckart_young() {
    bool ok = true;
    auto gen = derive_stream(77, "ey-dims");
    for (int i = 0; i < 100 && ok; ++i) {
        const Eigen::Index rows = 4 + static_cast<Eigen::Index>(gen() % 37); // <= 40
        const Eigen::Index cols = 2 + static_cast<Eigen::Index>(gen() % 15); // <= 16
        const CMatrix m = random_complex(rows, cols, 5000 + static_cast<std::uint64_t>(i));
        const ChannelSvd svd = svd_decompose(m);
        for (int t = 1; t <= svd.rank() && ok; ++t) {
            const TruncatedChannel tc = truncate(svd, t);
            double discarded = 0.0;
            for (Eigen::Index j = t; j < svd.rank(); ++j)
                discarded += svd.singular_values(j) * svd.singular_values(j);
            const double resid2 = (m - tc.matrix).squaredNorm();
            if (std::abs(resid2 - discarded) > 1e-9 * m.squaredNorm()) ok = false;
            const double best = std::sqrt(resid2);
            for (int c = 0; c < 100 && ok; ++c) {
                const CMatrix a =
                    random_complex(rows, t, 90000 + static_cast<std::uint64_t>(1000 * i + c));
                const CMatrix b = random_complex(t, cols,
                                                 190000 + static_cast<std::uint64_t>(1000 * i + c));
                if ((m - a * b).norm() < best - 1e-12) ok = false;
            }
        }
    }
    report(3, ok, "Eckart-Young: residual identity (1e-9 rel) and 100-competitor optimality "
                  "on 100 random matrices");
}

// Criterion 4: orthonormality and the covariance-eigenvector identity.
void criterion_covariance(const PaperScenario& s) {
    bool ok = true;
    double worst_ortho = 0.0, worst_match = 0.0;

    auto check_instance = [&](const ChannelSvd& svd, int t) {
        const EigenbeamSet beams = extract_eigenbeams(svd, t);
        const double ortho =
            (beams.beams.adjoint() * beams.beams - CMatrix::Identity(t, t)).cwiseAbs().maxCoeff();
        worst_ortho = std::max(worst_ortho, ortho);
        if (ortho > 1e-10) ok = false;

        const CMatrix truncated = truncate(svd, t).matrix;
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(truncated.adjoint() * truncated);
        if (eig.info() != Eigen::Success) {
            ok = false;
            return;
        }
        const Eigen::Index n = truncated.cols();
        for (int j = 0; j < t; ++j) {
            const CVector v = phase_normalize(eig.eigenvectors().col(n - 1 - j));
            const double diff = (v - beams.beams.col(j)).cwiseAbs().maxCoeff();
            worst_match = std::max(worst_match, diff);
            if (diff > 1e-8) ok = false;
        }
    };

    check_instance(s.svd, 4);
    for (int i = 0; i < 20; ++i) {
        const CMatrix m = random_complex(30, 12, 7000 + static_cast<std::uint64_t>(i));
        check_instance(svd_decompose(m), 4);
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "eigenbeam orthonormality (max dev %.1e < 1e-10) and covariance eigenvector "
                  "match (max dev %.1e < 1e-8)",
                  worst_ortho, worst_match);
    report(4, ok, buf);
}

// Criterion 5: local scattering cannot raise the channel rank.
void criterion_rank_nonincrease() {
    bool ok = true;
    double worst = 0.0;
    auto gen = derive_stream(88, "rank-trials");
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index num_points = 40 + static_cast<Eigen::Index>(gen() % 60);
        const Eigen::Index num_elems = 8 + static_cast<Eigen::Index>(gen() % 9);
        const int t = 1 + static_cast<int>(gen() % 6);
        const ScatterModel model =
            (trial % 2 == 0) ? ScatterModel::DiagonalFading : ScatterModel::BandedMixing;

        const CMatrix h_r = random_complex(num_points, num_elems,
                                           8000 + static_cast<std::uint64_t>(trial));
        const ChannelSvd svd = svd_decompose(h_r);
        const int budget = std::min<int>(t, static_cast<int>(svd.rank()));
        const TruncatedChannel tc = truncate(svd, budget);
        const auto scatter =
            sample_local_scatter(num_points, 3, model, 9000 + static_cast<std::uint64_t>(trial));
        for (const auto& sc : scatter) {
            const ChannelSvd post = svd_decompose(sc.apply(tc.matrix));
            for (Eigen::Index j = budget; j < post.rank(); ++j) {
                const double rel = post.singular_values(j) / post.singular_values(0);
                worst = std::max(worst, rel);
                if (rel >= 1e-10) ok = false;
            }
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "rank non-increase through local scattering: max trailing sigma ratio %.1e "
                  "(< 1e-10) over 20 trials",
                  worst);
    report(5, ok, buf);
}

// Criterion 6: pattern sanity checks.
void criterion_patterns() {
    bool ok = true;
    const ArrayGeometry array = build_array(4, 12, 2e9);

    // conjugate-matched weights peak at the target grid direction
    const auto az = degree_range(-90.0, 90.0, 5.0);
    const auto el = degree_range(-90.0, 30.0, 5.0);
    for (const auto& [az0, el0] : std::vector<std::pair<double, double>>{
             {0.0, 0.0}, {20.0, -15.0}, {-45.0, 10.0}}) {
        const CVector w = steering_vector(array, az0, el0);
        const BeamPattern p = beam_pattern(array, w, az, el);
        Eigen::Index pr = 0, pc = 0;
        p.gain_db.maxCoeff(&pr, &pc);
        if (p.azimuth_deg[static_cast<std::size_t>(pc)] != az0 ||
            p.elevation_deg[static_cast<std::size_t>(pr)] != el0)
            ok = false;
    }

    // two-element half-wavelength pair has an endfire null
    const ArrayGeometry pair = build_array(2, 1, 2e9);
    const BeamPattern null_pattern = beam_pattern(pair, CVector::Ones(2), {90.0}, {0.0});
    if (!(null_pattern.gain_db(0, 0) < -40.0)) ok = false;

    // element power sums to ||w||^2
    for (int i = 0; i < 5; ++i) {
        const CVector w = random_complex(48, 1, 300 + static_cast<std::uint64_t>(i)).col(0);
        const ElementPowerMap map = element_power(array, w);
        if (std::abs(map.total - w.squaredNorm()) > 1e-12 * w.squaredNorm()) ok = false;
    }
    report(6, ok, "pattern sanity: matched-weight peaks, endfire null < -40 dB, element power "
                  "totals");
}

// Criterion 7: SINR map properties.
void criterion_sinr_map() {
    bool ok = true;
    const SectorPattern pattern;
    const LinkBudget budget;

    // SINR <= SNR pointwise on the 19-site layout
    const CellLayout layout = build_hex_layout(1732.0, 2, 32.0, 6.0);
    const auto grid = netmap_grid(layout, 400.0);
    const SinrMap map = compute_sinr_map(layout, pattern, budget, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const int serving = map.serving_sector[i];
        CellLayout only = layout;
        only.site_positions = {
            layout.site_positions[static_cast<std::size_t>(serving / layout.sectors_per_site)]};
        only.sectors_per_site = 1;
        only.boresight_azimuths = {layout.boresight_azimuths[static_cast<std::size_t>(
            serving % layout.sectors_per_site)]};
        const SinrMap snr = compute_sinr_map(only, pattern, budget, {grid[i]});
        if (map.sinr_db[i] > snr.sinr_db[0] + 1e-12) ok = false;
    }

    // 120 degree rotational symmetry
    const double c = std::cos(deg2rad(120.0)), s = std::sin(deg2rad(120.0));
    std::vector<Vec2> pts, rotated;
    auto gen = derive_stream(55, "sinr-symmetry");
    for (int i = 0; i < 40; ++i) {
        const double x = (static_cast<double>(gen() % 8000) - 4000.0);
        const double y = (static_cast<double>(gen() % 8000) - 4000.0);
        pts.emplace_back(x, y);
        rotated.emplace_back(c * x - s * y, s * x + c * y);
    }
    const SinrMap a = compute_sinr_map(layout, pattern, budget, pts);
    const SinrMap b = compute_sinr_map(layout, pattern, budget, rotated);
    double worst_sym = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        worst_sym = std::max(worst_sym, std::abs(a.sinr_db[i] - b.sinr_db[i]));
    if (worst_sym > 1e-9) ok = false;

    // single-site, single-sector: SINR equals an independently computed SNR
    CellLayout single = build_hex_layout(1732.0, 0, 32.0, 6.0);
    single.sectors_per_site = 1;
    single.boresight_azimuths = {0.0};
    const Vec2 probe(400.0, 50.0);
    const SinrMap solo = compute_sinr_map(single, pattern, budget, {probe});
    const double wavelength = kSpeedOfLight / budget.carrier_frequency_hz;
    const double dh = probe.norm();
    const double dz = single.tower_height - budget.rx_height_m;
    const double az0 = rad2deg(std::atan2(probe.y(), probe.x()));
    const double el0 = rad2deg(std::atan2(-dz, dh));
    const double rx = 10.0 * std::log10(budget.tx_power_w * 1000.0) +
                      sector_gain(pattern, az0, el0 + pattern.downtilt) +
                      20.0 * std::log10(path_gain(std::hypot(dh, dz), wavelength,
                                                  budget.path_loss_exponent));
    const double snr_db = rx - thermal_noise_dbm(budget.bandwidth_hz, budget.noise_figure_db);
    if (std::abs(solo.sinr_db[0] - snr_db) > 1e-9) ok = false;

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "SINR map: SINR <= SNR pointwise, 120-degree symmetry (max dev %.1e dB "
                  "< 1e-9), single-sector collapse",
                  worst_sym);
    report(7, ok, buf);
}

// Criterion 8: byte-identical CLI re-runs.
void criterion_determinism() {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "eb_acceptance_cli";
    fs::remove_all(base);
    fs::create_directories(base);
    const fs::path config_path = base / "config.ini";
    {
        ExperimentConfig cfg;
        cfg.grid_spacing_m = 80.0; // keep the CLI runs brisk
        cfg.subbands = 8;
        std::ofstream os(config_path);
        os << serialize_config(cfg);
    }

    bool ok = true;
    std::string detail = "CLI determinism: ";
    for (const char* cmd : {"svd-report", "equivalence", "patterns", "sinr-map"}) {
        std::map<std::string, std::vector<char>> snapshots[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = base / (std::string(cmd) + "_" + std::to_string(run));
            const std::string shell = std::string(EB_CLI_PATH) + " " + cmd + " --config " +
                                      config_path.string() + " --out " + out.string() +
                                      " > /dev/null";
            if (std::system(shell.c_str()) != 0) {
                ok = false;
                detail += std::string(cmd) + " failed; ";
                break;
            }
            for (const auto& entry : fs::directory_iterator(out)) {
                std::ifstream is(entry.path(), std::ios::binary);
                snapshots[run][entry.path().filename().string()] =
                    std::vector<char>(std::istreambuf_iterator<char>(is), {});
            }
        }
        if (snapshots[0].empty() || snapshots[0] != snapshots[1]) {
            ok = false;
            detail += std::string(cmd) + " outputs differ; ";
        }
    }
    if (ok) detail += "all commands byte-identical across re-runs";
    report(8, ok, detail);
    fs::remove_all(base);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    const PaperScenario scenario = build_paper_scenario();
    std::printf("reference geometry: L=%d N=%d\n", scenario.grid.size(),
                scenario.array.num_elements());

    criterion_equivalence(scenario);
    criterion_cumulative_power(scenario);
    criterion_eckart_young();
    criterion_covariance(scenario);
    criterion_rank_nonincrease();
    criterion_patterns();
    criterion_sinr_map();
    criterion_determinism();

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return EXIT_SUCCESS;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return EXIT_FAILURE;
}
