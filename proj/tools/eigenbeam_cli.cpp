// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "eigenbeam/eigenbeam.h"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::int64_t seed = -1;
    int rank = -1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Configuration file (sectioned key=value)");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--seed", opts.seed, "Override channel.seed");
    cmd->add_option("--rank", opts.rank, "Override analysis.rank_budget");
}

int fail(const char* what, eb_status status) {
    std::fprintf(stderr, "error: %s: %s (status %d)\n", what, eb_last_error_message(),
                 static_cast<int>(status));
    return 1;
}

// Loads config, applies flag overrides. Returns nullptr on failure.
eb_config* load_config(const CommonOptions& opts) {
    eb_config* cfg = nullptr;
    eb_status s = opts.config_path.empty() ? eb_config_create(&cfg)
                                           : eb_config_parse_file(opts.config_path.c_str(), &cfg);
    if (s != EB_OK) {
        fail("loading configuration", s);
        return nullptr;
    }
    if (opts.seed >= 0) {
        s = eb_config_set(cfg, "channel.seed", std::to_string(opts.seed).c_str());
        if (s != EB_OK) {
            fail("setting seed", s);
            eb_config_free(cfg);
            return nullptr;
        }
    }
    if (opts.rank >= 0) {
        s = eb_config_set(cfg, "analysis.rank_budget", std::to_string(opts.rank).c_str());
        if (s != EB_OK) {
            fail("setting rank budget", s);
            eb_config_free(cfg);
            return nullptr;
        }
    }
    return cfg;
}

int cmd_svd_report(const CommonOptions& opts) {
    eb_config* cfg = load_config(opts);
    if (!cfg) return 1;
    eb_svd_report_result result{};
    const eb_status s = eb_run_svd_report(cfg, opts.out_dir.c_str(), &result);
    eb_config_free(cfg);
    if (s != EB_OK) return fail("svd-report", s);
    std::printf("svd-report: L=%d N=%d cumulative power rank4=%.6f rank8=%.6f\n",
                result.num_points, result.num_elements, result.power_at_rank4,
                result.power_at_rank8);
    return 0;
}

int cmd_equivalence(const CommonOptions& opts, bool perturb) {
    eb_config* cfg = load_config(opts);
    if (!cfg) return 1;
    eb_equivalence_result result{};
    const eb_status s = eb_run_equivalence(cfg, opts.out_dir.c_str(), perturb ? 1 : 0, &result);
    eb_config_free(cfg);
    if (s != EB_OK) return fail("equivalence", s);
    std::printf("equivalence: max residual %.3e, mean %.3e -> %s\n", result.max_residual,
                result.mean_residual, result.pass ? "PASS" : "FAIL");
    return result.pass ? 0 : 1;
}

int cmd_patterns(const CommonOptions& opts) {
    eb_config* cfg = load_config(opts);
    if (!cfg) return 1;
    const eb_status s = eb_run_patterns(cfg, opts.out_dir.c_str());
    eb_config_free(cfg);
    if (s != EB_OK) return fail("patterns", s);
    std::printf("patterns: wrote per-beam pattern and element-power CSVs to %s\n",
                opts.out_dir.c_str());
    return 0;
}

int cmd_sinr_map(const CommonOptions& opts) {
    eb_config* cfg = load_config(opts);
    if (!cfg) return 1;
    const eb_status s = eb_run_sinr_map(cfg, opts.out_dir.c_str());
    eb_config_free(cfg);
    if (s != EB_OK) return fail("sinr-map", s);
    std::printf("sinr-map: wrote sinr_map.csv to %s\n", opts.out_dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macro-cellular massive MIMO eigenbeam experiments"};
    app.require_subcommand(1);

    CommonOptions opts;
    bool perturb = false;

    auto* svd = app.add_subcommand("svd-report", "Singular values and cumulative channel power");
    add_common(svd, opts);
    auto* equiv =
        app.add_subcommand("equivalence", "Digital vs coherent hybrid downlink residuals");
    add_common(equiv, opts);
    equiv->add_flag("--perturb", perturb, "Corrupt the analog beams (negative control)");
    auto* patterns = app.add_subcommand("patterns", "Eigenbeam far-field patterns and amplifier "
                                                    "power maps");
    add_common(patterns, opts);
    auto* sinr = app.add_subcommand("sinr-map", "Network SINR distribution over the hex layout");
    add_common(sinr, opts);
    auto* all = app.add_subcommand("all", "Run every command into one output directory");
    add_common(all, opts);

    CLI11_PARSE(app, argc, argv);

    if (svd->parsed()) return cmd_svd_report(opts);
    if (equiv->parsed()) return cmd_equivalence(opts, perturb);
    if (patterns->parsed()) return cmd_patterns(opts);
    if (sinr->parsed()) return cmd_sinr_map(opts);
    if (all->parsed()) {
        int rc = cmd_svd_report(opts);
        rc |= cmd_equivalence(opts, false);
        rc |= cmd_patterns(opts);
        rc |= cmd_sinr_map(opts);
        return rc;
    }
    return 1;
}
