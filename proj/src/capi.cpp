// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "eigenbeam/eigenbeam.h"

#include <cstring>
#include <string>

#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/eigenbeams.hpp"
#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/matrix_io.hpp"
#include "core/runner.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
eb_status guarded(Fn&& fn) {
    try {
        fn();
        return EB_OK;
    } catch (const eb::unknown_key_error& e) {
        set_error(e.what());
        return EB_ERR_UNKNOWN_KEY;
    } catch (const eb::parse_error& e) {
        set_error(e.what());
        return EB_ERR_PARSE;
    } catch (const eb::invalid_parameter_error& e) {
        set_error(e.what());
        return EB_ERR_INVALID_PARAMETER;
    } catch (const eb::shape_error& e) {
        set_error(e.what());
        return EB_ERR_SHAPE_MISMATCH;
    } catch (const eb::empty_grid_error& e) {
        set_error(e.what());
        return EB_ERR_EMPTY_GRID;
    } catch (const eb::numeric_error& e) {
        set_error(e.what());
        return EB_ERR_NUMERIC;
    } catch (const eb::io_error& e) {
        set_error(e.what());
        return EB_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return EB_ERR_INTERNAL;
    }
}

eb_status require(const void* handle) {
    if (!handle) {
        set_error("null handle");
        return EB_ERR_NULL_HANDLE;
    }
    return EB_OK;
}

} // namespace

struct eb_config {
    eb::ExperimentConfig cfg;
};
struct eb_array {
    eb::ArrayGeometry geom;
};
struct eb_grid {
    eb::ObservationGrid grid;
};
struct eb_channel {
    eb::LongTermChannel ch;
};
struct eb_svd {
    eb::ChannelSvd svd;
    eb::RankProfile profile;
};
struct eb_beams {
    eb::EigenbeamSet set;
};

extern "C" {

const char* eb_last_error_message(void) { return g_last_error.c_str(); }

eb_status eb_config_create(eb_config** out) {
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] { *out = new eb_config{eb::ExperimentConfig{}}; });
}

eb_status eb_config_parse(const char* text, eb_config** out) {
    if (eb_status s = require(out); s != EB_OK) return s;
    if (eb_status s = require(text); s != EB_OK) return s;
    return guarded([&] { *out = new eb_config{eb::parse_config(text)}; });
}

eb_status eb_config_parse_file(const char* path, eb_config** out) {
    if (eb_status s = require(out); s != EB_OK) return s;
    if (eb_status s = require(path); s != EB_OK) return s;
    return guarded([&] { *out = new eb_config{eb::parse_config(eb::read_text_file(path))}; });
}

eb_status eb_config_serialize(const eb_config* config, char** out) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] {
        const std::string text = eb::serialize_config(config->cfg);
        *out = new char[text.size() + 1];
        std::memcpy(*out, text.c_str(), text.size() + 1);
    });
}

eb_status eb_config_set(eb_config* config, const char* key, const char* value) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(key); s != EB_OK) return s;
    if (eb_status s = require(value); s != EB_OK) return s;
    return guarded([&] {
        // Reuse the parser so the same key table and error reporting apply.
        const std::string qualified(key);
        const auto dot = qualified.find('.');
        std::string text;
        if (dot == std::string::npos) {
            text = qualified + " = " + value + "\n";
        } else {
            text = "[" + qualified.substr(0, dot) + "]\n" + qualified.substr(dot + 1) + " = " +
                   value + "\n";
        }
        config->cfg = eb::parse_config(eb::serialize_config(config->cfg) + "\n" + text);
    });
}

void eb_config_free(eb_config* config) { delete config; }
void eb_string_free(char* s) { delete[] s; }

eb_status eb_array_build(int columns, int rows, double carrier_frequency_hz, eb_array** out) {
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded(
        [&] { *out = new eb_array{eb::build_array(columns, rows, carrier_frequency_hz)}; });
}

eb_status eb_array_num_elements(const eb_array* array, int* out) {
    if (eb_status s = require(array); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    *out = array->geom.num_elements();
    return EB_OK;
}

eb_status eb_array_wavelength(const eb_array* array, double* out) {
    if (eb_status s = require(array); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    *out = array->geom.wavelength;
    return EB_OK;
}

eb_status eb_array_element_position(const eb_array* array, int n, double xyz[3]) {
    if (eb_status s = require(array); s != EB_OK) return s;
    if (eb_status s = require(xyz); s != EB_OK) return s;
    if (n < 0 || n >= array->geom.num_elements()) {
        set_error("element index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    const auto& p = array->geom.element_positions[static_cast<std::size_t>(n)];
    xyz[0] = p.x();
    xyz[1] = p.y();
    xyz[2] = p.z();
    return EB_OK;
}

void eb_array_free(eb_array* array) { delete array; }

eb_status eb_grid_build(const eb_config* config, eb_grid** out) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] {
        const auto& c = config->cfg;
        eb::validate_config(c);
        eb::CellLayout layout =
            eb::build_hex_layout(c.inter_site_distance_m, 0, c.tower_height_m, c.downtilt_deg);
        *out = new eb_grid{eb::build_observation_grid(layout, 0, c.grid_spacing_m,
                                                      c.height_levels_m, c.grid_min_distance_m)};
    });
}

eb_status eb_grid_size(const eb_grid* grid, int* out) {
    if (eb_status s = require(grid); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    *out = grid->grid.size();
    return EB_OK;
}

eb_status eb_grid_point(const eb_grid* grid, int l, double xyz[3]) {
    if (eb_status s = require(grid); s != EB_OK) return s;
    if (eb_status s = require(xyz); s != EB_OK) return s;
    if (l < 0 || l >= grid->grid.size()) {
        set_error("grid index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    const auto& p = grid->grid.points[static_cast<std::size_t>(l)];
    xyz[0] = p.x();
    xyz[1] = p.y();
    xyz[2] = p.z();
    return EB_OK;
}

void eb_grid_free(eb_grid* grid) { delete grid; }

eb_status eb_channel_build(const eb_config* config, const eb_array* array, const eb_grid* grid,
                           eb_channel** out) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(array); s != EB_OK) return s;
    if (eb_status s = require(grid); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] {
        *out = new eb_channel{eb::build_long_term_channel(array->geom, grid->grid,
                                                          config->cfg.tower_height_m,
                                                          config->cfg.path_loss_exponent)};
    });
}

eb_status eb_channel_dims(const eb_channel* channel, int* rows, int* cols) {
    if (eb_status s = require(channel); s != EB_OK) return s;
    if (eb_status s = require(rows); s != EB_OK) return s;
    if (eb_status s = require(cols); s != EB_OK) return s;
    *rows = static_cast<int>(channel->ch.num_points());
    *cols = static_cast<int>(channel->ch.num_elements());
    return EB_OK;
}

eb_status eb_channel_entry(const eb_channel* channel, int row, int col, double* re, double* im) {
    if (eb_status s = require(channel); s != EB_OK) return s;
    if (eb_status s = require(re); s != EB_OK) return s;
    if (eb_status s = require(im); s != EB_OK) return s;
    if (row < 0 || row >= channel->ch.num_points() || col < 0 ||
        col >= channel->ch.num_elements()) {
        set_error("channel entry index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    const eb::cplx v = channel->ch.matrix(row, col);
    *re = v.real();
    *im = v.imag();
    return EB_OK;
}

void eb_channel_free(eb_channel* channel) { delete channel; }

eb_status eb_svd_compute(const eb_channel* channel, eb_svd** out) {
    if (eb_status s = require(channel); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] {
        auto* h = new eb_svd;
        h->svd = eb::svd_decompose(channel->ch.matrix);
        h->profile = eb::cumulative_power(h->svd);
        *out = h;
    });
}

eb_status eb_svd_rank(const eb_svd* svd, int* out) {
    if (eb_status s = require(svd); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    *out = static_cast<int>(svd->svd.rank());
    return EB_OK;
}

eb_status eb_svd_singular_value(const eb_svd* svd, int index, double* out) {
    if (eb_status s = require(svd); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    if (index < 0 || index >= svd->svd.rank()) {
        set_error("singular value index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    *out = svd->svd.singular_values(index);
    return EB_OK;
}

eb_status eb_svd_cumulative_power(const eb_svd* svd, int index, double* out) {
    if (eb_status s = require(svd); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    if (index < 0 || index >= static_cast<int>(svd->profile.cumulative_power.size())) {
        set_error("cumulative power index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    *out = svd->profile.cumulative_power[static_cast<std::size_t>(index)];
    return EB_OK;
}

void eb_svd_free(eb_svd* svd) { delete svd; }

eb_status eb_beams_extract(const eb_svd* svd, int rank_budget, eb_beams** out) {
    if (eb_status s = require(svd); s != EB_OK) return s;
    if (eb_status s = require(out); s != EB_OK) return s;
    return guarded([&] { *out = new eb_beams{eb::extract_eigenbeams(svd->svd, rank_budget)}; });
}

eb_status eb_beams_coefficient(const eb_beams* beams, int beam, int element, double* re,
                               double* im) {
    if (eb_status s = require(beams); s != EB_OK) return s;
    if (eb_status s = require(re); s != EB_OK) return s;
    if (eb_status s = require(im); s != EB_OK) return s;
    if (beam < 0 || beam >= beams->set.rank_budget || element < 0 ||
        element >= beams->set.num_elements()) {
        set_error("beam coefficient index out of range");
        return EB_ERR_INVALID_PARAMETER;
    }
    const eb::cplx v = beams->set.beams(element, beam);
    *re = v.real();
    *im = v.imag();
    return EB_OK;
}

void eb_beams_free(eb_beams* beams) { delete beams; }

eb_status eb_run_svd_report(const eb_config* config, const char* out_dir,
                            eb_svd_report_result* result) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out_dir); s != EB_OK) return s;
    return guarded([&] {
        const eb::SvdReportSummary summary = eb::run_svd_report(config->cfg, out_dir);
        if (result) {
            result->num_points = summary.num_points;
            result->num_elements = summary.num_elements;
            result->power_at_rank4 = summary.power_at_rank4;
            result->power_at_rank8 = summary.power_at_rank8;
        }
    });
}

eb_status eb_run_equivalence(const eb_config* config, const char* out_dir, int perturb_beams,
                             eb_equivalence_result* result) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out_dir); s != EB_OK) return s;
    return guarded([&] {
        const eb::EquivalenceSummary summary =
            eb::run_equivalence(config->cfg, out_dir, perturb_beams != 0);
        if (result) {
            result->max_residual = summary.max_residual;
            result->mean_residual = summary.mean_residual;
            result->pass = summary.pass ? 1 : 0;
        }
    });
}

eb_status eb_run_patterns(const eb_config* config, const char* out_dir) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out_dir); s != EB_OK) return s;
    return guarded([&] { eb::run_patterns(config->cfg, out_dir); });
}

eb_status eb_run_sinr_map(const eb_config* config, const char* out_dir) {
    if (eb_status s = require(config); s != EB_OK) return s;
    if (eb_status s = require(out_dir); s != EB_OK) return s;
    return guarded([&] { eb::run_sinr_map(config->cfg, out_dir); });
}

} // extern "C"
