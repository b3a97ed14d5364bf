/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright (C) 2026 eigenbeam developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * C API of the eigenbeam shared library. All objects are opaque handles
 * created and destroyed through this interface; every function that can fail
 * returns an eb_status, with the detail message available per thread via
 * eb_last_error_message().
 */

#ifndef EIGENBEAM_H
#define EIGENBEAM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EB_API __declspec(dllexport)
#else
#define EB_API __attribute__((visibility("default")))
#endif

typedef enum eb_status {
    EB_OK = 0,
    EB_ERR_INVALID_PARAMETER = 1,
    EB_ERR_SHAPE_MISMATCH = 2,
    EB_ERR_EMPTY_GRID = 3,
    EB_ERR_NUMERIC = 4,
    EB_ERR_PARSE = 5,
    EB_ERR_UNKNOWN_KEY = 6,
    EB_ERR_IO = 7,
    EB_ERR_NULL_HANDLE = 8,
    EB_ERR_INTERNAL = 9
} eb_status;

typedef struct eb_config eb_config;
typedef struct eb_array eb_array;
typedef struct eb_grid eb_grid;
typedef struct eb_channel eb_channel;
typedef struct eb_svd eb_svd;
typedef struct eb_beams eb_beams;

/* Thread-local message describing the most recent failure. */
EB_API const char* eb_last_error_message(void);

/* ---- configuration ---- */

/* Default configuration (reference scenario). */
EB_API eb_status eb_config_create(eb_config** out);
/* Parse the sectioned key=value text; unknown keys are rejected. */
EB_API eb_status eb_config_parse(const char* text, eb_config** out);
EB_API eb_status eb_config_parse_file(const char* path, eb_config** out);
/* Canonical serialization; caller frees with eb_string_free. */
EB_API eb_status eb_config_serialize(const eb_config* config, char** out);
/* Override a single "section.key" entry, e.g. "analysis.rank_budget". */
EB_API eb_status eb_config_set(eb_config* config, const char* key, const char* value);
EB_API void eb_config_free(eb_config* config);
EB_API void eb_string_free(char* s);

/* ---- geometry ---- */

EB_API eb_status eb_array_build(int columns, int rows, double carrier_frequency_hz,
                                eb_array** out);
EB_API eb_status eb_array_num_elements(const eb_array* array, int* out);
EB_API eb_status eb_array_wavelength(const eb_array* array, double* out);
/* Position of element n as (x, y, z) in meters. */
EB_API eb_status eb_array_element_position(const eb_array* array, int n, double xyz[3]);
EB_API void eb_array_free(eb_array* array);

/* Observation grid of the configured sector. */
EB_API eb_status eb_grid_build(const eb_config* config, eb_grid** out);
EB_API eb_status eb_grid_size(const eb_grid* grid, int* out);
EB_API eb_status eb_grid_point(const eb_grid* grid, int l, double xyz[3]);
EB_API void eb_grid_free(eb_grid* grid);

/* ---- long-term channel and its SVD ---- */

EB_API eb_status eb_channel_build(const eb_config* config, const eb_array* array,
                                  const eb_grid* grid, eb_channel** out);
EB_API eb_status eb_channel_dims(const eb_channel* channel, int* rows, int* cols);
EB_API eb_status eb_channel_entry(const eb_channel* channel, int row, int col, double* re,
                                  double* im);
EB_API void eb_channel_free(eb_channel* channel);

EB_API eb_status eb_svd_compute(const eb_channel* channel, eb_svd** out);
EB_API eb_status eb_svd_rank(const eb_svd* svd, int* out);
EB_API eb_status eb_svd_singular_value(const eb_svd* svd, int index, double* out);
/* Fraction of total sigma^2 captured by the (index+1) leading values. */
EB_API eb_status eb_svd_cumulative_power(const eb_svd* svd, int index, double* out);
EB_API void eb_svd_free(eb_svd* svd);

EB_API eb_status eb_beams_extract(const eb_svd* svd, int rank_budget, eb_beams** out);
EB_API eb_status eb_beams_coefficient(const eb_beams* beams, int beam, int element, double* re,
                                      double* im);
EB_API void eb_beams_free(eb_beams* beams);

/* ---- experiment commands ---- */

typedef struct eb_svd_report_result {
    int num_points;
    int num_elements;
    double power_at_rank4;
    double power_at_rank8;
} eb_svd_report_result;

typedef struct eb_equivalence_result {
    double max_residual;
    double mean_residual;
    int pass; /* 1 iff max residual < 1e-10 */
} eb_equivalence_result;

/* Each command writes its CSV outputs under out_dir (created if missing);
 * outputs are byte-deterministic for a fixed config. A NULL result pointer
 * skips the summary. */
EB_API eb_status eb_run_svd_report(const eb_config* config, const char* out_dir,
                                   eb_svd_report_result* result);
EB_API eb_status eb_run_equivalence(const eb_config* config, const char* out_dir,
                                    int perturb_beams, eb_equivalence_result* result);
EB_API eb_status eb_run_patterns(const eb_config* config, const char* out_dir);
EB_API eb_status eb_run_sinr_map(const eb_config* config, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* EIGENBEAM_H */
