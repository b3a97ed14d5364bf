// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_CHANNEL_HPP
#define EB_CORE_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "types.hpp"

namespace eb {

// Geometry-determined LoS channel from the array to the observation points.
// Rows are observation points, columns are antenna elements. The amplitude of
// a row depends only on the point (path loss from the phase center); the
// per-element phase carries the exact spherical-wave distance.
struct LongTermChannel {
    CMatrix matrix; // L x N
    double wavelength = 0.0;
    double path_loss_exponent = 2.0;

    Eigen::Index num_points() const { return matrix.rows(); }
    Eigen::Index num_elements() const { return matrix.cols(); }
};

enum class ScatterModel { Identity, DiagonalFading, BandedMixing };

ScatterModel scatter_model_from_string(const std::string& tag);
std::string to_string(ScatterModel model);

// Per-subband L x L local-scatter channel, stored by structure instead of as
// a dense matrix (L can be ~1700, K ~25).
struct SubbandScatterChannel {
    int subband_index = 0; // 1-based
    ScatterModel model = ScatterModel::Identity;
    Eigen::Index dim = 0;
    CVector diagonal;           // DiagonalFading and BandedMixing main diagonal
    CVector lower, upper;       // BandedMixing off-diagonals (length dim-1)

    // y = H_L * rhs without materializing the L x L matrix.
    CMatrix apply(const CMatrix& rhs) const;
    CVector apply(const CVector& rhs) const;
    CMatrix dense() const; // test/inspection helper, O(L^2) memory
};

struct CompositeChannel {
    std::vector<CMatrix> per_subband; // H[k] = H_L[k] * H_R, each L x N
    int num_subbands() const { return static_cast<int>(per_subband.size()); }
};

// Amplitude (not power) of the free-space-style path gain at the given
// distance, referenced to 1 m.
double path_gain(double distance, double wavelength, double exponent);

LongTermChannel build_long_term_channel(const ArrayGeometry& array, const ObservationGrid& grid,
                                        double tower_height, double exponent);

std::vector<SubbandScatterChannel> sample_local_scatter(Eigen::Index dim, int num_subbands,
                                                        ScatterModel model, std::uint64_t seed);

CompositeChannel compose_channel(const std::vector<SubbandScatterChannel>& scatter,
                                 const CMatrix& long_term);

} // namespace eb

#endif
