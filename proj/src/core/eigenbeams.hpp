// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_EIGENBEAMS_HPP
#define EB_CORE_EIGENBEAMS_HPP

#include <string>
#include <vector>

#include "channel.hpp"
#include "types.hpp"

namespace eb {

// Thin SVD with descending singular values and a fixed phase convention:
// the largest-magnitude entry of each V column is real and positive, with U
// rotated to compensate, so repeated runs are bit-identical.
struct ChannelSvd {
    CMatrix left;          // L x r
    RVector singular_values; // descending, length r
    CMatrix right;         // N x r
    Eigen::Index source_rows = 0;
    Eigen::Index source_cols = 0;

    Eigen::Index rank() const { return singular_values.size(); }
    CMatrix reconstruct() const;
};

struct RankProfile {
    std::vector<double> cumulative_power; // fractions of total sigma^2, nondecreasing, last = 1
};

struct EigenbeamSet {
    CMatrix beams;     // N x t, orthonormal columns, descending sigma order
    RVector sigma;     // length t
    int rank_budget = 0;

    Eigen::Index num_elements() const { return beams.rows(); }
};

struct TruncatedChannel {
    CMatrix matrix;    // L x N, rank t
    CMatrix left;      // U_t, L x t
    int rank_budget = 0;
};

ChannelSvd svd_decompose(const CMatrix& matrix);
inline ChannelSvd svd_decompose(const LongTermChannel& channel) {
    return svd_decompose(channel.matrix);
}

RankProfile cumulative_power(const ChannelSvd& svd);

TruncatedChannel truncate(const ChannelSvd& svd, int rank_budget);

EigenbeamSet extract_eigenbeams(const ChannelSvd& svd, int rank_budget);

// Effective precoder per subband: W^H * D[k], each S x S when D is N x S.
std::vector<CMatrix> effective_precoder(const EigenbeamSet& beams,
                                        const std::vector<CMatrix>& digital_precoders);

std::string rank_profile_to_csv(const RankProfile& profile);
std::string eigenbeams_to_csv(const EigenbeamSet& beams);

} // namespace eb

#endif
