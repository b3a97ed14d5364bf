// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef EB_CORE_SIMULATE_HPP
#define EB_CORE_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "channel.hpp"
#include "eigenbeams.hpp"
#include "types.hpp"

namespace eb {

enum class PrecoderRole { Digital, Baseband };

struct PrecoderSet {
    std::vector<CMatrix> per_subband; // digital: N x S; baseband: M x S
    PrecoderRole role = PrecoderRole::Digital;
    int num_subbands() const { return static_cast<int>(per_subband.size()); }
};

struct SourceSymbols {
    std::vector<CVector> per_subband; // each length S
    std::uint64_t seed = 0;
};

struct ReceivedField {
    std::vector<CVector> per_subband; // each length L
    double noise_power = 0.0;
    int num_subbands() const { return static_cast<int>(per_subband.size()); }
};

struct SubframeSchedule {
    std::vector<std::vector<int>> subframes; // eigenbeam column indices, size <= M each
    int cycle_length() const { return static_cast<int>(subframes.size()); }
};

PrecoderSet random_digital_precoders(Eigen::Index num_elements, int streams, int num_subbands,
                                     std::uint64_t seed);
SourceSymbols random_symbols(int streams, int num_subbands, std::uint64_t seed);
ReceivedField random_noise(Eigen::Index num_points, int num_subbands, double noise_power,
                           std::uint64_t seed);
ReceivedField zero_noise(Eigen::Index num_points, int num_subbands);

// y_D[k] = H[k] D[k] x[k] + z[k], with H[k] the composite channel built on
// the truncated long-term channel.
ReceivedField digital_downlink(const CompositeChannel& channel, const PrecoderSet& digital,
                               const SourceSymbols& symbols, const ReceivedField& noise);

// y_H[k] = H[k] W F[k] x[k] + z[k]
ReceivedField hybrid_downlink(const CompositeChannel& channel, const EigenbeamSet& beams,
                              const PrecoderSet& baseband, const SourceSymbols& symbols,
                              const ReceivedField& noise);

// Per-subband ||y_H[k] - y_D[k]|| / max(||y_D[k]||, 1e-300).
std::vector<double> equivalence_residual(const ReceivedField& digital,
                                         const ReceivedField& hybrid);

// Round-robin partition of eigenbeam indices 0..t-1 into ceil(t/M) subframes,
// in descending singular-value order.
SubframeSchedule subframe_multiplex(int total_eigenbeams, int rf_chains);

std::string residuals_to_csv(const std::vector<double>& residuals);
std::string schedule_to_csv(const SubframeSchedule& schedule);

} // namespace eb

#endif
