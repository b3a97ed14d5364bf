// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "simulate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace eb {

PrecoderSet random_digital_precoders(Eigen::Index num_elements, int streams, int num_subbands,
                                     std::uint64_t seed) {
    if (num_elements < 1 || streams < 1 || num_subbands < 1)
        throw invalid_parameter_error("random_digital_precoders: dimensions must be >= 1");
    PrecoderSet set;
    set.role = PrecoderRole::Digital;
    set.per_subband.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 1; k <= num_subbands; ++k) {
        auto gen = derive_stream(seed, "digital-precoder", static_cast<std::uint64_t>(k));
        CMatrix d(num_elements, streams);
        for (Eigen::Index j = 0; j < d.cols(); ++j)
            for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, j) = standard_complex_gaussian(gen);
        set.per_subband.push_back(std::move(d));
    }
    return set;
}

SourceSymbols random_symbols(int streams, int num_subbands, std::uint64_t seed) {
    if (streams < 1 || num_subbands < 1)
        throw invalid_parameter_error("random_symbols: dimensions must be >= 1");
    SourceSymbols symbols;
    symbols.seed = seed;
    symbols.per_subband.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 1; k <= num_subbands; ++k) {
        auto gen = derive_stream(seed, "source-symbols", static_cast<std::uint64_t>(k));
        CVector x(streams);
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = standard_complex_gaussian(gen);
        symbols.per_subband.push_back(std::move(x));
    }
    return symbols;
}

ReceivedField random_noise(Eigen::Index num_points, int num_subbands, double noise_power,
                           std::uint64_t seed) {
    if (num_points < 1 || num_subbands < 1)
        throw invalid_parameter_error("random_noise: dimensions must be >= 1");
    if (noise_power < 0.0)
        throw invalid_parameter_error("random_noise: noise power must be nonnegative");
    ReceivedField field;
    field.noise_power = noise_power;
    const double scale = std::sqrt(noise_power);
    field.per_subband.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 1; k <= num_subbands; ++k) {
        auto gen = derive_stream(seed, "receiver-noise", static_cast<std::uint64_t>(k));
        CVector z(num_points);
        for (Eigen::Index i = 0; i < z.size(); ++i)
            z(i) = scale * standard_complex_gaussian(gen);
        field.per_subband.push_back(std::move(z));
    }
    return field;
}

ReceivedField zero_noise(Eigen::Index num_points, int num_subbands) {
    ReceivedField field;
    field.noise_power = 0.0;
    field.per_subband.assign(static_cast<std::size_t>(num_subbands),
                             CVector::Zero(num_points));
    return field;
}

namespace {

void check_field_dims(const CompositeChannel& channel, const ReceivedField& noise) {
    if (noise.num_subbands() != channel.num_subbands())
        throw shape_error("downlink: noise subband count mismatch");
    for (int k = 0; k < channel.num_subbands(); ++k)
        if (noise.per_subband[static_cast<std::size_t>(k)].size() !=
            channel.per_subband[static_cast<std::size_t>(k)].rows())
            throw shape_error("downlink: noise length does not match observation count");
}

} // namespace

ReceivedField digital_downlink(const CompositeChannel& channel, const PrecoderSet& digital,
                               const SourceSymbols& symbols, const ReceivedField& noise) {
    const int num_subbands = channel.num_subbands();
    if (digital.num_subbands() != num_subbands ||
        static_cast<int>(symbols.per_subband.size()) != num_subbands)
        throw shape_error("digital_downlink: subband count mismatch");
    check_field_dims(channel, noise);

    ReceivedField out;
    out.noise_power = noise.noise_power;
    out.per_subband.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 0; k < num_subbands; ++k) {
        const auto& h = channel.per_subband[static_cast<std::size_t>(k)];
        const auto& d = digital.per_subband[static_cast<std::size_t>(k)];
        const auto& x = symbols.per_subband[static_cast<std::size_t>(k)];
        if (d.rows() != h.cols() || d.cols() != x.size())
            throw shape_error("digital_downlink: precoder dimensions mismatch");
        out.per_subband.push_back(h * (d * x) + noise.per_subband[static_cast<std::size_t>(k)]);
    }
    return out;
}

ReceivedField hybrid_downlink(const CompositeChannel& channel, const EigenbeamSet& beams,
                              const PrecoderSet& baseband, const SourceSymbols& symbols,
                              const ReceivedField& noise) {
    const int num_subbands = channel.num_subbands();
    if (baseband.num_subbands() != num_subbands ||
        static_cast<int>(symbols.per_subband.size()) != num_subbands)
        throw shape_error("hybrid_downlink: subband count mismatch");
    check_field_dims(channel, noise);

    ReceivedField out;
    out.noise_power = noise.noise_power;
    out.per_subband.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 0; k < num_subbands; ++k) {
        const auto& h = channel.per_subband[static_cast<std::size_t>(k)];
        const auto& f = baseband.per_subband[static_cast<std::size_t>(k)];
        const auto& x = symbols.per_subband[static_cast<std::size_t>(k)];
        if (beams.beams.rows() != h.cols())
            throw shape_error("hybrid_downlink: beam length does not match element count");
        if (f.rows() != beams.beams.cols() || f.cols() != x.size())
            throw shape_error("hybrid_downlink: baseband precoder dimensions mismatch");
        out.per_subband.push_back(h * (beams.beams * (f * x)) +
                                  noise.per_subband[static_cast<std::size_t>(k)]);
    }
    return out;
}

std::vector<double> equivalence_residual(const ReceivedField& digital,
                                         const ReceivedField& hybrid) {
    if (digital.num_subbands() != hybrid.num_subbands())
        throw shape_error("equivalence_residual: subband count mismatch");
    std::vector<double> residuals;
    residuals.reserve(digital.per_subband.size());
    for (std::size_t k = 0; k < digital.per_subband.size(); ++k) {
        const auto& yd = digital.per_subband[k];
        const auto& yh = hybrid.per_subband[k];
        if (yd.size() != yh.size())
            throw shape_error("equivalence_residual: field length mismatch");
        residuals.push_back((yh - yd).norm() / std::max(yd.norm(), 1e-300));
    }
    return residuals;
}

SubframeSchedule subframe_multiplex(int total_eigenbeams, int rf_chains) {
    if (total_eigenbeams < 1 || rf_chains < 1)
        throw invalid_parameter_error("subframe_multiplex: counts must be >= 1");
    SubframeSchedule schedule;
    for (int start = 0; start < total_eigenbeams; start += rf_chains) {
        std::vector<int> frame;
        for (int b = start; b < std::min(start + rf_chains, total_eigenbeams); ++b)
            frame.push_back(b);
        schedule.subframes.push_back(std::move(frame));
    }
    return schedule;
}

std::string residuals_to_csv(const std::vector<double>& residuals) {
    std::ostringstream os;
    os.precision(17);
    os << "subband,relative_residual\n";
    for (std::size_t k = 0; k < residuals.size(); ++k) os << (k + 1) << ',' << residuals[k] << '\n';
    return os.str();
}

std::string schedule_to_csv(const SubframeSchedule& schedule) {
    std::ostringstream os;
    os << "subframe,beam\n";
    for (std::size_t s = 0; s < schedule.subframes.size(); ++s)
        for (int b : schedule.subframes[s]) os << s << ',' << b << '\n';
    return os.str();
}

} // namespace eb
