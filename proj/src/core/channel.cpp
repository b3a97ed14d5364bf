// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "channel.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace eb {

ScatterModel scatter_model_from_string(const std::string& tag) {
    if (tag == "identity") return ScatterModel::Identity;
    if (tag == "diagonal-fading") return ScatterModel::DiagonalFading;
    if (tag == "banded-mixing") return ScatterModel::BandedMixing;
    throw invalid_parameter_error("unknown scatter model: " + tag);
}

std::string to_string(ScatterModel model) {
    switch (model) {
        case ScatterModel::Identity: return "identity";
        case ScatterModel::DiagonalFading: return "diagonal-fading";
        case ScatterModel::BandedMixing: return "banded-mixing";
    }
    return "?";
}

CMatrix SubbandScatterChannel::apply(const CMatrix& rhs) const {
    if (rhs.rows() != dim)
        throw shape_error("scatter channel apply: row count mismatch");
    switch (model) {
        case ScatterModel::Identity:
            return rhs;
        case ScatterModel::DiagonalFading:
            return diagonal.asDiagonal() * rhs;
        case ScatterModel::BandedMixing: {
            CMatrix out = diagonal.asDiagonal() * rhs;
            out.topRows(dim - 1) += upper.asDiagonal() * rhs.bottomRows(dim - 1);
            out.bottomRows(dim - 1) += lower.asDiagonal() * rhs.topRows(dim - 1);
            return out;
        }
    }
    throw invalid_parameter_error("scatter channel apply: bad model");
}

CVector SubbandScatterChannel::apply(const CVector& rhs) const {
    return apply(CMatrix(rhs)).col(0);
}

CMatrix SubbandScatterChannel::dense() const {
    CMatrix m = CMatrix::Zero(dim, dim);
    switch (model) {
        case ScatterModel::Identity:
            m.setIdentity();
            break;
        case ScatterModel::DiagonalFading:
            m.diagonal() = diagonal;
            break;
        case ScatterModel::BandedMixing:
            m.diagonal() = diagonal;
            m.diagonal(1) = upper;
            m.diagonal(-1) = lower;
            break;
    }
    return m;
}

double path_gain(double distance, double wavelength, double exponent) {
    if (!(distance > 0.0))
        throw invalid_parameter_error("path_gain: distance must be positive");
    const double reference_distance = 1.0;
    return wavelength / (4.0 * kPi * reference_distance) *
           std::pow(reference_distance / distance, exponent / 2.0);
}

LongTermChannel build_long_term_channel(const ArrayGeometry& array, const ObservationGrid& grid,
                                        double tower_height, double exponent) {
    const Eigen::Index num_points = grid.size();
    const Eigen::Index num_elems = array.num_elements();
    if (num_points == 0 || num_elems == 0)
        throw invalid_parameter_error("build_long_term_channel: empty geometry");

    LongTermChannel ch;
    ch.wavelength = array.wavelength;
    ch.path_loss_exponent = exponent;
    ch.matrix.resize(num_points, num_elems);

    const Vec3 phase_center(0.0, 0.0, tower_height);
    const double k0 = 2.0 * kPi / array.wavelength;
    for (Eigen::Index l = 0; l < num_points; ++l) {
        const Vec3& p = grid.points[static_cast<std::size_t>(l)];
        const double center_dist = (p - phase_center).norm();
        if (center_dist == 0.0)
            throw invalid_parameter_error("build_long_term_channel: point at the phase center");
        const double amp = path_gain(center_dist, array.wavelength, exponent);
        for (Eigen::Index n = 0; n < num_elems; ++n) {
            const Vec3 elem = array.element_positions[static_cast<std::size_t>(n)] + phase_center;
            const double d = (p - elem).norm();
            if (d == 0.0)
                throw invalid_parameter_error("build_long_term_channel: point coincides with an element");
            ch.matrix(l, n) = std::polar(amp, -k0 * d);
        }
    }
    return ch;
}

std::vector<SubbandScatterChannel> sample_local_scatter(Eigen::Index dim, int num_subbands,
                                                        ScatterModel model, std::uint64_t seed) {
    if (dim < 1) throw invalid_parameter_error("sample_local_scatter: dimension must be >= 1");
    if (num_subbands < 1)
        throw invalid_parameter_error("sample_local_scatter: subband count must be >= 1");

    std::vector<SubbandScatterChannel> out;
    out.reserve(static_cast<std::size_t>(num_subbands));
    for (int k = 1; k <= num_subbands; ++k) {
        SubbandScatterChannel ch;
        ch.subband_index = k;
        ch.model = model;
        ch.dim = dim;
        auto gen = derive_stream(seed, "local-scatter", static_cast<std::uint64_t>(k));
        switch (model) {
            case ScatterModel::Identity:
                break;
            case ScatterModel::DiagonalFading:
                ch.diagonal.resize(dim);
                for (Eigen::Index i = 0; i < dim; ++i)
                    ch.diagonal(i) = standard_complex_gaussian(gen);
                break;
            case ScatterModel::BandedMixing:
                // Tridiagonal mixing; total mean power per row stays 1.
                ch.diagonal.resize(dim);
                ch.lower.resize(dim - 1);
                ch.upper.resize(dim - 1);
                for (Eigen::Index i = 0; i < dim; ++i)
                    ch.diagonal(i) = std::sqrt(0.5) * standard_complex_gaussian(gen);
                for (Eigen::Index i = 0; i + 1 < dim; ++i) {
                    ch.lower(i) = 0.5 * standard_complex_gaussian(gen);
                    ch.upper(i) = 0.5 * standard_complex_gaussian(gen);
                }
                break;
        }
        out.push_back(std::move(ch));
    }
    return out;
}

CompositeChannel compose_channel(const std::vector<SubbandScatterChannel>& scatter,
                                 const CMatrix& long_term) {
    if (scatter.empty()) throw invalid_parameter_error("compose_channel: no subbands");
    CompositeChannel composite;
    composite.per_subband.reserve(scatter.size());
    for (const auto& s : scatter) {
        if (s.dim != long_term.rows())
            throw shape_error("compose_channel: scatter dimension does not match channel rows");
        composite.per_subband.push_back(s.apply(long_term));
    }
    return composite;
}

} // namespace eb
