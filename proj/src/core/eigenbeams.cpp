// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "eigenbeams.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace eb {

namespace {

// Lexicographic order on (real, imag) entry pairs, used only to fix the
// column order among exactly equal singular values.
bool column_lex_less(const CMatrix& m, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const cplx x = m(i, a), y = m(i, b);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

} // namespace

CMatrix ChannelSvd::reconstruct() const {
    return left * singular_values.asDiagonal() * right.adjoint();
}

ChannelSvd svd_decompose(const CMatrix& matrix) {
    if (matrix.size() == 0) throw invalid_parameter_error("svd_decompose: empty matrix");
    if (!matrix.allFinite()) throw numeric_error("svd_decompose: non-finite entries");

    Eigen::JacobiSVD<CMatrix> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);

    ChannelSvd out;
    out.source_rows = matrix.rows();
    out.source_cols = matrix.cols();
    out.left = svd.matrixU();
    out.singular_values = svd.singularValues();
    out.right = svd.matrixV();

    // Phase convention: largest-magnitude entry of each V column real positive.
    for (Eigen::Index j = 0; j < out.right.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < out.right.rows(); ++i) {
            const double mag = std::abs(out.right(i, j));
            if (mag > best) {
                best = mag;
                imax = i;
            }
        }
        if (best > 0.0) {
            const cplx rot = std::conj(out.right(imax, j)) / best;
            out.right.col(j) *= rot;
            out.left.col(j) *= rot;
        }
    }

    // Ties among exactly equal singular values: lexicographic column order.
    for (Eigen::Index j = 0; j + 1 < out.rank(); ++j) {
        if (out.singular_values(j) == out.singular_values(j + 1) &&
            column_lex_less(out.right, j + 1, j)) {
            out.right.col(j).swap(out.right.col(j + 1));
            out.left.col(j).swap(out.left.col(j + 1));
        }
    }
    return out;
}

RankProfile cumulative_power(const ChannelSvd& svd) {
    const Eigen::Index r = svd.rank();
    if (r == 0) throw invalid_parameter_error("cumulative_power: empty SVD");
    const double total = svd.singular_values.squaredNorm();
    if (!(total > 0.0)) throw numeric_error("cumulative_power: zero channel power");

    RankProfile profile;
    profile.cumulative_power.resize(static_cast<std::size_t>(r));
    double acc = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
        acc += svd.singular_values(j) * svd.singular_values(j);
        profile.cumulative_power[static_cast<std::size_t>(j)] = acc / total;
    }
    return profile;
}

TruncatedChannel truncate(const ChannelSvd& svd, int rank_budget) {
    if (rank_budget < 1 || rank_budget > svd.rank())
        throw invalid_parameter_error("truncate: rank budget out of range");
    const Eigen::Index t = rank_budget;
    TruncatedChannel tc;
    tc.rank_budget = rank_budget;
    tc.left = svd.left.leftCols(t);
    tc.matrix = tc.left * svd.singular_values.head(t).asDiagonal() *
                svd.right.leftCols(t).adjoint();
    return tc;
}

EigenbeamSet extract_eigenbeams(const ChannelSvd& svd, int rank_budget) {
    if (rank_budget < 1 || rank_budget > svd.rank())
        throw invalid_parameter_error("extract_eigenbeams: rank budget out of range");
    EigenbeamSet set;
    set.rank_budget = rank_budget;
    set.beams = svd.right.leftCols(rank_budget);
    set.sigma = svd.singular_values.head(rank_budget);
    return set;
}

std::vector<CMatrix> effective_precoder(const EigenbeamSet& beams,
                                        const std::vector<CMatrix>& digital_precoders) {
    std::vector<CMatrix> out;
    out.reserve(digital_precoders.size());
    for (const auto& d : digital_precoders) {
        if (d.rows() != beams.beams.rows())
            throw shape_error("effective_precoder: precoder row count does not match elements");
        if (d.cols() != beams.rank_budget)
            throw shape_error("effective_precoder: stream count must equal the rank budget");
        out.push_back(beams.beams.adjoint() * d);
    }
    return out;
}

std::string rank_profile_to_csv(const RankProfile& profile) {
    std::ostringstream os;
    os.precision(17);
    os << "rank,cumulative_power_fraction\n";
    for (std::size_t i = 0; i < profile.cumulative_power.size(); ++i)
        os << (i + 1) << ',' << profile.cumulative_power[i] << '\n';
    return os.str();
}

std::string eigenbeams_to_csv(const EigenbeamSet& beams) {
    std::ostringstream os;
    os.precision(17);
    os << "beam,element,real,imag\n";
    for (Eigen::Index j = 0; j < beams.beams.cols(); ++j)
        for (Eigen::Index i = 0; i < beams.beams.rows(); ++i)
            os << j << ',' << i << ',' << beams.beams(i, j).real() << ','
               << beams.beams(i, j).imag() << '\n';
    return os.str();
}

} // namespace eb
