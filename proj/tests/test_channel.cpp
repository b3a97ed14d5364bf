// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 eigenbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "core/channel.hpp"
#include "core/errors.hpp"
#include "core/matrix_io.hpp"

using namespace eb;

TEST_CASE("path gain free-space slope") {
    const double lambda = kSpeedOfLight / 2e9;
    // doubling the distance costs 6.02 dB in power
    const double g1 = path_gain(500.0, lambda, 2.0);
    const double g2 = path_gain(1000.0, lambda, 2.0);
    CHECK(20.0 * std::log10(g1 / g2) == doctest::Approx(6.0206).epsilon(1e-4));

    // FSPL at 1 km / 2 GHz: 20 log10(d_km) + 20 log10(f_GHz) + 92.45
    const double loss_db = -20.0 * std::log10(path_gain(1000.0, lambda, 2.0));
    CHECK(loss_db == doctest::Approx(98.47).epsilon(1e-4));

    // exponent 3.76 over one decade of distance
    const double r = path_gain(100.0, lambda, 3.76) / path_gain(1000.0, lambda, 3.76);
    CHECK(20.0 * std::log10(r) == doctest::Approx(37.6).epsilon(1e-10));

    CHECK_THROWS_AS(path_gain(0.0, lambda, 2.0), invalid_parameter_error);
    CHECK_THROWS_AS(path_gain(-5.0, lambda, 2.0), invalid_parameter_error);
}

namespace {

LongTermChannel small_channel() {
    const ArrayGeometry array = build_array(2, 2, 2e9);
    const CellLayout layout = build_hex_layout(1732.0, 0, 32.0, 6.0);
    const ObservationGrid grid = build_observation_grid(layout, 0, 300.0, {1.5, 8.5}, 0.0);
    return build_long_term_channel(array, grid, 32.0, 2.0);
}

} // namespace

TEST_CASE("long-term channel single element magnitude") {
    const ArrayGeometry array = build_array(1, 1, 2e9);
    ObservationGrid grid;
    grid.points = {Vec3(400.0, 0.0, 1.5)};
    const LongTermChannel ch = build_long_term_channel(array, grid, 32.0, 2.0);
    REQUIRE(ch.matrix.rows() == 1);
    REQUIRE(ch.matrix.cols() == 1);
    const double d = Vec3(400.0, 0.0, 1.5 - 32.0).norm();
    CHECK(std::abs(ch.matrix(0, 0)) ==
          doctest::Approx(path_gain(d, array.wavelength, 2.0)).epsilon(1e-12));
}

TEST_CASE("far-field phase difference matches the plane-wave oracle") {
    // two elements lambda/2 apart, far point at angle theta off broadside
    const ArrayGeometry array = build_array(2, 1, 2e9);
    const double theta = deg2rad(25.0);
    ObservationGrid grid;
    grid.points = {Vec3(1000.0 * std::cos(theta), 1000.0 * std::sin(theta), 32.0)};
    const LongTermChannel ch = build_long_term_channel(array, grid, 32.0, 2.0);
    const double phase_diff = std::arg(ch.matrix(0, 1) / ch.matrix(0, 0));
    CHECK(std::abs(phase_diff - kPi * std::sin(theta)) < 1e-3);
}

TEST_CASE("row magnitude is constant across elements") {
    const LongTermChannel ch = small_channel();
    for (Eigen::Index l = 0; l < ch.matrix.rows(); ++l) {
        const double ref = std::abs(ch.matrix(l, 0));
        for (Eigen::Index n = 1; n < ch.matrix.cols(); ++n)
            CHECK(std::abs(std::abs(ch.matrix(l, n)) - ref) < 1e-9 * ref);
    }
}

TEST_CASE("scatter model tags") {
    CHECK(scatter_model_from_string("identity") == ScatterModel::Identity);
    CHECK(scatter_model_from_string("diagonal-fading") == ScatterModel::DiagonalFading);
    CHECK(scatter_model_from_string("banded-mixing") == ScatterModel::BandedMixing);
    CHECK_THROWS_AS(scatter_model_from_string("rayleigh"), invalid_parameter_error);
}

TEST_CASE("local scatter is reproducible from the seed") {
    const auto a = sample_local_scatter(30, 5, ScatterModel::DiagonalFading, 42);
    const auto b = sample_local_scatter(30, 5, ScatterModel::DiagonalFading, 42);
    REQUIRE(a.size() == 5);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK((a[k].diagonal - b[k].diagonal).norm() == 0.0);
    const auto c = sample_local_scatter(30, 5, ScatterModel::DiagonalFading, 43);
    CHECK((a[0].diagonal - c[0].diagonal).norm() > 0.0);
}

TEST_CASE("diagonal fading has unit mean power") {
    const auto scatter = sample_local_scatter(50, 100, ScatterModel::DiagonalFading, 7);
    double power = 0.0;
    long count = 0;
    for (const auto& s : scatter) {
        power += s.diagonal.squaredNorm();
        count += s.diagonal.size();
    }
    CHECK(power / count == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("identity scatter composes to a no-op") {
    const LongTermChannel ch = small_channel();
    const auto scatter = sample_local_scatter(ch.matrix.rows(), 3, ScatterModel::Identity, 1);
    const CompositeChannel composite = compose_channel(scatter, ch.matrix);
    for (const auto& h : composite.per_subband) CHECK((h - ch.matrix).norm() == 0.0);
}

TEST_CASE("compose matches a hand 2x2 product") {
    CMatrix hr(2, 2);
    hr << cplx(1, 0), cplx(0, 1), cplx(2, 0), cplx(0, -1);
    SubbandScatterChannel s;
    s.subband_index = 1;
    s.model = ScatterModel::DiagonalFading;
    s.dim = 2;
    s.diagonal.resize(2);
    s.diagonal << cplx(2, 0), cplx(0, 1);
    const CompositeChannel composite = compose_channel({s}, hr);
    CMatrix expected(2, 2);
    expected << cplx(2, 0), cplx(0, 2), cplx(0, 2), cplx(1, 0);
    CHECK((composite.per_subband[0] - expected).norm() < 1e-15);
}

TEST_CASE("banded scatter dense() agrees with apply()") {
    const auto scatter = sample_local_scatter(8, 2, ScatterModel::BandedMixing, 11);
    CMatrix rhs = CMatrix::Random(8, 3);
    for (const auto& s : scatter)
        CHECK((s.apply(rhs) - s.dense() * rhs).norm() < 1e-13);
}

TEST_CASE("compose rejects mismatched dimensions") {
    const LongTermChannel ch = small_channel();
    const auto scatter =
        sample_local_scatter(ch.matrix.rows() + 1, 2, ScatterModel::DiagonalFading, 1);
    CHECK_THROWS_AS(compose_channel(scatter, ch.matrix), shape_error);
}

TEST_CASE("matrix stack binary round-trip is bit-exact") {
    std::vector<CMatrix> stack;
    stack.push_back(CMatrix::Random(5, 3));
    stack.push_back(CMatrix::Random(5, 3));
    const auto path = std::filesystem::temp_directory_path() / "eb_test_stack.bin";
    write_matrix_stack(path, stack);
    const auto loaded = read_matrix_stack(path);
    REQUIRE(loaded.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        REQUIRE(loaded[k].rows() == 5);
        for (Eigen::Index r = 0; r < 5; ++r)
            for (Eigen::Index c = 0; c < 3; ++c) CHECK(loaded[k](r, c) == stack[k](r, c));
    }
    std::filesystem::remove(path);

    CHECK_THROWS_AS(read_matrix_stack("/nonexistent/eb.bin"), io_error);
    std::vector<CMatrix> bad = {CMatrix::Random(2, 2), CMatrix::Random(3, 2)};
    CHECK_THROWS_AS(write_matrix_stack(path, bad), shape_error);
}
