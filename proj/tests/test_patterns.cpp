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

#include "core/errors.hpp"
#include "core/patterns.hpp"

using namespace eb;

TEST_CASE("steering vector basics") {
    const ArrayGeometry single = build_array(1, 1, 2e9);
    for (double az : {-60.0, 0.0, 45.0})
        CHECK(std::abs(steering_vector(single, az, -10.0)(0) - cplx(1.0, 0.0)) < 1e-12);

    // boresight is normal to the y-z array plane: zero projection, all ones
    const ArrayGeometry a = build_array(4, 12, 2e9);
    const CVector bore = steering_vector(a, 0.0, 0.0);
    for (Eigen::Index n = 0; n < bore.size(); ++n)
        CHECK(std::abs(bore(n) - cplx(1.0, 0.0)) < 1e-12);

    // two elements lambda/2 along y, azimuth 90 degrees: opposite phases
    const ArrayGeometry pair = build_array(2, 1, 2e9);
    const CVector v = steering_vector(pair, 90.0, 0.0);
    CHECK(std::abs(v(1) / v(0) - std::polar(1.0, kPi)) < 1e-12);
    CHECK(std::abs(std::abs(v(0)) - 1.0) < 1e-12);
}

TEST_CASE("uniform weights give the coherent array gain at boresight") {
    const ArrayGeometry a = build_array(4, 12, 2e9);
    const CVector w = CVector::Ones(48);
    const BeamPattern p = beam_pattern(a, w, {0.0}, {0.0});
    CHECK(p.gain_db(0, 0) == doctest::Approx(10.0 * std::log10(48.0)).epsilon(1e-10));
}

TEST_CASE("two-element endfire null") {
    const ArrayGeometry pair = build_array(2, 1, 2e9);
    const BeamPattern p = beam_pattern(pair, CVector::Ones(2), {90.0}, {0.0});
    CHECK(p.gain_db(0, 0) < -40.0);
}

TEST_CASE("pattern invariances") {
    const ArrayGeometry a = build_array(3, 4, 2e9);
    CVector w(12);
    for (Eigen::Index n = 0; n < 12; ++n)
        w(n) = std::polar(1.0 + 0.1 * static_cast<double>(n), 0.3 * static_cast<double>(n));
    const auto az = degree_range(-60.0, 60.0, 15.0);
    const auto el = degree_range(-30.0, 30.0, 15.0);

    const BeamPattern base = beam_pattern(a, w, az, el);
    const BeamPattern rotated = beam_pattern(a, CVector(w * std::polar(1.0, 1.234)), az, el);
    const BeamPattern scaled = beam_pattern(a, CVector(w * 7.5), az, el);
    CHECK((base.gain_db - rotated.gain_db).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((base.gain_db - scaled.gain_db).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conjugate-matched weights peak at the target direction") {
    const ArrayGeometry a = build_array(4, 12, 2e9);
    const double az0 = 20.0, el0 = -15.0;
    const CVector w = steering_vector(a, az0, el0);
    const auto az = degree_range(-90.0, 90.0, 5.0);
    const auto el = degree_range(-90.0, 30.0, 5.0);
    const BeamPattern p = beam_pattern(a, w, az, el);

    Eigen::Index pr = 0, pc = 0;
    p.gain_db.maxCoeff(&pr, &pc);
    CHECK(p.azimuth_deg[static_cast<std::size_t>(pc)] == doctest::Approx(az0));
    CHECK(p.elevation_deg[static_cast<std::size_t>(pr)] == doctest::Approx(el0));
}

TEST_CASE("beam pattern rejects bad input") {
    const ArrayGeometry a = build_array(2, 2, 2e9);
    CHECK_THROWS_AS(beam_pattern(a, CVector::Zero(4), {0.0}, {0.0}), invalid_parameter_error);
    CHECK_THROWS_AS(beam_pattern(a, CVector::Ones(3), {0.0}, {0.0}), shape_error);
    CHECK_THROWS_AS(beam_pattern(a, CVector::Ones(4), {}, {0.0}), invalid_parameter_error);
}

TEST_CASE("element power map") {
    const ArrayGeometry a = build_array(4, 12, 2e9);

    // single basis weight lights exactly one cell
    CVector w = CVector::Zero(48);
    w(13) = cplx(0.0, 2.0); // column 1, row 1
    const ElementPowerMap m = element_power(a, w);
    CHECK(m.power(1, 1) == 1.0);
    CHECK(m.power.sum() == 1.0);
    CHECK(m.total == doctest::Approx(4.0).epsilon(1e-15));

    // unnormalized sum equals ||w||^2
    CVector rnd(48);
    for (Eigen::Index n = 0; n < 48; ++n)
        rnd(n) = cplx(std::sin(0.1 * static_cast<double>(n)), std::cos(0.2 * static_cast<double>(n)));
    const ElementPowerMap m2 = element_power(a, rnd);
    CHECK(m2.total == doctest::Approx(rnd.squaredNorm()).epsilon(1e-12));
    CHECK(m2.power.maxCoeff() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m2.power.minCoeff() >= 0.0);

    CHECK_THROWS_AS(element_power(a, CVector::Ones(47)), shape_error);
}

TEST_CASE("csv export clamps the floor") {
    const ArrayGeometry pair = build_array(2, 1, 2e9);
    const BeamPattern p = beam_pattern(pair, CVector::Ones(2), {90.0}, {0.0});
    const std::string csv = pattern_to_csv(p);
    CHECK(csv.rfind("azimuth_deg,", 0) == 0);
    CHECK(csv.find("-60\n") != std::string::npos); // deep null clamped at -60 dB
}
