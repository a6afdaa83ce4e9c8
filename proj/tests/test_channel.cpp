// SPDX-License-Identifier: Apache-2.0
//
// oamlink - link-level simulator for OAM radio over misaligned circular arrays
// Copyright (C) 2026 the oamlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Frozen values come from a 50-digit arbitrary-precision oracle. Gain
// tolerances are ~1e-10 relative: the phase term 2 pi d / lambda is ~6e2,
// so the last two digits of a double distance move the phase visibly.

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "oam/channel.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
constexpr double pi = std::numbers::pi;

oam::LinkGeometry<double> reference_misaligned()
{
    oam::LinkGeometry<double> g;
    g.n_tx = 8;
    g.n_rx = 8;
    g.wavelength = 0.01;
    g.radius_tx = 0.04;
    g.radius_rx = 0.04;
    g.distance = 1.0;
    g.phi = pi / 6.0;
    g.theta = 0.4;
    g.tilt_x = 0.2;
    g.tilt_y = 0.1;
    return g;
}
} // namespace

TEST_CASE("line-of-sight gain, frozen value", "[channel]")
{
    const auto g = reference_misaligned();
    const std::complex<double> h27 = oam::channel_gain(g, 2, 7);
    CHECK_THAT(h27.real(), WithinRel(-0.00050563490540406062435, 1e-10));
    CHECK_THAT(h27.imag(), WithinRel(0.00058776664367725543230, 1e-10));
}

TEST_CASE("gain magnitude and phase follow the path length", "[channel]")
{
    const auto g = reference_misaligned();
    const double d = oam::element_distance(g, 5, 2);
    const std::complex<double> h = oam::channel_gain(g, 5, 2);
    CHECK_THAT(std::abs(h), WithinRel(g.wavelength / (4.0 * pi * d), 1e-13));
    CHECK_THAT(std::arg(h), WithinAbs(std::remainder(-2.0 * pi * d / g.wavelength, 2.0 * pi),
                                      1e-9));
}

TEST_CASE("channel matrix, frozen entries", "[channel]")
{
    const auto h = oam::channel_matrix(reference_misaligned());
    REQUIRE(h.entries.rows() == 8);
    REQUIRE(h.entries.cols() == 8);
    CHECK_THAT(h.entries(0, 0).real(), WithinRel(-0.00041168158745740870491, 1e-10));
    CHECK_THAT(h.entries(0, 0).imag(), WithinRel(-0.00067788695312989722846, 1e-10));
    CHECK_THAT(h.entries(3, 5).real(), WithinRel(-0.00074805011562619864122, 1e-10));
    CHECK_THAT(h.entries(3, 5).imag(), WithinRel(0.00025832779612767802268, 1e-10));
    CHECK_THAT(h.entries(7, 7).real(), WithinRel(-0.00020392949483093308171, 1e-10));
    CHECK_THAT(h.entries(7, 7).imag(), WithinRel(0.00076340810223652917121, 1e-10));
    CHECK_THAT(h.entries.norm(), WithinRel(0.0063615790763320385695, 1e-12));
}

TEST_CASE("complex gain factor scales every entry", "[channel]")
{
    auto g = reference_misaligned();
    const auto base = oam::channel_matrix(g);
    g.beta = {2.0, -1.0};
    const auto scaled = oam::channel_matrix(g);
    const oam::MatrixXc<double> expected = std::complex<double>(2.0, -1.0) * base.entries;
    CHECK((scaled.entries - expected).norm() <= 1e-15 * expected.norm());
}

TEST_CASE("aligned link gives a circulant channel", "[channel]")
{
    oam::LinkGeometry<double> g; // defaults: aligned, N = M = 8
    const auto h = oam::channel_matrix(g);
    // row m is row 1 cyclically right-shifted: entry depends on (n - m) mod N
    for (int m = 0; m < 8; ++m)
        for (int n = 0; n < 8; ++n)
        {
            const std::complex<double> a = h.entries(m, n);
            const std::complex<double> b = h.entries(0, (n - m + 8) % 8);
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
        }
}

TEST_CASE("invalid geometry is rejected before evaluation", "[channel]")
{
    oam::LinkGeometry<double> g;
    g.wavelength = 0.0;
    CHECK_THROWS_AS(oam::channel_matrix(g), std::invalid_argument);

    oam::LinkGeometry<double> tiny;
    tiny.distance = 1e-15;
    CHECK_THROWS_AS(oam::channel_matrix(tiny), std::exception);
}
