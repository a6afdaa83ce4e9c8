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

#ifndef OAM_TESTS_RANDOM_GEOMETRY_HPP
#define OAM_TESTS_RANDOM_GEOMETRY_HPP

#include <numbers>

#include "oam/geometry.hpp"
#include "oam/rng.hpp"

namespace oam_test
{

// A random misaligned link: off-axis angle in [0, pi/2], azimuth and ring
// rotations in [0, 2 pi), tilts in [0, pi/2], distance in [0.1, 10] m,
// element count from {2, 4, 8, 16}. Ring radii stay at the 0.04 m default
// so elements can never collide at the short-distance end of the range.
inline oam::LinkGeometry<double> random_geometry(oam::SplitMix64 &rng)
{
    constexpr double pi = std::numbers::pi;
    oam::LinkGeometry<double> g;
    const int sizes[4] = {2, 4, 8, 16};
    const int n = sizes[rng.bounded(4)];
    g.n_tx = n;
    g.n_rx = n;
    g.distance = 0.1 + 9.9 * rng.uniform01();
    g.phi = (pi / 2.0) * rng.uniform01();
    g.theta = 2.0 * pi * rng.uniform01();
    g.tilt_x = (pi / 2.0) * rng.uniform01();
    g.tilt_y = (pi / 2.0) * rng.uniform01();
    g.alpha_tx = 2.0 * pi * rng.uniform01();
    g.alpha_rx = 2.0 * pi * rng.uniform01();
    return g;
}

} // namespace oam_test

#endif // OAM_TESTS_RANDOM_GEOMETRY_HPP
