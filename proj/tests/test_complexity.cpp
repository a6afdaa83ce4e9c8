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

#include <catch2/catch_amalgamated.hpp>

#include "oam/complexity.hpp"

TEST_CASE("operation counts are exact integers", "[complexity]")
{
    // joint: xi^N hypotheses, each 4N^2+2N multiplies and one add fewer
    const auto j24 = oam::count_joint_ml(2, 4);
    CHECK(j24.multiplies == 16 * 20);
    CHECK(j24.adds == 16 * 19);

    const auto j104 = oam::count_joint_ml(10, 4);
    CHECK(j104.multiplies == 440401920ULL);
    CHECK(j104.adds == 439353344ULL);

    // per-mode: two N x N matrix-vector products plus N*xi scalar metrics
    const auto p24 = oam::count_permode_ml(2, 4);
    CHECK(p24.multiplies == 6 * 2 * 4 + 8 * 4);
    CHECK(p24.adds == 5 * 2 * 4 + 8 * 4 - 8);

    const auto p104 = oam::count_permode_ml(10, 4);
    CHECK(p104.multiplies == 1040ULL);
    CHECK(p104.adds == 960ULL);

    CHECK(j104.cost_model == "cm1");
    CHECK(p104.cost_model == "cm1");
    CHECK_FALSE(j104.saturated());
}

TEST_CASE("exhaustive detection dwarfs per-mode detection", "[complexity]")
{
    // the addition gap at N=10, QPSK, and its growth in N
    const std::uint64_t gap =
        oam::count_joint_ml(10, 4).adds - oam::count_permode_ml(10, 4).adds;
    CHECK(gap == 439352384ULL);

    double previous_ratio = 0.0;
    for (std::uint64_t n = 2; n <= 10; ++n)
    {
        const double ratio = double(oam::count_joint_ml(n, 4).adds) /
                             double(oam::count_permode_ml(n, 4).adds);
        CHECK(ratio > previous_ratio);
        previous_ratio = ratio;
    }
}

TEST_CASE("counts saturate instead of wrapping", "[complexity]")
{
    // 4^40 = 2^80 overflows 64 bits; the count pegs at the maximum
    const auto huge = oam::count_joint_ml(40, 4);
    CHECK(huge.multiplies == UINT64_MAX);
    CHECK(huge.adds == UINT64_MAX);
    CHECK(huge.saturated());

    // 4^30 * (4*900+60) also overflows even though 4^30 itself fits
    const auto big = oam::count_joint_ml(30, 4);
    CHECK(big.multiplies == UINT64_MAX);

    // per-mode counts stay polynomial and never saturate at sane sizes
    CHECK_FALSE(oam::count_permode_ml(1024, 16).saturated());
}

TEST_CASE("detector argument validation", "[complexity]")
{
    CHECK_THROWS_AS(oam::count_joint_ml(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(oam::count_joint_ml(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(oam::count_permode_ml(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(oam::count_permode_ml(4, 0), std::invalid_argument);
}
