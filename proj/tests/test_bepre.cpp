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

#include "oam/bepre.hpp"
#include "oam/channel.hpp"
#include "oam/rng.hpp"
#include "random_geometry.hpp"

using Catch::Matchers::WithinAbs;

namespace
{

oam::MatrixXc<double> random_matrix(Eigen::Index n, oam::SplitMix64 &rng)
{
    oam::MatrixXc<double> m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
        {
            const auto [a, b] = rng.normal_pair();
            m(r, c) = {a, b};
        }
    return m;
}

} // namespace

TEST_CASE("singular value decomposition reconstructs the input", "[bepre]")
{
    oam::SplitMix64 rng(0x7c25e9a4d01f8b36ULL);
    for (const Eigen::Index n : {2L, 5L, 8L})
    {
        const oam::MatrixXc<double> h = random_matrix(n, rng);
        const auto f = oam::svd(h);
        const oam::MatrixXc<double> back =
            f.left * f.singular_values.cast<std::complex<double>>().asDiagonal() *
            f.right.adjoint();
        CHECK((back - h).norm() <= 1e-13 * h.norm());
        CHECK(oam::unitarity_residual(f.left) <= 1e-13);
        CHECK(oam::unitarity_residual(f.right) <= 1e-13);
        for (Eigen::Index i = 1; i < n; ++i)
            CHECK(f.singular_values(i - 1) >= f.singular_values(i));
        CHECK(f.singular_values(n - 1) >= 0.0);
    }
}

TEST_CASE("decomposition rejects unusable inputs", "[bepre]")
{
    CHECK_THROWS_AS(oam::svd(oam::MatrixXc<double>::Zero(2, 3)), std::invalid_argument);
    oam::MatrixXc<double> bad = oam::MatrixXc<double>::Zero(2, 2);
    bad(0, 0) = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(oam::svd(bad), std::invalid_argument);
    CHECK_THROWS_AS(oam::bepre_transforms(oam::MatrixXc<double>::Zero(3, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(oam::build_circulant(oam::VectorXr<double>()), std::invalid_argument);
    oam::VectorXr<double> negative(2);
    negative << 1.0, -0.5;
    CHECK_THROWS_AS(oam::build_circulant(negative), std::invalid_argument);
}

TEST_CASE("spectrum-generated circulant has the right structure", "[bepre]")
{
    oam::VectorXr<double> sv(4);
    sv << 2.0, 1.25, 0.5, 0.125;
    const oam::MatrixXc<double> c = oam::build_circulant(sv);
    CHECK(oam::circulant_residual(c) <= 1e-14);
    // its DFT-basis diagonal is exactly the requested spectrum
    const auto diag = oam::diag_of_conjugated(c);
    CHECK(diag.offdiag_relative_energy <= 1e-14);
    for (Eigen::Index i = 0; i < 4; ++i)
    {
        CHECK_THAT(diag.diagonal(i).real(), WithinAbs(sv(i), 1e-13));
        CHECK_THAT(diag.diagonal(i).imag(), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("transform pair turns the channel into its circulant equivalent", "[bepre]")
{
    oam::SplitMix64 rng(0x48d1b6f07a93c5e2ULL);
    for (int trial = 0; trial < 50; ++trial)
    {
        const oam::LinkGeometry<double> g = oam_test::random_geometry(rng);
        const oam::MatrixXc<double> h = oam::channel_matrix(g).entries;
        const auto t = oam::bepre_transforms(h);

        CHECK(oam::equivalence_residual(h, t) <= 1e-10);
        CHECK(oam::unitarity_residual(t.beamform) <= 1e-12);
        CHECK(oam::unitarity_residual(t.predetect) <= 1e-12);
        CHECK(oam::circulant_residual(t.circulant) <= 1e-10);

        // per-mode gains equal the singular values, descending
        const auto f = oam::svd(h);
        const double top = f.singular_values(0);
        for (Eigen::Index i = 0; i < t.lambda.size(); ++i)
        {
            CHECK(t.lambda(i) >= 0.0);
            CHECK(std::abs(t.lambda(i) - f.singular_values(i)) <= 1e-10 * top);
            if (i > 0)
                CHECK(t.lambda(i) <= t.lambda(i - 1) + 1e-12 * top);
        }
    }
}

TEST_CASE("numerical rank tracks constructed rank deficiency", "[bepre]")
{
    oam::SplitMix64 rng(0x3f92ac51e87d604bULL);
    const Eigen::Index n = 6;
    const oam::MatrixXc<double> full = random_matrix(n, rng);
    CHECK(oam::bepre_transforms(full).numerical_rank == n);

    // outer product of two vectors has rank exactly 1
    oam::VectorXc<double> u(n), v(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const auto [a, b] = rng.normal_pair();
        const auto [c, d] = rng.normal_pair();
        u(i) = {a, b};
        v(i) = {c, d};
    }
    const oam::MatrixXc<double> rank1 = u * v.adjoint();
    const auto t = oam::bepre_transforms(rank1);
    CHECK(t.numerical_rank == 1);
    CHECK(oam::equivalence_residual(rank1, t) <= 1e-10);
}

TEST_CASE("receive transform keeps white noise white", "[bepre]")
{
    oam::SplitMix64 rng(0xa60cd38e49f17b25ULL);
    const oam::MatrixXc<double> h = random_matrix(8, rng);
    const auto t = oam::bepre_transforms(h);
    const oam::MatrixXc<double> chain = oam::idft_matrix<double>(8).adjoint() * t.predetect;
    CHECK((chain * chain.adjoint() - oam::MatrixXc<double>::Identity(8, 8)).norm() <= 1e-12);
}
