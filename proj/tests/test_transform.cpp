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

#include <numbers>
#include <vector>

#include "oam/rng.hpp"
#include "oam/transform.hpp"

using Catch::Matchers::WithinAbs;

namespace
{
constexpr double pi = std::numbers::pi;

oam::VectorXc<double> random_complex_vector(Eigen::Index n, oam::SplitMix64 &rng)
{
    oam::VectorXc<double> v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = {2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0};
    return v;
}
} // namespace

TEST_CASE("inverse DFT matrix entries and unitarity", "[transform]")
{
    const auto w = oam::idft_matrix<double>(8);
    const double scale = 1.0 / std::sqrt(8.0);
    // positive-exponent convention: entry (n, k) = exp(+j 2 pi n k / N) / sqrt(N)
    CHECK_THAT(w(1, 1).real(), WithinAbs(scale * std::cos(2.0 * pi / 8.0), 1e-15));
    CHECK_THAT(w(1, 1).imag(), WithinAbs(scale * std::sin(2.0 * pi / 8.0), 1e-15));
    CHECK_THAT(w(3, 5).real(), WithinAbs(scale * std::cos(2.0 * pi * 15.0 / 8.0), 1e-15));
    CHECK_THAT(w(3, 5).imag(), WithinAbs(scale * std::sin(2.0 * pi * 15.0 / 8.0), 1e-15));
    for (Eigen::Index i = 0; i < 8; ++i)
    {
        CHECK_THAT(w(i, 0).real(), WithinAbs(scale, 1e-15));
        CHECK_THAT(w(i, 0).imag(), WithinAbs(0.0, 1e-15));
    }
    for (const Eigen::Index n : {1L, 2L, 3L, 8L, 16L, 64L})
    {
        const auto wn = oam::idft_matrix<double>(n);
        CHECK((wn.adjoint() * wn - oam::MatrixXc<double>::Identity(n, n)).norm() <= 1e-13);
    }
    CHECK_THROWS_AS(oam::idft_matrix<double>(0), std::invalid_argument);
}

TEST_CASE("mode of each DFT column", "[transform]")
{
    CHECK(oam::mode_index_map(8) == std::vector<int>{0, 1, 2, 3, 4, -3, -2, -1});
    CHECK(oam::mode_index_map(7) == std::vector<int>{0, 1, 2, 3, -3, -2, -1});
    CHECK(oam::mode_index_map(2) == std::vector<int>{0, 1});
    CHECK(oam::mode_index_map(1) == std::vector<int>{0});

    for (const int n : {1, 2, 3, 7, 8, 16})
    {
        const std::vector<int> modes = oam::mode_index_map(n);
        for (int k = 0; k < n; ++k)
            CHECK(oam::mode_column(modes[std::size_t(k)], n) == k);
    }
    CHECK(oam::mode_column(-3, 8) == 5);
    CHECK(oam::mode_column(11, 8) == 3); // modes alias mod n
}

TEST_CASE("ring rotation phases per mode", "[transform]")
{
    const double alpha = 0.37;
    const auto ph = oam::mode_phases(8, alpha);
    const std::vector<int> modes = oam::mode_index_map(8);
    for (int k = 0; k < 8; ++k)
    {
        CHECK_THAT(std::abs(ph(k)), WithinAbs(1.0, 1e-15));
        CHECK_THAT(std::arg(ph(k)), WithinAbs(std::remainder(alpha * modes[std::size_t(k)], 2.0 * pi),
                                              1e-15));
    }
    // mode 0 is unaffected by ring rotation
    CHECK_THAT(ph(0).real(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("circulant construction and DFT diagonalization", "[transform]")
{
    oam::SplitMix64 rng(0x5b1f8c2a9d3e7460ULL);
    for (const Eigen::Index n : {3L, 5L, 8L})
    {
        const oam::VectorXc<double> row = random_complex_vector(n, rng);
        const oam::MatrixXc<double> c = oam::circulant_from_first_row(row);

        // row i is row i-1 right-shifted by one
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                CHECK(c(i, k) == row((k - i + n) % n));
        CHECK(c(1, 0) == row(n - 1));

        const auto diag = oam::diag_of_conjugated(c);
        CHECK(diag.offdiag_relative_energy <= 1e-13);

        // eigenvalues of a circulant are sqrt(N) * (W * first_row)
        const oam::VectorXc<double> expected =
            std::sqrt(double(n)) * (oam::idft_matrix<double>(n) * row);
        CHECK((diag.diagonal - expected).norm() <= 1e-13 * expected.norm());
    }

    // a generic non-circulant matrix leaves substantial off-diagonal energy
    oam::MatrixXc<double> generic(3, 3);
    generic.setZero();
    generic(0, 1) = {1.0, 0.0};
    const auto leak = oam::diag_of_conjugated(generic);
    CHECK(leak.offdiag_relative_energy > 0.5);

    CHECK_THROWS_AS(oam::circulant_from_first_row(oam::VectorXc<double>()),
                    std::invalid_argument);
}

TEST_CASE("conjugation round trip recovers the circulant", "[transform]")
{
    oam::SplitMix64 rng(0x91e04d7b3a6c52f8ULL);
    const Eigen::Index n = 6;
    const oam::VectorXc<double> row = random_complex_vector(n, rng);
    const oam::MatrixXc<double> c = oam::circulant_from_first_row(row);
    const auto w = oam::idft_matrix<double>(n);
    const auto diag = oam::diag_of_conjugated(c);
    const oam::MatrixXc<double> back = w * diag.diagonal.asDiagonal() * w.adjoint();
    CHECK((back - c).norm() <= 1e-13 * c.norm());
}
