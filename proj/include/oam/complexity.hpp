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
// ------------------------------------------------------------------------
//
// Real-operation counts for the two detectors, per received symbol vector.
//
// Cost model "cm1": one complex multiply = 4 real multiplies + 2 real adds,
// one complex add = 2 real adds, one squared magnitude = 2 multiplies +
// 1 add. Matrices that depend only on the channel (not on y) are treated
// as precomputed and not charged.
//
// Joint ML evaluates |y - G s|^2 for all xi^N hypotheses directly in the
// antenna domain:
//   multiplies = xi^N * (4N^2 + 2N)
//   adds       = xi^N * (4N^2 + 2N - 1)
//
// Per-mode ML pays two N x N matrix-vector products to reach the mode
// domain, then xi scalar metrics per mode:
//   multiplies = 6 N xi + 8 N^2
//   adds       = 5 N xi + 8 N^2 - 4N
//
// Counts saturate at UINT64_MAX instead of wrapping.

#ifndef OAM_COMPLEXITY_HPP
#define OAM_COMPLEXITY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oam
{

struct OpCount
{
    std::uint64_t multiplies = 0;
    std::uint64_t adds = 0;
    std::string cost_model = "cm1";

    bool saturated() const
    {
        return multiplies == UINT64_MAX || adds == UINT64_MAX;
    }
};

namespace detail
{

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
        r = sat_mul(r, base);
    return r;
}

inline void check_detector_args(std::uint64_t n, std::uint64_t xi)
{
    if (n < 1)
        throw std::invalid_argument("op count: need at least one mode");
    if (xi < 2)
        throw std::invalid_argument("op count: constellation needs at least two points");
}

} // namespace detail

inline OpCount count_joint_ml(std::uint64_t n, std::uint64_t xi)
{
    detail::check_detector_args(n, xi);
    const std::uint64_t hypotheses = detail::sat_pow(xi, n);
    const std::uint64_t per_mults = detail::sat_add(detail::sat_mul(4, detail::sat_mul(n, n)),
                                                    detail::sat_mul(2, n));
    OpCount c;
    c.multiplies = detail::sat_mul(hypotheses, per_mults);
    c.adds = detail::sat_mul(hypotheses, per_mults - 1);
    return c;
}

inline OpCount count_permode_ml(std::uint64_t n, std::uint64_t xi)
{
    detail::check_detector_args(n, xi);
    const std::uint64_t n2 = detail::sat_mul(n, n);
    const std::uint64_t nxi = detail::sat_mul(n, xi);
    OpCount c;
    c.multiplies = detail::sat_add(detail::sat_mul(6, nxi), detail::sat_mul(8, n2));
    // 8N^2 - 4N written as 4N(2N - 1) to stay nonnegative throughout.
    c.adds = detail::sat_add(detail::sat_mul(5, nxi),
                             detail::sat_mul(detail::sat_mul(4, n), detail::sat_mul(2, n) - 1));
    return c;
}

} // namespace oam

#endif // OAM_COMPLEXITY_HPP
