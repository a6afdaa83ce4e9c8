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

#ifndef OAM_CONSTELLATION_HPP
#define OAM_CONSTELLATION_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace oam
{

// Symbol alphabet, normalized so the average energy over all points is 1.
template <typename Real>
struct Constellation
{
    std::string name;
    std::vector<std::complex<Real>> points;

    std::size_t size() const { return points.size(); }
};

template <typename Real>
inline Constellation<Real> qpsk()
{
    const Real s = Real(1) / std::sqrt(Real(2));
    // Gray order: adjacent points differ in one bit.
    return Constellation<Real>{"qpsk",
                               {{s, s}, {-s, s}, {-s, -s}, {s, -s}}};
}

template <typename Real>
inline Constellation<Real> qam16()
{
    // Square 16-QAM, levels {-3,-1,1,3} scaled to unit average energy
    // (mean squared level is 5 per axis, 10 total). Gray coded per axis
    // through the level sequence 0,1,3,2 -> -3,-1,3,1.
    const Real s = Real(1) / std::sqrt(Real(10));
    const int gray_levels[4] = {-3, -1, 3, 1};
    Constellation<Real> c;
    c.name = "16qam";
    c.points.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int q = 0; q < 4; ++q)
            c.points.push_back({Real(gray_levels[i]) * s, Real(gray_levels[q]) * s});
    return c;
}

template <typename Real>
inline Constellation<Real> constellation_by_name(const std::string &name)
{
    if (name == "qpsk")
        return qpsk<Real>();
    if (name == "16qam")
        return qam16<Real>();
    throw std::invalid_argument("unknown constellation: " + name +
                                " (expected qpsk or 16qam)");
}

} // namespace oam

#endif // OAM_CONSTELLATION_HPP
