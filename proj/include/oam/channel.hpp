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

#ifndef OAM_CHANNEL_HPP
#define OAM_CHANNEL_HPP

#include <complex>
#include <numbers>

#include "oam/geometry.hpp"
#include "oam/transform.hpp"

namespace oam
{

// Free-space line-of-sight channel between the two rings; entry (m, n) is
// the complex gain from transmit element n to receive element m.
template <typename Real>
struct ChannelMatrix
{
    MatrixXc<Real> entries;
    LinkGeometry<Real> geometry;
};

// Single-pair free-space gain
//   h_mn = beta * lambda * exp(-j 2 pi d_mn / lambda) / (4 pi d_mn),
// i.e. magnitude |beta| lambda / (4 pi d_mn) and phase set by the electrical
// path length. m, n are 1-based.
template <typename Real>
inline std::complex<Real> channel_gain(const LinkGeometry<Real> &g, int m, int n)
{
    const Real d = element_distance(g, m, n);
    const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
    const Real magnitude = g.wavelength / (Real(4) * std::numbers::pi_v<Real> * d);
    return g.beta * std::polar(magnitude, -two_pi * d / g.wavelength);
}

template <typename Real>
inline ChannelMatrix<Real> channel_matrix(const LinkGeometry<Real> &g)
{
    validate(g);
    ChannelMatrix<Real> h;
    h.geometry = g;
    h.entries.resize(g.n_rx, g.n_tx);
    for (int m = 1; m <= g.n_rx; ++m)
        for (int n = 1; n <= g.n_tx; ++n)
            h.entries(m - 1, n - 1) = channel_gain(g, m, n);
    return h;
}

} // namespace oam

#endif // OAM_CHANNEL_HPP
