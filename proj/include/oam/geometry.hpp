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

#ifndef OAM_GEOMETRY_HPP
#define OAM_GEOMETRY_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace oam
{

template <typename Real>
using Vec3 = Eigen::Matrix<Real, 3, 1>;

template <typename Real>
using Mat3 = Eigen::Matrix<Real, 3, 3>;

// Raised when two antenna elements (nearly) coincide and the path loss
// would blow up. The threshold is 1 nm, far below any sane array layout.
struct degenerate_geometry_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Full geometric description of one link: a transmit ring of n_tx elements
// with radius radius_tx in the z = 0 plane, and a receive ring of n_rx
// elements with radius radius_rx whose center sits at distance `distance`
// from the origin. The receive center direction is given by the polar angle
// phi (from the z-axis) and azimuth theta; the receive ring itself may be
// tilted by tilt_x (rotation about the y-axis) and tilt_y (rotation about
// the x-axis). alpha_tx / alpha_rx rotate the first element of each ring
// away from zero phase angle. beta is the complex antenna constant of the
// per-pair gain; all lengths are meters and all angles radians.
template <typename Real>
struct LinkGeometry
{
    int n_tx = 8;
    int n_rx = 8;
    Real radius_tx = Real(0.04);
    Real radius_rx = Real(0.04);
    Real distance = Real(1);
    Real theta = Real(0);
    Real phi = Real(0);
    Real tilt_x = Real(0);
    Real tilt_y = Real(0);
    Real alpha_tx = Real(0);
    Real alpha_rx = Real(0);
    Real wavelength = Real(0.01);
    std::complex<Real> beta = std::complex<Real>(Real(1), Real(0));
};

template <typename Real>
inline void validate(const LinkGeometry<Real> &g)
{
    auto positive = [](Real v, const char *name) {
        if (!(v > Real(0)) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be positive and finite");
    };
    if (g.n_tx < 1)
        throw std::invalid_argument("n_tx must be at least 1");
    if (g.n_rx < 1)
        throw std::invalid_argument("n_rx must be at least 1");
    positive(g.radius_tx, "radius_tx");
    positive(g.radius_rx, "radius_rx");
    positive(g.distance, "distance");
    positive(g.wavelength, "wavelength");
}

// Rotation about the x-axis, written out exactly as used by the receive
// ring construction; note the sign layout (the transpose of the usual
// right-handed convention).
template <typename Real>
inline Mat3<Real> rotation_x(Real angle)
{
    const Real c = std::cos(angle), s = std::sin(angle);
    Mat3<Real> m;
    m << Real(1), Real(0), Real(0),
        Real(0), c, s,
        Real(0), -s, c;
    return m;
}

// Rotation about the y-axis, companion of rotation_x.
template <typename Real>
inline Mat3<Real> rotation_y(Real angle)
{
    const Real c = std::cos(angle), s = std::sin(angle);
    Mat3<Real> m;
    m << c, Real(0), -s,
        Real(0), Real(1), Real(0),
        s, Real(0), c;
    return m;
}

namespace detail
{
inline void check_index(int i, int count, const char *what)
{
    if (i < 1 || i > count)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(count));
}
} // namespace detail

// Position of the n-th transmit element (1-based), on a ring of radius
// radius_tx in the z = 0 plane.
template <typename Real>
inline Vec3<Real> tx_element_position(const LinkGeometry<Real> &g, int n)
{
    detail::check_index(n, g.n_tx, "transmit element");
    const Real ang = Real(2) * std::numbers::pi_v<Real> * Real(n - 1) / Real(g.n_tx) + g.alpha_tx;
    return Vec3<Real>(g.radius_tx * std::cos(ang), g.radius_tx * std::sin(ang), Real(0));
}

// Position of the m-th receive element (1-based): the local ring coordinate
// is tilted by rotation_y(tilt_y) * rotation_x(tilt_x) and shifted to the
// receive center d * (sin phi cos theta, sin phi sin theta, cos phi).
// This rotation composition is the single source of truth for coordinates;
// rx_element_position_expanded cross-checks it.
template <typename Real>
inline Vec3<Real> rx_element_position(const LinkGeometry<Real> &g, int m)
{
    detail::check_index(m, g.n_rx, "receive element");
    const Real ang = Real(2) * std::numbers::pi_v<Real> * Real(m - 1) / Real(g.n_rx) + g.alpha_rx;
    const Vec3<Real> local(g.radius_rx * std::cos(ang), g.radius_rx * std::sin(ang), Real(0));
    const Vec3<Real> center(g.distance * std::sin(g.phi) * std::cos(g.theta),
                            g.distance * std::sin(g.phi) * std::sin(g.theta),
                            g.distance * std::cos(g.phi));
    return rotation_y(g.tilt_y) * (rotation_x(g.tilt_x) * local) + center;
}

// Fully expanded trigonometric form of rx_element_position. Kept only as an
// independent cross-check; not used by the production path.
template <typename Real>
inline Vec3<Real> rx_element_position_expanded(const LinkGeometry<Real> &g, int m)
{
    detail::check_index(m, g.n_rx, "receive element");
    const Real ps = Real(2) * std::numbers::pi_v<Real> * Real(m - 1) / Real(g.n_rx) + g.alpha_rx;
    const Real c = std::cos(ps), s = std::sin(ps);
    const Real cx = std::cos(g.tilt_x), sx = std::sin(g.tilt_x);
    const Real cy = std::cos(g.tilt_y), sy = std::sin(g.tilt_y);
    const Real R = g.radius_rx, d = g.distance;
    const Real bx = d * std::sin(g.phi) * std::cos(g.theta) + R * c * cy + R * s * sx * sy;
    const Real by = d * std::sin(g.phi) * std::sin(g.theta) + R * s * cx;
    const Real bz = d * std::cos(g.phi) + R * c * sy - R * s * sx * cy;
    return Vec3<Real>(bx, by, bz);
}

// Euclidean distance between receive element m and transmit element n.
template <typename Real>
inline Real element_distance(const LinkGeometry<Real> &g, int m, int n)
{
    const Real dist = (rx_element_position(g, m) - tx_element_position(g, n)).norm();
    if (dist < Real(1e-9))
        throw degenerate_geometry_error("elements (m=" + std::to_string(m) + ", n=" +
                                        std::to_string(n) + ") coincide: distance below 1e-9 m");
    return dist;
}

// Closed-form expansion of element_distance,
//   d_mn = sqrt(d^2 + R^2 + r^2 + 2E_m + 2D_mn + 2F_n),
// where E_m couples center offset and receive ring, D_mn couples the two
// rings, and F_n couples center offset and transmit ring. Cross-check only.
template <typename Real>
inline Real element_distance_expanded(const LinkGeometry<Real> &g, int m, int n)
{
    detail::check_index(m, g.n_rx, "receive element");
    detail::check_index(n, g.n_tx, "transmit element");
    const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
    const Real ps = two_pi * Real(m - 1) / Real(g.n_rx) + g.alpha_rx;
    const Real ph = two_pi * Real(n - 1) / Real(g.n_tx) + g.alpha_tx;
    const Real cm = std::cos(ps), sm = std::sin(ps);
    const Real cn = std::cos(ph), sn = std::sin(ph);
    const Real cx = std::cos(g.tilt_x), sx = std::sin(g.tilt_x);
    const Real cy = std::cos(g.tilt_y), sy = std::sin(g.tilt_y);
    const Real sp = std::sin(g.phi), cp = std::cos(g.phi);
    const Real ct = std::cos(g.theta), st = std::sin(g.theta);
    const Real d = g.distance, R = g.radius_rx, r = g.radius_tx;
    const Real e = d * R * (sp * ct * (cm * cy + sm * sx * sy) + sp * st * sm * cx +
                            cp * (cm * sy - sm * sx * cy));
    const Real dd = -R * r * (cm * cn * cy + sm * cn * sx * sy + sm * sn * cx);
    const Real f = -d * r * sp * std::cos(ph - g.theta);
    return std::sqrt(d * d + R * R + r * r + Real(2) * e + Real(2) * dd + Real(2) * f);
}

} // namespace oam

#endif // OAM_GEOMETRY_HPP
