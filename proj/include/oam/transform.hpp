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
// Unitary IDFT/DFT matrices, the OAM mode <-> DFT column mapping, and
// circulant matrix helpers. Conventions used throughout the library:
//
//   W[n][k] = (1/sqrt(N)) exp(+j 2 pi n k / N)        (0-based n, k)
//
// so W is the unitary inverse DFT applied at the transmitter and W^* (the
// conjugate transpose) is the receiver-side DFT. A circulant matrix built
// from a first row by right-shifting each subsequent row is diagonalized
// by this W: W^* C W is diagonal with diagonal sqrt(N) * (W * first_row).

#ifndef OAM_TRANSFORM_HPP
#define OAM_TRANSFORM_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oam
{

template <typename Real>
using MatrixXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using VectorXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using VectorXr = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

namespace detail
{
template <typename Derived>
using real_of = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
} // namespace detail

// Unitary inverse DFT matrix of size n.
template <typename Real>
inline MatrixXc<Real> idft_matrix(Eigen::Index n)
{
    if (n < 1)
        throw std::invalid_argument("idft_matrix: size must be at least 1");
    const Real scale = Real(1) / std::sqrt(Real(n));
    MatrixXc<Real> w(n, n);
    for (Eigen::Index row = 0; row < n; ++row)
        for (Eigen::Index col = 0; col < n; ++col)
        {
            // Reduce the index product mod n before the trig call; keeps the
            // argument small so large n does not lose phase accuracy.
            const Eigen::Index t = (row * col) % n;
            const Real ang = Real(2) * std::numbers::pi_v<Real> * Real(t) / Real(n);
            w(row, col) = std::polar(scale, ang);
        }
    return w;
}

// OAM mode carried by each DFT column (0-based column index). Column k
// carries mode k for k <= floor(n/2) and mode k - n above that, so the
// mode range is floor((2-n)/2) .. floor(n/2) with mode 0 in column 0.
inline std::vector<int> mode_index_map(int n)
{
    if (n < 1)
        throw std::invalid_argument("mode_index_map: size must be at least 1");
    std::vector<int> modes(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        modes[static_cast<std::size_t>(k)] = (k <= n / 2) ? k : k - n;
    return modes;
}

// Inverse of mode_index_map: 0-based column carrying mode l (modes alias
// mod n, so any integer l is accepted).
inline int mode_column(int l, int n)
{
    if (n < 1)
        throw std::invalid_argument("mode_column: size must be at least 1");
    return ((l % n) + n) % n;
}

// Per-mode phase offsets picked up when the first transmit element sits at
// phase angle alpha instead of zero: a diagonal of exp(j alpha l_k) applied
// to the mode symbols makes the standard W match the rotated ring exactly.
template <typename Real>
inline VectorXc<Real> mode_phases(int n, Real alpha)
{
    const std::vector<int> modes = mode_index_map(n);
    VectorXc<Real> ph(n);
    for (int k = 0; k < n; ++k)
        ph(k) = std::polar(Real(1), alpha * Real(modes[static_cast<std::size_t>(k)]));
    return ph;
}

// Circulant matrix whose first row is `row`; row i is row i-1 cyclically
// right-shifted by one, i.e. out(i, k) = row((k - i) mod n). This shift
// direction is the one diagonalized by idft_matrix.
template <typename Derived>
inline MatrixXc<detail::real_of<Derived>> circulant_from_first_row(const Eigen::MatrixBase<Derived> &row_expr)
{
    using Real = detail::real_of<Derived>;
    const VectorXc<Real> row = row_expr.derived();
    const Eigen::Index n = row.size();
    if (n < 1)
        throw std::invalid_argument("circulant_from_first_row: empty first row");
    MatrixXc<Real> c(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k)
            c(i, k) = row((k - i + n) % n);
    return c;
}

// Diagonal of W^* C W together with the relative off-diagonal Frobenius
// energy left behind (0 for a circulant C, up to ~1 for a generic matrix).
template <typename Real>
struct ConjugatedDiagonal
{
    VectorXc<Real> diagonal;
    Real offdiag_relative_energy = Real(0);
};

template <typename Derived>
inline ConjugatedDiagonal<detail::real_of<Derived>> diag_of_conjugated(const Eigen::MatrixBase<Derived> &c_expr)
{
    using Real = detail::real_of<Derived>;
    const MatrixXc<Real> c = c_expr.derived();
    if (c.rows() != c.cols())
        throw std::invalid_argument("diag_of_conjugated: matrix must be square");
    const MatrixXc<Real> w = idft_matrix<Real>(c.rows());
    const MatrixXc<Real> d = w.adjoint() * c * w;
    ConjugatedDiagonal<Real> out;
    out.diagonal = d.diagonal();
    const Real total = d.norm();
    if (total > Real(0))
    {
        MatrixXc<Real> off = d;
        off.diagonal().setZero();
        out.offdiag_relative_energy = off.norm() / total;
    }
    return out;
}

} // namespace oam

#endif // OAM_TRANSFORM_HPP
