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
// Joint beamforming / pre-detection construction. Given a square channel H
// with SVD H = L diag(g) R^*, the circulant equivalent is H^c = W diag(g) W^*
// and the unitary pair
//
//   beamform  = R W^*        (applied at the transmitter)
//   predetect = W L^*        (applied at the receiver)
//
// satisfies predetect * H * beamform = H^c algebraically, so the cascade
// W^* predetect H beamform W is diagonal with H's singular values and the
// receiver can split the modes without inter-mode interference.

#ifndef OAM_BEPRE_HPP
#define OAM_BEPRE_HPP

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "oam/transform.hpp"

namespace oam
{

// SVD of a square complex matrix, H = left * diag(singular_values) * right^*,
// singular values sorted descending.
template <typename Real>
struct SvdFactors
{
    MatrixXc<Real> left;
    VectorXr<Real> singular_values;
    MatrixXc<Real> right;
};

template <typename Derived>
inline SvdFactors<detail::real_of<Derived>> svd(const Eigen::MatrixBase<Derived> &h_expr)
{
    using Real = detail::real_of<Derived>;
    const MatrixXc<Real> h = h_expr.derived();
    if (h.rows() != h.cols())
        throw std::invalid_argument("svd: matrix must be square");
    if (!h.allFinite())
        throw std::invalid_argument("svd: matrix has non-finite entries");
    Eigen::JacobiSVD<MatrixXc<Real>> dec(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return SvdFactors<Real>{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

// Circulant matrix with the given spectrum on the DFT basis:
// W diag(values) W^*. Its SVD is (W, diag(values), W), which is what makes
// the closed-form transform pair above possible.
template <typename Real>
inline MatrixXc<Real> build_circulant(const VectorXr<Real> &singular_values)
{
    const Eigen::Index n = singular_values.size();
    if (n < 1)
        throw std::invalid_argument("build_circulant: empty input");
    for (Eigen::Index i = 0; i < n; ++i)
        if (singular_values(i) < Real(0))
            throw std::invalid_argument("build_circulant: negative singular value");
    const MatrixXc<Real> w = idft_matrix<Real>(n);
    return w * singular_values.template cast<std::complex<Real>>().asDiagonal() * w.adjoint();
}

template <typename Real>
struct BePreTransforms
{
    MatrixXc<Real> beamform;  // unitary, applied after the transmit IDFT
    MatrixXc<Real> predetect; // unitary, applied before the receive DFT
    MatrixXc<Real> circulant; // predetect * H * beamform
    VectorXr<Real> lambda;    // effective per-mode gains, descending
    Eigen::Index numerical_rank = 0;
};

template <typename Derived>
inline BePreTransforms<detail::real_of<Derived>> bepre_transforms(const Eigen::MatrixBase<Derived> &h_expr)
{
    using Real = detail::real_of<Derived>;
    const MatrixXc<Real> h = h_expr.derived();
    if (h.rows() != h.cols())
        throw std::invalid_argument("bepre_transforms: requires equal transmit and receive "
                                    "element counts (square channel matrix)");
    const SvdFactors<Real> f = svd(h);
    const Eigen::Index n = h.rows();
    const MatrixXc<Real> w = idft_matrix<Real>(n);

    BePreTransforms<Real> t;
    t.circulant = build_circulant(f.singular_values);
    t.beamform = f.right * w.adjoint();
    t.predetect = w * f.left.adjoint();

    // Effective gains read back off the diagonalized circulant; identical to
    // the singular values up to roundoff, clamped to stay nonnegative.
    const ConjugatedDiagonal<Real> diag = diag_of_conjugated(t.circulant);
    t.lambda = diag.diagonal.real().cwiseMax(Real(0));

    const Real tol = Real(n) * std::numeric_limits<Real>::epsilon() *
                     (f.singular_values.size() > 0 ? f.singular_values(0) : Real(0));
    t.numerical_rank = (f.singular_values.array() > tol).count();
    return t;
}

// Relative Frobenius mismatch between predetect * H * beamform and the
// stored circulant; ~1e-15 for double precision inputs of sane size.
template <typename Real>
inline Real equivalence_residual(const MatrixXc<Real> &h, const BePreTransforms<Real> &t)
{
    return (t.predetect * h * t.beamform - t.circulant).norm() / t.circulant.norm();
}

// Frobenius distance of X^* X from the identity.
template <typename Real>
inline Real unitarity_residual(const MatrixXc<Real> &x)
{
    return (x.adjoint() * x - MatrixXc<Real>::Identity(x.cols(), x.cols())).norm();
}

// Worst entrywise deviation of C from the circulant generated by its first
// row, relative to the largest first-row magnitude.
template <typename Real>
inline Real circulant_residual(const MatrixXc<Real> &c)
{
    const Eigen::Index n = c.rows();
    if (n != c.cols())
        throw std::invalid_argument("circulant_residual: matrix must be square");
    const Real scale = c.row(0).cwiseAbs().maxCoeff();
    if (scale == Real(0))
        return Real(0);
    Real worst = Real(0);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k)
            worst = std::max(worst, std::abs(c(i, k) - c(0, (k - i + n) % n)));
    return worst / scale;
}

} // namespace oam

#endif // OAM_BEPRE_HPP
