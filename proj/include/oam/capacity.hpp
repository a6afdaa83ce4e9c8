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
// Spectrum efficiency of the mode-multiplexed link, with and without the
// transform pair, plus water-filling power allocation.
//
// Without the pair the receiver sees W^* H W: the diagonal carries the
// wanted mode and every off-diagonal entry is inter-mode interference, so
// each term is log2(1 + SINR). With the pair the cascade is diagonal and
// the per-mode rate is interference-free, log2(1 + P * gain / noise),
// summed over the numerical rank.

#ifndef OAM_CAPACITY_HPP
#define OAM_CAPACITY_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "oam/bepre.hpp"
#include "oam/detection.hpp"
#include "oam/transform.hpp"

namespace oam
{

template <typename Real>
struct PowerAllocation
{
    VectorXr<Real> powers;

    Real total() const { return powers.sum(); }

    void validate() const
    {
        if (powers.size() < 1)
            throw std::invalid_argument("PowerAllocation: empty");
        for (Eigen::Index i = 0; i < powers.size(); ++i)
            if (!(powers(i) >= Real(0)) || !std::isfinite(powers(i)))
                throw std::invalid_argument("PowerAllocation: powers must be finite and >= 0");
    }
};

template <typename Real>
inline PowerAllocation<Real> equal_power(Eigen::Index n, Real total)
{
    if (n < 1 || !(total > Real(0)))
        throw std::invalid_argument("equal_power: need n >= 1 and total > 0");
    return PowerAllocation<Real>{VectorXr<Real>::Constant(n, total / Real(n))};
}

// Per-output noise variance after applying `chain` to independent
// per-antenna noise: out(i) = sum_j |chain(i,j)|^2 * variances(j).
template <typename Real>
inline VectorXr<Real> effective_noise(const MatrixXc<Real> &chain, const NoiseModel<Real> &noise)
{
    if (chain.cols() != noise.variances.size())
        throw std::invalid_argument("effective_noise: size mismatch");
    return chain.cwiseAbs2() * noise.variances;
}

// Rate of the plain mode-multiplexed link: per-mode SINR against the
// off-diagonal leakage of W^* H W.
template <typename Real>
inline Real se_without_bepre(const MatrixXc<Real> &h, const PowerAllocation<Real> &alloc,
                             const NoiseModel<Real> &noise)
{
    const Eigen::Index n = h.rows();
    if (h.cols() != n || alloc.powers.size() != n || noise.variances.size() != n)
        throw std::invalid_argument("se_without_bepre: size mismatch");
    alloc.validate();
    noise.validate();
    const MatrixXc<Real> w = idft_matrix<Real>(n);
    const MatrixXc<Real> cascade = w.adjoint() * h * w;
    const VectorXr<Real> sigma2 = effective_noise<Real>(w.adjoint(), noise);

    Real rate = Real(0);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const Real signal = alloc.powers(i) * std::norm(cascade(i, i));
        Real interference = Real(0);
        for (Eigen::Index k = 0; k < n; ++k)
            if (k != i)
                interference += alloc.powers(k) * std::norm(cascade(i, k));
        rate += std::log2(Real(1) + signal / (interference + sigma2(i)));
    }
    return rate;
}

// Gain factor entering the per-mode SINR when the pair is active: the
// squared convention puts lambda^2 over the noise variance (consistent
// with lambda being an amplitude gain); the linear convention uses
// lambda itself and is kept as a reporting variant.
enum class GainConvention
{
    squared,
    linear
};

template <typename Real>
inline Real se_with_bepre(const BePreTransforms<Real> &t, const PowerAllocation<Real> &alloc,
                          const NoiseModel<Real> &noise,
                          GainConvention convention = GainConvention::squared)
{
    const Eigen::Index n = t.lambda.size();
    if (alloc.powers.size() != n || noise.variances.size() != n)
        throw std::invalid_argument("se_with_bepre: size mismatch");
    alloc.validate();
    noise.validate();
    const MatrixXc<Real> w = idft_matrix<Real>(n);
    const MatrixXc<Real> chain = w.adjoint() * t.predetect;
    const VectorXr<Real> sigma2 = effective_noise<Real>(chain, noise);

    Real rate = Real(0);
    for (Eigen::Index i = 0; i < t.numerical_rank; ++i)
    {
        const Real gain = convention == GainConvention::squared ? t.lambda(i) * t.lambda(i)
                                                                : t.lambda(i);
        rate += std::log2(Real(1) + alloc.powers(i) * gain / sigma2(i));
    }
    return rate;
}

template <typename Real>
inline Real se_with_bepre(const MatrixXc<Real> &h, const PowerAllocation<Real> &alloc,
                          const NoiseModel<Real> &noise,
                          GainConvention convention = GainConvention::squared)
{
    return se_with_bepre(bepre_transforms(h), alloc, noise, convention);
}

template <typename Real>
struct WaterFillResult
{
    PowerAllocation<Real> allocation;
    Real level = Real(0); // common water level mu; powers(i) = mu - noise/gain on active modes
};

// Maximizes sum_i log2(1 + P_i * gains(i) / noise(i)) subject to
// sum P_i = total, P_i >= 0, via the exact active-set solve: with the k
// best floors active the level is mu_k = (total + sum of those floors)/k,
// and the optimum uses the largest k whose level clears its highest
// floor. gains(i) is the multiplier on P_i inside the SINR (pass squared
// amplitude gains for the squared convention); zero-gain modes are
// excluded and get no power.
template <typename Real>
inline WaterFillResult<Real> water_filling(const VectorXr<Real> &gains,
                                           const VectorXr<Real> &noise_variances, Real total)
{
    const Eigen::Index n = gains.size();
    if (noise_variances.size() != n || n < 1)
        throw std::invalid_argument("water_filling: size mismatch");
    if (!(total > Real(0)))
        throw std::invalid_argument("water_filling: total power must be positive");
    for (Eigen::Index i = 0; i < n; ++i)
    {
        if (!(gains(i) >= Real(0)))
            throw std::invalid_argument("water_filling: gains must be >= 0");
        if (!(noise_variances(i) > Real(0)))
            throw std::invalid_argument("water_filling: noise variances must be positive");
    }

    // Inverse channel quality; inf marks an excluded mode.
    VectorXr<Real> floor(n);
    std::vector<Real> sorted;
    sorted.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
    {
        if (gains(i) > Real(0))
        {
            floor(i) = noise_variances(i) / gains(i);
            sorted.push_back(floor(i));
        }
        else
        {
            floor(i) = std::numeric_limits<Real>::infinity();
        }
    }
    if (sorted.empty())
        throw std::invalid_argument("water_filling: all gains are zero");
    std::sort(sorted.begin(), sorted.end());

    // Largest active count k with mu_k above the k-th floor; k = 1 always
    // qualifies because total > 0.
    Real mu = total + sorted[0];
    Real prefix = Real(0);
    for (std::size_t k = 1; k <= sorted.size(); ++k)
        prefix += sorted[k - 1];
    for (std::size_t k = sorted.size(); k >= 1; --k)
    {
        const Real candidate = (total + prefix) / Real(k);
        if (candidate > sorted[k - 1])
        {
            mu = candidate;
            break;
        }
        prefix -= sorted[k - 1];
    }

    VectorXr<Real> p(n);
    for (Eigen::Index i = 0; i < n; ++i)
        p(i) = std::max(Real(0), mu - floor(i));
    return WaterFillResult<Real>{PowerAllocation<Real>{p}, mu};
}

} // namespace oam

#endif // OAM_CAPACITY_HPP
