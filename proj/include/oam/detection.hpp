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
// Mode-domain transmit/receive chain and maximum-likelihood detection.
//
// Transmit: x = beamform * W * s, one constellation symbol per mode.
// Receive:  y = H x + z, then y_mode = W^* * predetect * y. With the
// transform pair active the cascade is diag(lambda), so each mode is
// detected on its own; without it the receiver still assumes a diagonal
// cascade and the off-diagonal leakage of W^* H W goes undetected, which
// is exactly the penalty the pair removes.
//
// SNR is receiver-referenced: for snr_db and unit-energy symbols on all N
// modes, the per-antenna noise variance is (|H|_F^2 / N) * 10^(-snr_db/10),
// i.e. snr_db is the ratio of mean received signal power to noise power.

#ifndef OAM_DETECTION_HPP
#define OAM_DETECTION_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "oam/bepre.hpp"
#include "oam/constellation.hpp"
#include "oam/rng.hpp"
#include "oam/transform.hpp"

namespace oam
{

// Per-receive-antenna noise variances, E|z_i|^2 = variances(i).
template <typename Real>
struct NoiseModel
{
    VectorXr<Real> variances;

    void validate() const
    {
        if (variances.size() < 1)
            throw std::invalid_argument("NoiseModel: empty variance vector");
        for (Eigen::Index i = 0; i < variances.size(); ++i)
            if (!(variances(i) > Real(0)))
                throw std::invalid_argument("NoiseModel: variances must be positive");
    }
};

template <typename Real>
inline NoiseModel<Real> noise_from_snr(const MatrixXc<Real> &h, Real snr_db)
{
    const Eigen::Index n = h.rows();
    const Real mean_rx_power = h.squaredNorm() / Real(n);
    const Real sigma2 = mean_rx_power * std::pow(Real(10), -snr_db / Real(10));
    if (!(sigma2 > Real(0)))
        throw std::invalid_argument("noise_from_snr: channel has zero energy");
    return NoiseModel<Real>{VectorXr<Real>::Constant(n, sigma2)};
}

// Antenna-domain transmit vector for mode-domain symbols s.
template <typename Real>
inline VectorXc<Real> transmit(const VectorXc<Real> &s, const MatrixXc<Real> &beamform,
                               const MatrixXc<Real> &w)
{
    return beamform * (w * s);
}

// Adds one circularly symmetric Gaussian draw per antenna, in place.
// Consumes exactly one normal_pair() per entry, in index order.
template <typename Real>
inline void awgn(VectorXc<Real> &y, const NoiseModel<Real> &noise, SplitMix64 &rng)
{
    if (y.size() != noise.variances.size())
        throw std::invalid_argument("awgn: size mismatch between signal and noise model");
    for (Eigen::Index i = 0; i < y.size(); ++i)
        y(i) += std::complex<Real>(rng.complex_normal(double(noise.variances(i))));
}

// Receive-side return to the mode domain.
template <typename Real>
inline VectorXc<Real> decompose(const VectorXc<Real> &y, const MatrixXc<Real> &predetect,
                                const MatrixXc<Real> &w)
{
    return w.adjoint() * (predetect * y);
}

// Per-mode ML: for each mode i, the constellation index minimizing
// |y_mode(i) - gain(i) * c|^2. Ties resolve to the lowest index so the
// detector is a pure function of its inputs.
template <typename Real>
inline std::vector<std::size_t> ml_per_mode(const VectorXc<Real> &y_mode,
                                            const VectorXc<Real> &gains,
                                            const Constellation<Real> &constellation)
{
    if (y_mode.size() != gains.size())
        throw std::invalid_argument("ml_per_mode: size mismatch");
    if (constellation.size() < 2)
        throw std::invalid_argument("ml_per_mode: constellation needs at least two points");
    std::vector<std::size_t> out(static_cast<std::size_t>(y_mode.size()));
    for (Eigen::Index i = 0; i < y_mode.size(); ++i)
    {
        Real best = std::numeric_limits<Real>::infinity();
        std::size_t arg = 0;
        for (std::size_t c = 0; c < constellation.size(); ++c)
        {
            const Real metric = std::norm(y_mode(i) - gains(i) * constellation.points[c]);
            if (metric < best)
            {
                best = metric;
                arg = c;
            }
        }
        out[static_cast<std::size_t>(i)] = arg;
    }
    return out;
}

// Exhaustive joint ML over all xi^N symbol vectors: argmin |y - G s|^2.
// Reference oracle for validating the per-mode detector on diagonal
// cascades; the search space is capped at 2^20 hypotheses.
template <typename Real>
inline std::vector<std::size_t> ml_joint_oracle(const VectorXc<Real> &y,
                                                const MatrixXc<Real> &effective,
                                                const Constellation<Real> &constellation)
{
    const Eigen::Index n = y.size();
    if (effective.rows() != n || effective.cols() != n)
        throw std::invalid_argument("ml_joint_oracle: effective matrix shape mismatch");
    const std::size_t xi = constellation.size();
    double hypotheses = 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        hypotheses *= double(xi);
    if (hypotheses > double(1u << 20))
        throw std::length_error("ml_joint_oracle: search space exceeds 2^20 hypotheses");

    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> best_idx = idx;
    Real best = std::numeric_limits<Real>::infinity();
    VectorXc<Real> s(n);
    while (true)
    {
        for (Eigen::Index i = 0; i < n; ++i)
            s(i) = constellation.points[idx[static_cast<std::size_t>(i)]];
        const Real metric = (y - effective * s).squaredNorm();
        if (metric < best)
        {
            best = metric;
            best_idx = idx;
        }
        // Odometer increment over the index vector.
        Eigen::Index pos = 0;
        while (pos < n)
        {
            if (++idx[static_cast<std::size_t>(pos)] < xi)
                break;
            idx[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return best_idx;
}

enum class DetectionMode
{
    with_bepre,
    without_bepre,
    both
};

// Monte Carlo symbol-error-rate outcome. ser = symbol_errors / (trials * N);
// a branch that was not simulated reports NaN and zero errors.
template <typename Real>
struct SerReport
{
    std::uint64_t trials = 0;
    std::uint64_t symbol_errors_with = 0;
    std::uint64_t symbol_errors_without = 0;
    Real ser_with = std::numeric_limits<Real>::quiet_NaN();
    Real ser_without = std::numeric_limits<Real>::quiet_NaN();
    Real snr_db = Real(0);
    std::uint64_t seed = 0;
};

// Simulates `trials` symbol vectors through the channel, with and/or
// without the transform pair. Each trial draws from its own derived
// stream (symbols first, then noise), so the result is independent of
// trial execution order and both branches see identical draws.
template <typename Real>
inline SerReport<Real> monte_carlo_ser(const MatrixXc<Real> &h,
                                       const Constellation<Real> &constellation, Real snr_db,
                                       std::uint64_t trials, std::uint64_t seed,
                                       DetectionMode mode = DetectionMode::both)
{
    if (h.rows() != h.cols())
        throw std::invalid_argument("monte_carlo_ser: channel matrix must be square");
    if (trials == 0)
        throw std::invalid_argument("monte_carlo_ser: trials must be positive");
    const Eigen::Index n = h.rows();
    const NoiseModel<Real> noise = noise_from_snr(h, snr_db);
    const MatrixXc<Real> w = idft_matrix<Real>(n);

    const bool run_with = mode != DetectionMode::without_bepre;
    const bool run_without = mode != DetectionMode::with_bepre;

    // Precomputed cascades: symbol vector to receive antennas, and receive
    // antennas back to the mode domain.
    MatrixXc<Real> tx_with, rx_with;
    VectorXc<Real> gains_with;
    if (run_with)
    {
        const BePreTransforms<Real> t = bepre_transforms(h);
        tx_with = h * t.beamform * w;
        rx_with = w.adjoint() * t.predetect;
        gains_with = t.lambda.template cast<std::complex<Real>>();
    }
    MatrixXc<Real> tx_without, rx_without;
    VectorXc<Real> gains_without;
    if (run_without)
    {
        tx_without = h * w;
        rx_without = w.adjoint();
        gains_without = (rx_without * tx_without).diagonal();
    }

    SerReport<Real> report;
    report.trials = trials;
    report.snr_db = snr_db;
    report.seed = seed;

    std::vector<std::size_t> sent(static_cast<std::size_t>(n));
    VectorXc<Real> s(n), z(n);
    for (std::uint64_t t = 0; t < trials; ++t)
    {
        SplitMix64 rng(derive_stream(seed, t));
        for (Eigen::Index i = 0; i < n; ++i)
        {
            sent[static_cast<std::size_t>(i)] = rng.bounded(constellation.size());
            s(i) = constellation.points[sent[static_cast<std::size_t>(i)]];
        }
        for (Eigen::Index i = 0; i < n; ++i)
            z(i) = std::complex<Real>(rng.complex_normal(double(noise.variances(i))));

        if (run_with)
        {
            const VectorXc<Real> y_mode = rx_with * (tx_with * s + z);
            const auto decided = ml_per_mode(y_mode, gains_with, constellation);
            for (Eigen::Index i = 0; i < n; ++i)
                report.symbol_errors_with += decided[static_cast<std::size_t>(i)] !=
                                             sent[static_cast<std::size_t>(i)];
        }
        if (run_without)
        {
            const VectorXc<Real> y_mode = rx_without * (tx_without * s + z);
            const auto decided = ml_per_mode(y_mode, gains_without, constellation);
            for (Eigen::Index i = 0; i < n; ++i)
                report.symbol_errors_without += decided[static_cast<std::size_t>(i)] !=
                                                sent[static_cast<std::size_t>(i)];
        }
    }

    const Real denom = Real(trials) * Real(n);
    if (run_with)
        report.ser_with = Real(report.symbol_errors_with) / denom;
    if (run_without)
        report.ser_without = Real(report.symbol_errors_without) / denom;
    return report;
}

} // namespace oam

#endif // OAM_DETECTION_HPP
