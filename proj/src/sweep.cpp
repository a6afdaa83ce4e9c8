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

#include "sweep.hpp"

#include "oam/bepre.hpp"
#include "oam/channel.hpp"
#include "oam/constellation.hpp"
#include "oam/detection.hpp"

namespace oamcli
{

namespace
{

// Power allocation for one grid point. Under waterfill, gains beyond the
// numerical rank are zeroed so dead modes are excluded outright; the same
// allocation is then used for both the with- and without-pair rates.
oam::PowerAllocation<double> point_allocation(const SweepSpec &point,
                                              const oam::BePreTransforms<double> &t,
                                              const oam::NoiseModel<double> &noise,
                                              oam::GainConvention convention)
{
    const Eigen::Index n = t.lambda.size();
    const double total = double(n); // unit average power per mode
    if (point.power_policy == "equal")
        return oam::equal_power<double>(n, total);

    oam::VectorXr<double> gains = oam::VectorXr<double>::Zero(n);
    for (Eigen::Index i = 0; i < t.numerical_rank; ++i)
        gains(i) = convention == oam::GainConvention::squared ? t.lambda(i) * t.lambda(i)
                                                              : t.lambda(i);
    const oam::MatrixXc<double> w = oam::idft_matrix<double>(n);
    const oam::VectorXr<double> sigma2 =
        oam::effective_noise<double>(w.adjoint() * t.predetect, noise);
    return oam::water_filling<double>(gains, sigma2, total).allocation;
}

} // namespace

std::vector<SweepSpec> expand_grid(const SweepSpec &spec)
{
    std::vector<SweepSpec> points;
    const std::vector<double> outer = grid_values(spec.sweep);
    const std::vector<double> inner = grid_values(spec.sweep2);
    if (outer.empty())
    {
        points.push_back(spec);
        return points;
    }
    points.reserve(outer.size() * std::max<std::size_t>(1, inner.size()));
    for (const double a : outer)
    {
        SweepSpec p = spec;
        apply_axis_value(p, spec.sweep.param, a);
        if (inner.empty())
        {
            points.push_back(p);
            continue;
        }
        for (const double b : inner)
        {
            SweepSpec q = p;
            apply_axis_value(q, spec.sweep2.param, b);
            points.push_back(q);
        }
    }
    return points;
}

std::vector<CapacityRow> run_capacity_sweep(const SweepSpec &spec,
                                            oam::GainConvention convention)
{
    std::vector<CapacityRow> rows;
    for (const SweepSpec &point : expand_grid(spec))
    {
        CapacityRow row;
        row.geometry = point.geometry;
        row.snr_db = point.snr_db;
        row.power_policy = point.power_policy;
        try
        {
            const oam::ChannelMatrix<double> h = oam::channel_matrix(point.geometry);
            const oam::BePreTransforms<double> t = oam::bepre_transforms(h.entries);
            const oam::NoiseModel<double> noise = oam::noise_from_snr(h.entries, point.snr_db);
            const oam::PowerAllocation<double> alloc =
                point_allocation(point, t, noise, convention);
            row.se_with_bepre = oam::se_with_bepre(t, alloc, noise, convention);
            row.se_without_bepre = oam::se_without_bepre(h.entries, alloc, noise);
            row.lambda.assign(t.lambda.data(), t.lambda.data() + t.lambda.size());
            row.equivalence_residual = oam::equivalence_residual(h.entries, t);
        }
        catch (const std::exception &e)
        {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SerRow> run_ser_sweep(const SweepSpec &spec)
{
    std::vector<SerRow> rows;
    const oam::Constellation<double> constellation =
        oam::constellation_by_name<double>(spec.constellation);
    for (const SweepSpec &point : expand_grid(spec))
    {
        SerRow row;
        row.snr_db = point.snr_db;
        row.trials = point.trials;
        row.seed = point.seed;
        row.geometry = point.geometry;
        try
        {
            const oam::ChannelMatrix<double> h = oam::channel_matrix(point.geometry);
            const oam::SerReport<double> report = oam::monte_carlo_ser(
                h.entries, constellation, point.snr_db, point.trials, point.seed);
            row.ser_with = report.ser_with;
            row.ser_without = report.ser_without;
        }
        catch (const std::exception &e)
        {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ComplexityRow> run_complexity(const SweepSpec &spec)
{
    const std::uint64_t xi = oam::constellation_by_name<double>(spec.constellation).size();
    const std::uint64_t n_max = static_cast<std::uint64_t>(spec.geometry.n_tx);
    std::vector<ComplexityRow> rows;
    for (std::uint64_t n = 2; n <= std::max<std::uint64_t>(2, n_max); ++n)
    {
        ComplexityRow row;
        row.n = n;
        row.xi = xi;
        row.joint = oam::count_joint_ml(n, xi);
        row.permode = oam::count_permode_ml(n, xi);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace oamcli
