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

#ifndef OAMCLI_SWEEP_HPP
#define OAMCLI_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oam/capacity.hpp"
#include "oam/complexity.hpp"
#include "oam/geometry.hpp"

#include "config.hpp"

namespace oamcli
{

// One grid point of a spectrum-efficiency sweep. On a per-point failure
// `error` is non-empty and the numeric fields are left NaN / empty.
struct CapacityRow
{
    oam::LinkGeometry<double> geometry;
    double snr_db = 0.0;
    std::string power_policy;
    double se_with_bepre = std::numeric_limits<double>::quiet_NaN();
    double se_without_bepre = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> lambda;
    double equivalence_residual = std::numeric_limits<double>::quiet_NaN();
    std::string error;
};

struct SerRow
{
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    double ser_with = std::numeric_limits<double>::quiet_NaN();
    double ser_without = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t seed = 0;
    oam::LinkGeometry<double> geometry;
    std::string error;
};

struct ComplexityRow
{
    std::uint64_t n = 0;
    std::uint64_t xi = 0;
    oam::OpCount joint;
    oam::OpCount permode;
};

// Expands the (up to two) sweep axes of `spec` into point specs, outer axis
// slowest, in deterministic grid order. A spec with no axes is one point.
std::vector<SweepSpec> expand_grid(const SweepSpec &spec);

// One spectrum-efficiency row per grid point; per-point exceptions are
// captured in the row's error field and never abort the sweep.
std::vector<CapacityRow> run_capacity_sweep(const SweepSpec &spec,
                                            oam::GainConvention convention);

// One Monte Carlo SER row per grid point, both detector branches.
std::vector<SerRow> run_ser_sweep(const SweepSpec &spec);

// Operation counts for both detectors over N = 2 .. n_elements, with the
// hypothesis count per mode set by the configured constellation.
std::vector<ComplexityRow> run_complexity(const SweepSpec &spec);

} // namespace oamcli

#endif // OAMCLI_SWEEP_HPP
