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

#ifndef OAMCLI_CONFIG_HPP
#define OAMCLI_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oam/geometry.hpp"

namespace oamcli
{

// Invalid or missing configuration; maps to exit code 1.
struct config_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// File-system failure (unreadable config, unwritable output); exit code 3.
struct io_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// One swept parameter: a linear grid over [start, stop] with `count` points.
struct SweepAxis
{
    bool present = false;
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    long count = 0;
};

// Fully resolved experiment description: base geometry plus link, detection
// and sweep settings, with all defaults applied.
struct SweepSpec
{
    oam::LinkGeometry<double> geometry; // n_tx == n_rx == n_elements
    double snr_db = 20.0;
    std::string constellation = "qpsk";
    std::string power_policy = "equal"; // "equal" or "waterfill"
    std::uint64_t trials = 10000;
    std::uint64_t seed = 12345;
    SweepAxis sweep;  // outer (slower) axis
    SweepAxis sweep2; // inner (faster) axis, requires sweep
};

// Parses the flat key=value config dialect ('#' starts a comment, duplicate
// keys last-wins). Throws config_error naming the offending key and line.
SweepSpec parse_config(const std::string &text);

// Reads and parses a config file; io_error if the file cannot be read.
SweepSpec load_config(const std::string &path);

// The points of one axis: count == 1 collapses to {start}, otherwise a
// linear grid whose last point is exactly `stop`.
std::vector<double> grid_values(const SweepAxis &axis);

// Applies one swept value to a point copy of the experiment. `param` was
// validated at parse time; n_elements is rounded to the nearest integer.
void apply_axis_value(SweepSpec &point, const std::string &param, double value);

} // namespace oamcli

#endif // OAMCLI_CONFIG_HPP
