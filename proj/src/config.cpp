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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace oamcli
{

namespace
{

std::string trim(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string &key, int line, const std::string &why)
{
    throw config_error("config key '" + key + "' (line " + std::to_string(line) + "): " + why);
}

double parse_double(const std::string &key, int line, const std::string &value)
{
    double out = 0.0;
    const char *first = value.data();
    const char *last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        fail(key, line, "expected a number, got '" + value + "'");
    if (!std::isfinite(out))
        fail(key, line, "value must be finite");
    return out;
}

long parse_long(const std::string &key, int line, const std::string &value)
{
    long out = 0;
    const char *first = value.data();
    const char *last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        fail(key, line, "expected an integer, got '" + value + "'");
    return out;
}

std::uint64_t parse_u64(const std::string &key, int line, const std::string &value)
{
    std::uint64_t out = 0;
    const char *first = value.data();
    const char *last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        fail(key, line, "expected a nonnegative integer, got '" + value + "'");
    return out;
}

bool sweepable(const std::string &param)
{
    static const char *allowed[] = {"phi_rad",  "theta_rad",  "tilt_x_rad", "tilt_y_rad",
                                    "snr_db",   "distance_m", "n_elements"};
    return std::find_if(std::begin(allowed), std::end(allowed),
                        [&](const char *a) { return param == a; }) != std::end(allowed);
}

struct AxisDraft
{
    bool has_param = false, has_start = false, has_stop = false, has_count = false;
    int first_line = 0;
    SweepAxis axis;
};

void finish_axis(const char *prefix, AxisDraft &d)
{
    if (!d.has_param && !d.has_start && !d.has_stop && !d.has_count)
        return;
    const std::string p(prefix);
    if (!d.has_param)
        fail(p + ".param", d.first_line, "required when any " + p + ".* key is set");
    if (!d.has_start)
        fail(p + ".start", d.first_line, "required when any " + p + ".* key is set");
    if (!d.has_stop)
        fail(p + ".stop", d.first_line, "required when any " + p + ".* key is set");
    if (!d.has_count)
        fail(p + ".count", d.first_line, "required when any " + p + ".* key is set");
    d.axis.present = true;
}

} // namespace

SweepSpec parse_config(const std::string &text)
{
    SweepSpec spec;
    double beta_re = 1.0, beta_im = 0.0;
    bool has_n = false;
    AxisDraft sweep, sweep2;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string stripped = trim(raw);
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line) +
                               ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(line) + ": empty key");
        if (value.empty())
            fail(key, line, "empty value");

        if (key == "n_elements")
        {
            const long n = parse_long(key, line, value);
            if (n < 1 || n > 1024)
                fail(key, line, "must be in 1..1024");
            spec.geometry.n_tx = static_cast<int>(n);
            spec.geometry.n_rx = static_cast<int>(n);
            has_n = true;
        }
        else if (key == "wavelength_m")
        {
            const double v = parse_double(key, line, value);
            if (!(v > 0.0))
                fail(key, line, "must be > 0");
            spec.geometry.wavelength = v;
        }
        else if (key == "radius_tx_m")
        {
            const double v = parse_double(key, line, value);
            if (!(v > 0.0))
                fail(key, line, "must be > 0");
            spec.geometry.radius_tx = v;
        }
        else if (key == "radius_rx_m")
        {
            const double v = parse_double(key, line, value);
            if (!(v > 0.0))
                fail(key, line, "must be > 0");
            spec.geometry.radius_rx = v;
        }
        else if (key == "distance_m")
        {
            const double v = parse_double(key, line, value);
            if (!(v > 0.0))
                fail(key, line, "must be > 0");
            spec.geometry.distance = v;
        }
        else if (key == "theta_rad")
            spec.geometry.theta = parse_double(key, line, value);
        else if (key == "phi_rad")
            spec.geometry.phi = parse_double(key, line, value);
        else if (key == "tilt_x_rad")
            spec.geometry.tilt_x = parse_double(key, line, value);
        else if (key == "tilt_y_rad")
            spec.geometry.tilt_y = parse_double(key, line, value);
        else if (key == "alpha_tx_rad")
            spec.geometry.alpha_tx = parse_double(key, line, value);
        else if (key == "alpha_rx_rad")
            spec.geometry.alpha_rx = parse_double(key, line, value);
        else if (key == "beta_re")
            beta_re = parse_double(key, line, value);
        else if (key == "beta_im")
            beta_im = parse_double(key, line, value);
        else if (key == "snr_db")
            spec.snr_db = parse_double(key, line, value);
        else if (key == "constellation")
        {
            if (value != "qpsk" && value != "16qam")
                fail(key, line, "expected qpsk or 16qam, got '" + value + "'");
            spec.constellation = value;
        }
        else if (key == "power_policy")
        {
            if (value != "equal" && value != "waterfill")
                fail(key, line, "expected equal or waterfill, got '" + value + "'");
            spec.power_policy = value;
        }
        else if (key == "trials")
        {
            const std::uint64_t v = parse_u64(key, line, value);
            if (v < 1)
                fail(key, line, "must be >= 1");
            spec.trials = v;
        }
        else if (key == "seed")
            spec.seed = parse_u64(key, line, value);
        else if (key == "sweep.param" || key == "sweep2.param")
        {
            AxisDraft &d = key[5] == '2' ? sweep2 : sweep;
            if (!sweepable(value))
                fail(key, line, "'" + value + "' is not a sweepable parameter");
            d.axis.param = value;
            d.has_param = true;
            if (d.first_line == 0)
                d.first_line = line;
        }
        else if (key == "sweep.start" || key == "sweep2.start")
        {
            AxisDraft &d = key[5] == '2' ? sweep2 : sweep;
            d.axis.start = parse_double(key, line, value);
            d.has_start = true;
            if (d.first_line == 0)
                d.first_line = line;
        }
        else if (key == "sweep.stop" || key == "sweep2.stop")
        {
            AxisDraft &d = key[5] == '2' ? sweep2 : sweep;
            d.axis.stop = parse_double(key, line, value);
            d.has_stop = true;
            if (d.first_line == 0)
                d.first_line = line;
        }
        else if (key == "sweep.count" || key == "sweep2.count")
        {
            AxisDraft &d = key[5] == '2' ? sweep2 : sweep;
            const long c = parse_long(key, line, value);
            if (c < 1 || c > 1000000)
                fail(key, line, "must be in 1..1000000");
            d.axis.count = c;
            d.has_count = true;
            if (d.first_line == 0)
                d.first_line = line;
        }
        else
        {
            fail(key, line, "unknown key");
        }
    }

    if (!has_n)
        throw config_error("config: required key 'n_elements' is missing");
    spec.geometry.beta = {beta_re, beta_im};

    finish_axis("sweep", sweep);
    finish_axis("sweep2", sweep2);
    if (sweep2.axis.present && !sweep.axis.present)
        throw config_error("config: sweep2.* requires a primary sweep.* axis");
    if (sweep2.axis.present && sweep2.axis.param == sweep.axis.param)
        throw config_error("config: sweep and sweep2 must name different parameters");
    spec.sweep = sweep.axis;
    spec.sweep2 = sweep2.axis;

    oam::validate(spec.geometry);
    return spec;
}

SweepSpec load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("error while reading config file: " + path);
    return parse_config(buf.str());
}

std::vector<double> grid_values(const SweepAxis &axis)
{
    std::vector<double> out;
    if (!axis.present)
        return out;
    out.reserve(static_cast<std::size_t>(axis.count));
    if (axis.count == 1)
    {
        out.push_back(axis.start);
        return out;
    }
    const double step = (axis.stop - axis.start) / double(axis.count - 1);
    for (long i = 0; i < axis.count; ++i)
        out.push_back(i == axis.count - 1 ? axis.stop : axis.start + double(i) * step);
    return out;
}

void apply_axis_value(SweepSpec &point, const std::string &param, double value)
{
    if (param == "phi_rad")
        point.geometry.phi = value;
    else if (param == "theta_rad")
        point.geometry.theta = value;
    else if (param == "tilt_x_rad")
        point.geometry.tilt_x = value;
    else if (param == "tilt_y_rad")
        point.geometry.tilt_y = value;
    else if (param == "snr_db")
        point.snr_db = value;
    else if (param == "distance_m")
        point.geometry.distance = value;
    else if (param == "n_elements")
    {
        const long n = std::lround(value);
        if (n < 1 || n > 1024)
            throw config_error("swept n_elements value " + std::to_string(value) +
                               " is out of range 1..1024");
        point.geometry.n_tx = static_cast<int>(n);
        point.geometry.n_rx = static_cast<int>(n);
    }
    else
    {
        throw config_error("unsupported sweep parameter: " + param);
    }
}

} // namespace oamcli
