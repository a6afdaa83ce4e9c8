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
// Command line front end. Every subcommand reads one key=value config,
// writes one output file plus a <out>.meta.json sidecar, and is fully
// deterministic in (config, seed). Exit codes: 0 success, 1 configuration
// error, 2 numerical failure, 3 I/O error.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "oam/bepre.hpp"
#include "oam/channel.hpp"

#include "config.hpp"
#include "emit.hpp"
#include "sweep.hpp"

namespace
{

bool ends_with(const std::string &s, const std::string &suffix)
{
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void run_channel(const oamcli::SweepSpec &spec, const std::string &out)
{
    const oam::ChannelMatrix<double> h = oam::channel_matrix(spec.geometry);
    if (ends_with(out, ".json"))
        oamcli::write_channel_json(out, h);
    else
        oamcli::write_channel_csv(out, h);
    oamcli::write_metadata(out, spec, "channel", "squared");
}

void run_bepre(const oamcli::SweepSpec &spec, const std::string &out)
{
    const oam::ChannelMatrix<double> h = oam::channel_matrix(spec.geometry);
    const oam::BePreTransforms<double> t = oam::bepre_transforms(h.entries);
    oamcli::write_bepre_json(out, h.entries, t);
    oamcli::write_metadata(out, spec, "bepre", "squared");
}

void run_capacity(const oamcli::SweepSpec &spec, const std::string &out, bool linear_gain)
{
    const oam::GainConvention conv =
        linear_gain ? oam::GainConvention::linear : oam::GainConvention::squared;
    const std::vector<oamcli::CapacityRow> rows = oamcli::run_capacity_sweep(spec, conv);
    oamcli::write_capacity_csv(out, rows);
    oamcli::write_metadata(out, spec, "capacity-sweep", linear_gain ? "linear" : "squared");
}

void run_ser(const oamcli::SweepSpec &spec, const std::string &out)
{
    const std::vector<oamcli::SerRow> rows = oamcli::run_ser_sweep(spec);
    oamcli::write_ser_csv(out, rows);
    oamcli::write_metadata(out, spec, "ser", "squared");
}

void run_complexity(const oamcli::SweepSpec &spec, const std::string &out)
{
    const std::vector<oamcli::ComplexityRow> rows = oamcli::run_complexity(spec);
    oamcli::write_complexity_csv(out, rows);
    oamcli::write_metadata(out, spec, "complexity", "squared");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"oamlink: link-level simulator for OAM radio between two "
                 "misaligned uniform circular arrays"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    bool linear_gain = false;

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "key=value configuration file")->required();
        sub->add_option("--out", out_path, "output file path")->required();
    };

    CLI::App *channel =
        app.add_subcommand("channel", "dump the channel matrix (.json or CSV by extension)");
    add_common(channel);
    CLI::App *bepre = app.add_subcommand(
        "bepre", "dump the transform pair, circulant equivalent and residual report (JSON)");
    add_common(bepre);
    CLI::App *capacity = app.add_subcommand(
        "capacity-sweep", "spectrum-efficiency sweep over the configured grid (CSV)");
    add_common(capacity);
    capacity->add_flag("--linear-gain", linear_gain,
                       "use linear instead of squared per-mode gain in the with-pair rate");
    CLI::App *ser =
        app.add_subcommand("ser", "Monte Carlo symbol-error-rate sweep (CSV)");
    add_common(ser);
    CLI::App *complexity = app.add_subcommand(
        "complexity", "detector operation counts for N = 2..n_elements (CSV)");
    add_common(complexity);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems are configuration errors
    }

    try
    {
        const oamcli::SweepSpec spec = oamcli::load_config(config_path);
        if (channel->parsed())
            run_channel(spec, out_path);
        else if (bepre->parsed())
            run_bepre(spec, out_path);
        else if (capacity->parsed())
            run_capacity(spec, out_path, linear_gain);
        else if (ser->parsed())
            run_ser(spec, out_path);
        else if (complexity->parsed())
            run_complexity(spec, out_path);
        return 0;
    }
    catch (const oamcli::config_error &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    }
    catch (const oamcli::io_error &e)
    {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    }
}
