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
// File emission. Everything written here is a pure function of (config,
// seed): floating point uses the shortest round-trip decimal, rows follow
// deterministic grid order, and no timestamps or paths are embedded, so
// re-running a subcommand reproduces its outputs byte for byte.

#ifndef OAMCLI_EMIT_HPP
#define OAMCLI_EMIT_HPP

#include <string>
#include <vector>

#include "oam/bepre.hpp"
#include "oam/channel.hpp"

#include "config.hpp"
#include "sweep.hpp"

namespace oamcli
{

inline constexpr const char *tool_name = "oamlink";
inline constexpr const char *tool_version = "0.1.0";

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// RFC-4180 style quoting: wraps fields containing comma, quote or newline.
std::string csv_escape(const std::string &field);

// Per-entry table of a channel matrix: m,n,re,im,abs,phase_rad.
void write_channel_csv(const std::string &path, const oam::ChannelMatrix<double> &h);

// {"m":…,"n":…,"entries_re":[row-major],"entries_im":[row-major]}.
void write_channel_json(const std::string &path, const oam::ChannelMatrix<double> &h);

// Channel, beamform, predetect and circulant matrices in the JSON matrix
// format above, plus a verification report (residuals and per-mode gains).
void write_bepre_json(const std::string &path, const oam::MatrixXc<double> &h,
                      const oam::BePreTransforms<double> &t);

void write_capacity_csv(const std::string &path, const std::vector<CapacityRow> &rows);

void write_ser_csv(const std::string &path, const std::vector<SerRow> &rows);

void write_complexity_csv(const std::string &path, const std::vector<ComplexityRow> &rows);

// Sidecar <out>.meta.json describing the run: resolved config including
// defaults, tool version, and the numeric conventions needed to interpret
// the columns (SNR reference, gain ordering, mode map, cost model, RNG).
void write_metadata(const std::string &out_path, const SweepSpec &spec,
                    const std::string &subcommand, const std::string &gamma_convention);

} // namespace oamcli

#endif // OAMCLI_EMIT_HPP
