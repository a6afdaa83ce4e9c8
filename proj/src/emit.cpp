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

#include "emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "oam/transform.hpp"

namespace oamcli
{

namespace
{

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open output file for writing: " + path);
    return out;
}

void finish(std::ofstream &out, const std::string &path)
{
    out.flush();
    if (!out)
        throw io_error("error while writing output file: " + path);
}

// Numeric cell: empty when the row failed and the value was never set.
std::string cell(double v, const std::string &error)
{
    if (!error.empty() && std::isnan(v))
        return {};
    return format_double(v);
}

ordered_json matrix_json(const oam::MatrixXc<double> &m)
{
    ordered_json j;
    j["m"] = m.rows();
    j["n"] = m.cols();
    auto &re = j["entries_re"] = ordered_json::array();
    auto &im = j["entries_im"] = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
        {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    return j;
}

void geometry_header(std::ostream &out)
{
    out << "n_elements,wavelength_m,radius_tx_m,radius_rx_m,distance_m,theta_rad,phi_rad,"
           "tilt_x_rad,tilt_y_rad,alpha_tx_rad,alpha_rx_rad";
}

void geometry_cells(std::ostream &out, const oam::LinkGeometry<double> &g)
{
    out << g.n_tx << ',' << format_double(g.wavelength) << ',' << format_double(g.radius_tx)
        << ',' << format_double(g.radius_rx) << ',' << format_double(g.distance) << ','
        << format_double(g.theta) << ',' << format_double(g.phi) << ','
        << format_double(g.tilt_x) << ',' << format_double(g.tilt_y) << ','
        << format_double(g.alpha_tx) << ',' << format_double(g.alpha_rx);
}

} // namespace

std::string format_double(double v)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        return "nan"; // unreachable for finite doubles with this buffer size
    return std::string(buf, ptr);
}

std::string csv_escape(const std::string &field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (const char c : field)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_channel_csv(const std::string &path, const oam::ChannelMatrix<double> &h)
{
    std::ofstream out = open_out(path);
    out << "m,n,re,im,abs,phase_rad\n";
    const auto &e = h.entries;
    for (Eigen::Index r = 0; r < e.rows(); ++r)
        for (Eigen::Index c = 0; c < e.cols(); ++c)
        {
            const std::complex<double> z = e(r, c);
            out << (r + 1) << ',' << (c + 1) << ',' << format_double(z.real()) << ','
                << format_double(z.imag()) << ',' << format_double(std::abs(z)) << ','
                << format_double(std::arg(z)) << '\n';
        }
    finish(out, path);
}

void write_channel_json(const std::string &path, const oam::ChannelMatrix<double> &h)
{
    std::ofstream out = open_out(path);
    out << matrix_json(h.entries).dump(2) << '\n';
    finish(out, path);
}

void write_bepre_json(const std::string &path, const oam::MatrixXc<double> &h,
                      const oam::BePreTransforms<double> &t)
{
    ordered_json j;
    j["channel"] = matrix_json(h);
    j["beamform"] = matrix_json(t.beamform);
    j["predetect"] = matrix_json(t.predetect);
    j["circulant"] = matrix_json(t.circulant);
    ordered_json report;
    report["equivalence_residual"] = oam::equivalence_residual(h, t);
    report["unitarity_residuals"] = {{"beamform", oam::unitarity_residual(t.beamform)},
                                     {"predetect", oam::unitarity_residual(t.predetect)}};
    report["circulant_residual"] = oam::circulant_residual(t.circulant);
    report["lambda"] = std::vector<double>(t.lambda.data(), t.lambda.data() + t.lambda.size());
    report["numerical_rank"] = t.numerical_rank;
    j["report"] = report;

    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    finish(out, path);
}

void write_capacity_csv(const std::string &path, const std::vector<CapacityRow> &rows)
{
    std::ofstream out = open_out(path);
    geometry_header(out);
    out << ",snr_db,power_policy,se_with_bepre,se_without_bepre,lambda,"
           "equivalence_residual,error\n";
    for (const CapacityRow &row : rows)
    {
        geometry_cells(out, row.geometry);
        std::string lambda;
        for (std::size_t i = 0; i < row.lambda.size(); ++i)
        {
            if (i > 0)
                lambda += ';';
            lambda += format_double(row.lambda[i]);
        }
        out << ',' << format_double(row.snr_db) << ',' << row.power_policy << ','
            << cell(row.se_with_bepre, row.error) << ','
            << cell(row.se_without_bepre, row.error) << ',' << lambda << ','
            << cell(row.equivalence_residual, row.error) << ',' << csv_escape(row.error)
            << '\n';
    }
    finish(out, path);
}

void write_ser_csv(const std::string &path, const std::vector<SerRow> &rows)
{
    std::ofstream out = open_out(path);
    out << "snr_db,trials,ser_with,ser_without,seed,";
    geometry_header(out);
    out << ",error\n";
    for (const SerRow &row : rows)
    {
        out << format_double(row.snr_db) << ',' << row.trials << ','
            << cell(row.ser_with, row.error) << ',' << cell(row.ser_without, row.error) << ','
            << row.seed << ',';
        geometry_cells(out, row.geometry);
        out << ',' << csv_escape(row.error) << '\n';
    }
    finish(out, path);
}

void write_complexity_csv(const std::string &path, const std::vector<ComplexityRow> &rows)
{
    std::ofstream out = open_out(path);
    out << "N,xi,adds_joint,mults_joint,adds_permode,mults_permode,model_version\n";
    for (const ComplexityRow &row : rows)
    {
        out << row.n << ',' << row.xi << ',' << row.joint.adds << ',' << row.joint.multiplies
            << ',' << row.permode.adds << ',' << row.permode.multiplies << ','
            << row.joint.cost_model << '\n';
    }
    finish(out, path);
}

void write_metadata(const std::string &out_path, const SweepSpec &spec,
                    const std::string &subcommand, const std::string &gamma_convention)
{
    const auto axis_json = [](const SweepAxis &axis) -> ordered_json {
        if (!axis.present)
            return nullptr;
        ordered_json j;
        j["param"] = axis.param;
        j["start"] = axis.start;
        j["stop"] = axis.stop;
        j["count"] = axis.count;
        return j;
    };

    ordered_json config;
    config["n_elements"] = spec.geometry.n_tx;
    config["wavelength_m"] = spec.geometry.wavelength;
    config["radius_tx_m"] = spec.geometry.radius_tx;
    config["radius_rx_m"] = spec.geometry.radius_rx;
    config["distance_m"] = spec.geometry.distance;
    config["theta_rad"] = spec.geometry.theta;
    config["phi_rad"] = spec.geometry.phi;
    config["tilt_x_rad"] = spec.geometry.tilt_x;
    config["tilt_y_rad"] = spec.geometry.tilt_y;
    config["alpha_tx_rad"] = spec.geometry.alpha_tx;
    config["alpha_rx_rad"] = spec.geometry.alpha_rx;
    config["beta_re"] = spec.geometry.beta.real();
    config["beta_im"] = spec.geometry.beta.imag();
    config["snr_db"] = spec.snr_db;
    config["constellation"] = spec.constellation;
    config["power_policy"] = spec.power_policy;
    config["trials"] = spec.trials;
    config["seed"] = spec.seed;
    config["sweep"] = axis_json(spec.sweep);
    config["sweep2"] = axis_json(spec.sweep2);

    ordered_json conventions;
    conventions["snr_reference"] =
        "receiver: per-element noise variance = (|H|_F^2 / N) * 10^(-snr_db/10), "
        "unit average symbol energy per mode, total transmit power = N";
    conventions["gain_sort"] = "descending; mode column 1 carries the largest gain";
    conventions["gamma_in_rate"] = gamma_convention;
    conventions["mode_of_column_rule"] =
        "0-based DFT column k carries OAM mode l = k for k <= N/2, else k - N";
    const std::vector<int> modes = oam::mode_index_map(spec.geometry.n_tx);
    conventions["mode_of_column"] = modes;
    conventions["circulant_shift"] = "right";
    conventions["idft_sign"] = "+";
    conventions["cost_model"] = "cm1";
    conventions["rng"] = "splitmix64, one derived stream per trial";

    ordered_json j;
    j["tool"] = tool_name;
    j["version"] = tool_version;
    j["subcommand"] = subcommand;
    j["config"] = config;
    j["conventions"] = conventions;

    const std::string path = out_path + ".meta.json";
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    finish(out, path);
}

} // namespace oamcli
