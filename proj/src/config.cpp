// SPDX-License-Identifier: Apache-2.0
//
// cloudradio: rate analysis for cooperative (cloud) radio networks
// Copyright (C) 2026 The cloudradio authors
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

#include "cloudradio/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cloudradio
{
    namespace
    {
        const std::set<std::string> kRunSchemes{
            "conventional", "zfdpc", "uplink_sic", "mmse", "tic", "smf", "zfdpc_partial", "smf_partial",
            "clustered", "thp_fixed4", "thp_fixed16", "thp_fixed64", "thp_adaptive"};
        const std::set<std::string> kCrossvalidateSchemes{"tic", "smf2", "smf2_interference"};

        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string> split_list(const std::string &value)
        {
            std::vector<std::string> out;
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                item = trim(item);
                if (!item.empty())
                    out.push_back(item);
            }
            return out;
        }

        double parse_double(const std::string &field, const std::string &text)
        {
            double v = 0.0;
            const auto *end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, v);
            if (ec != std::errc{} || ptr != end || !std::isfinite(v))
                throw ConfigError(field, "expected a number, got '" + text + "'");
            return v;
        }

        std::uint64_t parse_unsigned(const std::string &field, const std::string &text)
        {
            std::uint64_t v = 0;
            const auto *end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, v);
            if (ec != std::errc{} || ptr != end)
                throw ConfigError(field, "expected a non-negative integer, got '" + text + "'");
            return v;
        }

        template <typename T, typename F>
        std::string join(const std::vector<T> &items, F &&fmt)
        {
            std::string out;
            for (std::size_t i = 0; i < items.size(); ++i)
            {
                if (i)
                    out += ',';
                out += fmt(items[i]);
            }
            return out;
        }

        Preset make(std::string name, std::string description, ExperimentConfig cfg,
                    std::vector<Expectation> expectations = {}, RunMode mode = RunMode::run)
        {
            cfg.preset = name;
            return {std::move(name), std::move(description), mode, std::move(cfg), std::move(expectations)};
        }

        std::vector<Preset> build_presets()
        {
            std::vector<Preset> p;

            ExperimentConfig base;

            {
                auto c = base;
                c.schemes = {"conventional", "zfdpc"};
                p.push_back(make("fig-conv-zf", "Conventional network vs ZF-DPC cloud, 10 dB", c,
                                 {{"conventional", CheckKind::mean, 1.63, 0.10, true},
                                  {"conventional", CheckKind::cell_edge, 0.51, 0.10},
                                  {"zfdpc", CheckKind::mean, 4.93, 0.10, true},
                                  {"zfdpc", CheckKind::cell_edge, 0.97, 0.15},
                                  {"zfdpc", CheckKind::gain_mean, 202.0, 25.0}}));
            }
            {
                auto c = base;
                c.schemes = {"conventional", "zfdpc"};
                c.snr_db = {-6.0, 0.0, 10.0, 20.0};
                p.push_back(make("fig-noise", "ZF-DPC rate statistics versus BS SNR", c,
                                 {{"zfdpc_snr10", CheckKind::mean, 4.93, 0.10, true},
                                  {"zfdpc_snr20", CheckKind::mean, 7.792, 0.10, true},
                                  {"zfdpc_snr20", CheckKind::cell_edge, 3.46, 0.15, true}}));
            }
            {
                auto c = base;
                c.schemes = {"zfdpc", "tic", "smf", "smf_partial"};
                c.csi_l = {2};
                p.push_back(make("fig-bounds", "ZF-DPC against the TIC and SMF bounds, 10 dB", c));
            }
            {
                auto c = base;
                c.schemes = {"conventional", "zfdpc", "uplink_sic", "mmse"};
                p.push_back(make("fig-uplink", "Uplink SIC and MMSE against downlink ZF-DPC, 10 dB", c,
                                 {{"mmse", CheckKind::mean, 3.73, 0.10, true},
                                  {"mmse", CheckKind::mean_ratio, 0.75, 0.07, false, "zfdpc"}}));
            }
            {
                auto c = base;
                c.schemes = {"conventional", "zfdpc", "zfdpc_partial"};
                c.csi_l = {2, 6};
                p.push_back(make("fig-partial", "ZF-DPC with CSI of the l strongest links, 10 dB", c,
                                 {{"zfdpc_partial_l6", CheckKind::mean_ratio, 0.81, 0.08, false, "zfdpc"},
                                  {"zfdpc_partial_l2", CheckKind::gain_mean, 48.0, 15.0}}));
            }
            {
                auto c = base;
                c.schemes = {"conventional", "zfdpc_partial", "smf_partial"};
                c.csi_l = {2};
                p.push_back(make("fig-pbound", "Partial-CSI ZF-DPC against the l = 2 SMF bound, 10 dB", c));
            }

            ExperimentConfig wide = base;
            wide.region_width_km = wide.region_height_km = 20.0;
            {
                auto c = wide;
                c.schemes = {"conventional", "clustered"};
                c.cluster_radius_km = {4.0, 8.0, 10.0, 12.0};
                p.push_back(make("fig-cluster", "Geographic clustering, full CSI inside the cluster, 10 dB", c,
                                 {{"clustered_r4", CheckKind::gain_mean, 92.0, 20.0},
                                  {"clustered_r10", CheckKind::gain_mean, 193.0, 25.0}}));
            }
            {
                auto c = wide;
                c.schemes = {"conventional", "clustered"};
                c.cluster_radius_km = {4.0};
                c.csi_l = {4, 6};
                p.push_back(make("fig-partial-4", "Partial CSI inside a 4 km cluster, 10 dB", c));
            }
            {
                auto c = wide;
                c.schemes = {"conventional", "clustered"};
                c.cluster_radius_km = {8.0};
                c.csi_l = {6, 10, 15};
                p.push_back(make("fig-partial-8", "Partial CSI inside an 8 km cluster, 10 dB", c));
            }
            std::vector<double> sweep;
            for (int s = 0; s <= 45; s += 5)
                sweep.push_back(s);
            {
                auto c = wide;
                c.schemes = {"conventional", "clustered"};
                c.cluster_radius_km = {8.0};
                c.csi_l = {6};
                c.snr_db = sweep;
                p.push_back(make("fig-8-final", "Spectral efficiency, 8 km cluster, CSI of 6 links", c,
                                 {{"clustered_r8_l6", CheckKind::plateau_mean, 5.01, 0.5},
                                  {"clustered_r8_l6", CheckKind::plateau_cell_edge, 1.28, 0.3},
                                  {"clustered_r8_l6", CheckKind::saturation_snr, 30.0, 5.0}}));
            }
            {
                auto c = wide;
                c.schemes = {"conventional", "clustered"};
                c.cluster_radius_km = {12.0};
                c.csi_l = {10};
                c.snr_db = sweep;
                p.push_back(make("fig-12-final", "Spectral efficiency, 12 km cluster, CSI of 10 links", c));
            }
            {
                auto c = base;
                c.schemes = {"thp_fixed4", "thp_fixed16", "thp_fixed64", "thp_adaptive"};
                p.push_back(make("fig-tx-pow", "THP transmit power, fixed and adaptive QAM, 10 dB", c));
            }
            {
                auto c = base;
                c.region_width_km = c.region_height_km = 40.0;
                c.drops = 100000;
                c.schemes = {"tic", "smf2", "smf2_interference"};
                p.push_back(make("xval", "Tagged-user Monte Carlo against the coverage integrals, 10 dB", c,
                                 {{"tic", CheckKind::sup_gap, 0.0, 0.02},
                                  {"smf2", CheckKind::sup_gap, 0.0, 0.02},
                                  {"smf2_interference", CheckKind::sup_gap, 0.0, 0.03}},
                                 RunMode::crossvalidate));
            }
            return p;
        }
    }

    std::string format_number(double v)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
    }

    ValidationResult validate(const ExperimentConfig &c, RunMode mode)
    {
        ValidationResult r;
        const auto err = [&](std::string f, std::string m)
        { r.errors.push_back({std::move(f), std::move(m)}); };
        const auto warn = [&](std::string f, std::string m)
        { r.warnings.push_back({std::move(f), std::move(m)}); };

        if (!(c.region_width_km > 0.0) || !(c.region_height_km > 0.0))
            err("region_km", "width and height must be positive");
        if (!(c.lambda_b > 0.0))
            err("lambda_b", "must be positive");
        if (c.lambda_u && !(*c.lambda_u > 0.0))
            err("lambda_u", "must be positive");
        else if (c.ue_intensity() < c.lambda_b)
            warn("lambda_u", "below lambda_b; many BSs will have no UE to serve");
        if (!(c.alpha > 2.0))
            err("alpha", "must exceed 2");
        if (!(c.mu > 0.0))
            err("mu", "must be positive");
        if (c.snr_db.empty())
            err("snr_db", "at least one value required");
        for (std::size_t i = 1; i < c.snr_db.size(); ++i)
            if (!(c.snr_db[i] > c.snr_db[i - 1]))
            {
                err("snr_db", "sweep must be strictly increasing");
                break;
            }
        if (c.drops < 1)
            err("drops", "must be at least 1");
        if (!(c.log_base > 1.0))
            err("log_base", "must exceed 1");
        if (c.workers < 1)
            err("workers", "must be at least 1");
        if (c.thp_vectors < 1)
            err("thp_vectors", "must be at least 1");
        for (std::size_t i = 1; i < c.csi_l.size(); ++i)
            if (!(c.csi_l[i] > c.csi_l[i - 1]))
            {
                err("csi_l", "list must be strictly increasing");
                break;
            }
        if (std::find(c.csi_l.begin(), c.csi_l.end(), std::size_t{0}) != c.csi_l.end())
            err("csi_l", "values must be at least 1");
        for (std::size_t i = 0; i < c.cluster_radius_km.size(); ++i)
        {
            if (!(c.cluster_radius_km[i] > 0.0))
                err("cluster_radius_km", "radii must be positive");
            if (i && !(c.cluster_radius_km[i] > c.cluster_radius_km[i - 1]))
                err("cluster_radius_km", "list must be strictly increasing");
        }

        if (c.schemes.empty())
            err("schemes", "at least one scheme required");
        const auto &known = mode == RunMode::run ? kRunSchemes : kCrossvalidateSchemes;
        bool thp = false;
        for (const auto &s : c.schemes)
        {
            if (!known.count(s))
            {
                err("schemes", mode == RunMode::crossvalidate
                                   ? "'" + s + "' has no analytic counterpart (use tic, smf2, smf2_interference)"
                                   : "unknown scheme '" + s + "'");
                continue;
            }
            if ((s == "zfdpc_partial" || s == "smf_partial") && c.csi_l.empty())
                err("csi_l", "scheme '" + s + "' needs at least one csi_l value");
            if (s == "clustered" && c.cluster_radius_km.empty())
                err("cluster_radius_km", "scheme 'clustered' needs at least one radius");
            thp = thp || s.rfind("thp_", 0) == 0;
        }
        if (thp && c.drops < 100)
            warn("drops", "THP power CDFs are meant for at least 100 drops");
        if (std::set<std::string>(c.schemes.begin(), c.schemes.end()).size() != c.schemes.size())
            err("schemes", "duplicate scheme");
        return r;
    }

    void apply_setting(ExperimentConfig &c, const std::string &key, const std::string &value)
    {
        const auto numbers = [&]
        {
            std::vector<double> out;
            for (const auto &item : split_list(value))
                out.push_back(parse_double(key, item));
            return out;
        };

        if (key == "preset")
            c.preset = value;
        else if (key == "region_km")
        {
            const auto x = value.find('x');
            if (x == std::string::npos)
                c.region_width_km = c.region_height_km = parse_double(key, trim(value));
            else
            {
                c.region_width_km = parse_double(key, trim(value.substr(0, x)));
                c.region_height_km = parse_double(key, trim(value.substr(x + 1)));
            }
        }
        else if (key == "lambda_b")
            c.lambda_b = parse_double(key, value);
        else if (key == "lambda_u")
            c.lambda_u = parse_double(key, value);
        else if (key == "alpha")
            c.alpha = parse_double(key, value);
        else if (key == "mu")
            c.mu = parse_double(key, value);
        else if (key == "snr_db")
            c.snr_db = numbers();
        else if (key == "drops")
            c.drops = parse_unsigned(key, value);
        else if (key == "schemes")
            c.schemes = split_list(value);
        else if (key == "csi_l")
        {
            c.csi_l.clear();
            for (const auto &item : split_list(value))
                c.csi_l.push_back(parse_unsigned(key, item));
        }
        else if (key == "cluster_radius_km")
            c.cluster_radius_km = numbers();
        else if (key == "csi_selection")
        {
            if (value == "magnitude")
                c.csi_selection = CsiSelection::magnitude;
            else if (value == "distance")
                c.csi_selection = CsiSelection::distance;
            else
                throw ConfigError(key, "expected 'magnitude' or 'distance'");
        }
        else if (key == "thp_vectors")
            c.thp_vectors = parse_unsigned(key, value);
        else if (key == "log_base")
            c.log_base = value == "e" ? std::exp(1.0) : parse_double(key, value);
        else if (key == "seed")
            c.seed = parse_unsigned(key, value);
        else if (key == "output_dir")
            c.output_dir = value;
        else if (key == "workers")
            c.workers = parse_unsigned(key, value);
        else
            throw ConfigError(key, "unknown configuration key");
    }

    ExperimentConfig parse_config(const std::string &text, ExperimentConfig base)
    {
        std::stringstream ss(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(ss, line))
        {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
            apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        return base;
    }

    ExperimentConfig load_config(const std::string &path, ExperimentConfig base)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config", "cannot open '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str(), std::move(base));
    }

    std::string to_kv(const ExperimentConfig &c)
    {
        std::ostringstream os;
        os << "preset = " << c.preset << '\n'
           << "region_km = " << format_number(c.region_width_km) << 'x' << format_number(c.region_height_km) << '\n'
           << "lambda_b = " << format_number(c.lambda_b) << '\n'
           << "lambda_u = " << format_number(c.ue_intensity()) << '\n'
           << "alpha = " << format_number(c.alpha) << '\n'
           << "mu = " << format_number(c.mu) << '\n'
           << "snr_db = " << join(c.snr_db, format_number) << '\n'
           << "drops = " << c.drops << '\n'
           << "schemes = " << join(c.schemes, [](const std::string &s)
                                   { return s; })
           << '\n'
           << "csi_l = " << join(c.csi_l, [](std::size_t v)
                                 { return std::to_string(v); })
           << '\n'
           << "cluster_radius_km = " << join(c.cluster_radius_km, format_number) << '\n'
           << "csi_selection = " << (c.csi_selection == CsiSelection::magnitude ? "magnitude" : "distance") << '\n'
           << "thp_vectors = " << c.thp_vectors << '\n'
           << "log_base = " << format_number(c.log_base) << '\n'
           << "seed = " << c.seed << '\n'
           << "output_dir = " << c.output_dir << '\n'
           << "workers = " << c.workers << '\n';
        return os.str();
    }

    const std::vector<Preset> &presets()
    {
        static const std::vector<Preset> all = build_presets();
        return all;
    }

    const Preset *find_preset(const std::string &name)
    {
        for (const auto &p : presets())
            if (p.name == name)
                return &p;
        return nullptr;
    }
}
