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

// cloudradio command-line driver.

#include "cloudradio/config.hpp"
#include "cloudradio/errors.hpp"
#include "cloudradio/harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>

namespace
{
    constexpr int kOk = 0;
    constexpr int kConfigError = 2;
    constexpr int kNumericalError = 3;
    constexpr int kAssertFailed = 4;

    struct Options
    {
        std::string preset;
        std::string config_path;
        std::vector<std::pair<std::string, std::string>> overrides;
        bool assert_checks = false;
    };

    void add_common(CLI::App *cmd, Options &opt)
    {
        cmd->add_option("--preset", opt.preset, "Named preset (see list-presets)");
        cmd->add_option("--config", opt.config_path, "Key-value config file")->check(CLI::ExistingFile);
        struct Key
        {
            const char *flag;
            const char *key;
            const char *help;
        };
        static const Key keys[] = {
            {"--snr-db", "snr_db", "BS SNR in dB, comma-separated sweep allowed"},
            {"--drops", "drops", "Number of network drops"},
            {"--seed", "seed", "Master RNG seed"},
            {"--workers", "workers", "Worker threads"},
            {"--output-dir", "output_dir", "Output directory"},
            {"--schemes", "schemes", "Comma-separated scheme list"},
            {"--csi-l", "csi_l", "Known links per user, comma-separated"},
            {"--cluster-radius", "cluster_radius_km", "Cluster radii in km, comma-separated"},
            {"--lambda-b", "lambda_b", "BS intensity per km^2"},
            {"--lambda-u", "lambda_u", "UE intensity per km^2"},
            {"--region", "region_km", "Region size in km: W or WxH"},
            {"--log-base", "log_base", "Rate logarithm base: 2 or e"},
            {"--csi-selection", "csi_selection", "magnitude or distance"},
            {"--thp-vectors", "thp_vectors", "THP data vectors per drop"},
        };
        for (const auto &k : keys)
        {
            const std::string key = k.key;
            cmd->add_option_function<std::string>(
                k.flag, [&opt, key](const std::string &v) { opt.overrides.emplace_back(key, v); }, k.help);
        }
    }

    // Preset, then config file, then flags; later sources win.
    cloudradio::ExperimentConfig resolve(const Options &opt, std::vector<cloudradio::Expectation> *expectations)
    {
        using namespace cloudradio;
        ExperimentConfig cfg;
        if (const char *env = std::getenv("CLOUDRADIO_OUTPUT_DIR"); env && *env)
            cfg.output_dir = env;
        if (!opt.preset.empty())
        {
            const auto *p = find_preset(opt.preset);
            if (!p)
                throw ConfigError("preset", "unknown preset '" + opt.preset + "'");
            const auto out = cfg.output_dir;
            cfg = p->config;
            cfg.output_dir = out;
            if (expectations)
                *expectations = p->expectations;
        }
        if (!opt.config_path.empty())
            cfg = load_config(opt.config_path, cfg);
        for (const auto &[k, v] : opt.overrides)
            apply_setting(cfg, k, v);
        return cfg;
    }

    bool report_validation(const cloudradio::ValidationResult &v)
    {
        for (const auto &w : v.warnings)
            std::cerr << "warning: " << w.field << ": " << w.message << '\n';
        for (const auto &e : v.errors)
            std::cerr << "error: " << e.field << ": " << e.message << '\n';
        return v.ok();
    }

    int print_checks(const std::vector<cloudradio::CheckResult> &checks)
    {
        bool all = true;
        for (const auto &c : checks)
        {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.description << " = " << cloudradio::format_number(c.value)
                      << " (accepted [" << cloudradio::format_number(c.low) << ", "
                      << cloudradio::format_number(c.high) << "])\n";
            all = all && c.pass;
        }
        return all ? kOk : kAssertFailed;
    }

    void print_report(const cloudradio::ExperimentReport &r)
    {
        std::cout << std::left << std::setw(34) << "series" << std::setw(10) << "n" << std::setw(12) << "mean"
                  << std::setw(12) << "cell_edge" << "gain_mean_%\n";
        for (const auto &s : r.series)
        {
            if (!s.cdf)
            {
                std::cout << std::setw(34) << s.label << "no samples\n";
                continue;
            }
            std::cout << std::setw(34) << s.label << std::setw(10) << s.cdf->size() << std::setw(12)
                      << std::setprecision(4) << s.cdf->mean() << std::setw(12) << s.cdf->cell_edge();
            if (s.gain_mean)
                std::cout << std::setprecision(4) << *s.gain_mean;
            std::cout << '\n';
        }
        for (const auto &[radius, n] : r.mean_cluster_size)
            std::cout << "mean in-cluster BSs at " << radius << " km: " << n << '\n';
        for (const auto &s : r.saturation)
            std::cout << "saturation " << s.base_label << ": "
                      << (s.mean.saturated ? "from " + cloudradio::format_number(s.mean.snr_db) + " dB, plateau " +
                                                 cloudradio::format_number(s.mean.plateau)
                                           : std::string("not reached"))
                      << '\n';
        std::cout << "wall clock " << std::setprecision(3) << r.wall_clock_s << " s\n";
    }
}

int main(int argc, char **argv)
{
    using namespace cloudradio;
    CLI::App app{"cloudradio: Monte Carlo and analytic rate statistics for cooperative radio networks"};
    app.require_subcommand(1);

    Options run_opt, val_opt, xval_opt;
    auto *run_cmd = app.add_subcommand("run", "Run a Monte Carlo experiment");
    add_common(run_cmd, run_opt);
    run_cmd->add_flag("--assert", run_opt.assert_checks, "Check the preset's reference values (exit 4 on failure)");

    auto *val_cmd = app.add_subcommand("validate", "Validate a configuration without running it");
    add_common(val_cmd, val_opt);
    bool val_xval = false;
    val_cmd->add_flag("--crossvalidate", val_xval, "Validate for the crossvalidate subcommand");

    auto *xval_cmd = app.add_subcommand("crossvalidate", "Compare tagged-user Monte Carlo against coverage integrals");
    add_common(xval_cmd, xval_opt);
    xval_cmd->add_flag("--assert", xval_opt.assert_checks, "Check sup-gap limits (exit 4 on failure)");

    auto *list_cmd = app.add_subcommand("list-presets", "List the built-in presets");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try
    {
        if (*list_cmd)
        {
            for (const auto &p : presets())
                std::cout << std::left << std::setw(16) << p.name << p.description << '\n';
            return kOk;
        }
        if (*val_cmd)
        {
            const auto cfg = resolve(val_opt, nullptr);
            const bool xv = val_xval || (find_preset(val_opt.preset) &&
                                         find_preset(val_opt.preset)->mode == RunMode::crossvalidate);
            if (!report_validation(validate(cfg, xv ? RunMode::crossvalidate : RunMode::run)))
                return kConfigError;
            std::cout << "ok\n";
            return kOk;
        }
        if (*run_cmd)
        {
            std::vector<Expectation> exp;
            const auto cfg = resolve(run_opt, &exp);
            if (!report_validation(validate(cfg, RunMode::run)))
                return kConfigError;
            const auto report = run(cfg);
            print_report(report);
            return run_opt.assert_checks ? print_checks(evaluate(report, exp)) : kOk;
        }
        if (*xval_cmd)
        {
            std::vector<Expectation> exp;
            const auto cfg = resolve(xval_opt, &exp);
            if (!report_validation(validate(cfg, RunMode::crossvalidate)))
                return kConfigError;
            const auto report = crossvalidate(cfg);
            for (const auto &c : report.checks)
                std::cout << std::left << std::setw(24) << c.label << " n=" << c.samples
                          << " sup_gap=" << format_number(c.sup_gap)
                          << " median_shift_db=" << format_number(c.snr_shift_db) << '\n';
            if (xval_opt.assert_checks)
            {
                if (exp.empty())
                    for (const auto &c : report.checks)
                        exp.push_back({c.label, CheckKind::sup_gap, 0.0,
                                       c.label.rfind("smf2_interference", 0) == 0 ? 0.03 : 0.02});
                return print_checks(evaluate(report, exp));
            }
            return kOk;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "error: " << e.field() << ": " << e.what() << '\n';
        return kConfigError;
    }
    catch (const ParameterError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    }
    catch (const StructuralError &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}
