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

#ifndef CLOUDRADIO_CONFIG_HPP
#define CLOUDRADIO_CONFIG_HPP

#include "cloudradio/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cloudradio
{
    /// Rejected configuration; field() names the offending key.
    class ConfigError : public std::invalid_argument
    {
    public:
        ConfigError(std::string field, const std::string &message)
            : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    /**
     * Everything one experiment needs. Scheme names:
     *   conventional, zfdpc, uplink_sic, mmse, tic, smf   one series each
     *   zfdpc_partial, smf_partial                         one series per csi_l
     *   clustered                                          per radius, full CSI and each csi_l
     *   thp_fixed4, thp_fixed16, thp_fixed64, thp_adaptive THP transmit power
     * crossvalidate uses tic, smf2 and smf2_interference instead.
     */
    struct ExperimentConfig
    {
        std::string preset = "custom";
        double region_width_km = 10.0;
        double region_height_km = 10.0;
        double lambda_b = 0.3;
        std::optional<double> lambda_u; // defaults to 10 lambda_b
        double alpha = 4.0;
        double mu = 1.0;
        std::vector<double> snr_db{10.0};
        std::size_t drops = 500;
        std::vector<std::string> schemes{"conventional", "zfdpc"};
        std::vector<std::size_t> csi_l;
        std::vector<double> cluster_radius_km;
        CsiSelection csi_selection = CsiSelection::magnitude;
        std::size_t thp_vectors = 100;
        double log_base = 2.0;
        std::uint64_t seed = 1;
        std::string output_dir = "results";
        std::size_t workers = 1;
        bool write_files = true;

        double ue_intensity() const { return lambda_u.value_or(10.0 * lambda_b); }
        PathLoss path_loss() const { return {alpha, mu}; }
    };

    struct FieldIssue
    {
        std::string field;
        std::string message;
    };

    struct ValidationResult
    {
        std::vector<FieldIssue> errors;
        std::vector<FieldIssue> warnings;
        bool ok() const { return errors.empty(); }
    };

    enum class RunMode
    {
        run,
        crossvalidate
    };

    ValidationResult validate(const ExperimentConfig &config, RunMode mode = RunMode::run);

    // Flat "key = value" text; '#' starts a comment; lists are comma separated.
    ExperimentConfig parse_config(const std::string &text, ExperimentConfig base = {});
    ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});
    // Applies one key/value pair; throws ConfigError on unknown keys or bad values.
    void apply_setting(ExperimentConfig &config, const std::string &key, const std::string &value);
    // Canonical key-value rendering, stable across runs.
    std::string to_kv(const ExperimentConfig &config);

    enum class CheckKind
    {
        mean,
        cell_edge,
        gain_mean,        // % over conventional at the same SNR
        mean_ratio,       // mean(label) / mean(other)
        plateau_mean,     // saturation plateau of an SNR sweep
        plateau_cell_edge,
        saturation_snr,
        sup_gap           // crossvalidate: sup |F_mc - F_analytic|
    };

    /// A reference value a preset is expected to reproduce, checked by --assert.
    struct Expectation
    {
        std::string label;
        CheckKind kind = CheckKind::mean;
        double target = 0.0;
        double tolerance = 0.0;
        bool relative = false;  // tolerance as a fraction of target
        std::string other = {}; // second series for mean_ratio
    };

    struct Preset
    {
        std::string name;
        std::string description;
        RunMode mode = RunMode::run;
        ExperimentConfig config;
        std::vector<Expectation> expectations;
    };

    const std::vector<Preset> &presets();
    const Preset *find_preset(const std::string &name);

    std::string format_number(double v);
}

#endif
