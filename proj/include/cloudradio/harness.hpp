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

#ifndef CLOUDRADIO_HARNESS_HPP
#define CLOUDRADIO_HARNESS_HPP

#include "cloudradio/config.hpp"
#include "cloudradio/stats.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cloudradio
{
    struct SeriesSummary
    {
        std::string label;      // e.g. "zfdpc_partial_l6_snr20"
        std::string base_label; // label without the SNR suffix
        double snr_db = 0.0;
        bool is_power = false;  // THP transmit power rather than rates
        std::optional<EmpiricalCdf> cdf;
        // THP only: per-drop total power divided by the number of streams.
        std::optional<EmpiricalCdf> normalized;
        std::optional<double> gain_mean;      // % over conventional
        std::optional<double> gain_cell_edge; // % over conventional
    };

    struct SaturationSummary
    {
        std::string base_label;
        Saturation mean;
        Saturation cell_edge;
    };

    struct ExperimentReport
    {
        ExperimentConfig config;
        std::string config_echo;
        std::vector<SeriesSummary> series;
        std::vector<SaturationSummary> saturation;
        std::map<double, double> mean_cluster_size; // radius -> mean in-cluster BS count
        std::size_t empty_drops = 0;
        double distance_dominance_rate = 0.0;
        double magnitude_dominance_rate = 0.0;
        double wall_clock_s = 0.0;

        const SeriesSummary *find(const std::string &label) const;
        const SaturationSummary *find_saturation(const std::string &base_label) const;
        nlohmann::json to_json() const;
    };

    /**
     * Monte Carlo over config.drops independent network drops. Each drop draws
     * BS and UE point processes, a cohort and one channel realization that is
     * shared by every scheme and SNR. Writes <output_dir>/<preset>/<label>.csv
     * and summary.json when config.write_files is set. Identical seed and
     * config give byte-identical CSVs for any worker count.
     */
    ExperimentReport run(const ExperimentConfig &config);

    struct CrossCheck
    {
        std::string label;
        std::size_t samples = 0;
        double sup_gap = 0.0;
        // SNR shift of the Monte Carlo CDF relative to the analytic one at the median.
        double snr_shift_db = 0.0;
        std::vector<double> thresholds;
        std::vector<double> mc_cdf;
        std::vector<double> analytic_cdf;
    };

    struct CrossvalidateReport
    {
        ExperimentConfig config;
        std::string config_echo;
        std::vector<CrossCheck> checks;
        double wall_clock_s = 0.0;

        const CrossCheck *find(const std::string &label) const;
        nlohmann::json to_json() const;
    };

    /**
     * Tagged user at the region center against the coverage integrals:
     *   tic               nearest BS, interference removed      vs tau_tic
     *   smf2              two nearest BSs combined, no others   vs tau_smf2
     *   smf2_interference two nearest combined, rest interfere  vs tau_smf2 with Laplace factors
     */
    CrossvalidateReport crossvalidate(const ExperimentConfig &config);

    struct CheckResult
    {
        std::string description;
        double value = 0.0;
        double low = 0.0;
        double high = 0.0;
        bool pass = false;
    };

    std::vector<CheckResult> evaluate(const ExperimentReport &report, const std::vector<Expectation> &expectations);
    std::vector<CheckResult> evaluate(const CrossvalidateReport &report,
                                      const std::vector<Expectation> &expectations);

    // Label helpers shared with the CLI and tests.
    std::string snr_suffix(double snr_db);
}

#endif
