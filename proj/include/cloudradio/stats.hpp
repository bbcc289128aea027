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

#ifndef CLOUDRADIO_STATS_HPP
#define CLOUDRADIO_STATS_HPP

#include <json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cloudradio
{
    // Probability level used for the cell-edge rate.
    inline constexpr double kCellEdgeLevel = 0.05;

    /// Empirical distribution of a sample set, sorted on construction.
    class EmpiricalCdf
    {
    public:
        explicit EmpiricalCdf(std::vector<double> samples);

        std::size_t size() const { return sorted_.size(); }
        const std::vector<double> &samples() const { return sorted_; }
        double min() const { return sorted_.front(); }
        double max() const { return sorted_.back(); }
        double mean() const { return mean_; }
        // Standard error of the mean.
        double standard_error() const;

        // Linear interpolation between order statistics at h = (n-1) p.
        double quantile(double p) const;
        double median() const { return quantile(0.5); }
        double cell_edge() const { return quantile(kCellEdgeLevel); }

        // Fraction of samples <= x.
        double cdf(double x) const;

    private:
        std::vector<double> sorted_;
        double mean_ = 0.0;
    };

    // Throws StructuralError on empty input.
    EmpiricalCdf build_cdf(std::vector<double> samples);

    enum class Statistic
    {
        mean,
        cell_edge
    };

    // 100 (test - baseline) / baseline on the chosen statistic.
    double gain_percent(const EmpiricalCdf &test, const EmpiricalCdf &baseline, Statistic statistic);

    // Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
    double ks_distance(const EmpiricalCdf &a, const EmpiricalCdf &b);

    /**
     * Horizontal gap, in dB of SINR, between two rate CDFs at probability
     * level p: 10 log10((base^{r_a} - 1) / (base^{r_b} - 1)) with r the
     * p-quantiles. Positive when a lies to the right of b.
     */
    double snr_shift_db(const EmpiricalCdf &a, const EmpiricalCdf &b, double level, double log_base = 2.0);

    struct Saturation
    {
        bool saturated = false;
        double snr_db = 0.0;  // first grid point of the plateau
        double plateau = 0.0; // mean of the values from snr_db on
    };

    // Relative increase per 5 dB below which a curve counts as flat.
    inline constexpr double kSaturationSlope = 0.02;

    /**
     * Smallest grid SNR from which every later step grows by less than 2% per
     * 5 dB; at least two steps must follow it. Needs >= 4 strictly increasing
     * grid points.
     */
    Saturation detect_saturation(std::span<const double> snr_db, std::span<const double> means);

    // {scheme, n, mean, cell_edge, quantiles:{"1":..,"5":..,...}}
    nlohmann::json summary_json(const std::string &scheme, const EmpiricalCdf &cdf);
}

#endif
