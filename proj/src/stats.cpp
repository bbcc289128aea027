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

#include "cloudradio/stats.hpp"
#include "cloudradio/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace cloudradio
{
    EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
        : sorted_(std::move(samples))
    {
        if (sorted_.empty())
            throw StructuralError("empirical CDF needs at least one sample");
        std::sort(sorted_.begin(), sorted_.end());
        // Summed in sorted order so the mean does not depend on input order.
        mean_ = std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(sorted_.size());
    }

    double EmpiricalCdf::standard_error() const
    {
        if (sorted_.size() < 2)
            return 0.0;
        double ss = 0.0;
        for (double v : sorted_)
            ss += (v - mean_) * (v - mean_);
        const double n = static_cast<double>(sorted_.size());
        return std::sqrt(ss / (n - 1.0) / n);
    }

    double EmpiricalCdf::quantile(double p) const
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw ParameterError("quantile level must lie in [0, 1]");
        const double h = p * static_cast<double>(sorted_.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted_.size() - 1);
        const double frac = h - static_cast<double>(lo);
        return sorted_[lo] + frac * (sorted_[hi] - sorted_[lo]);
    }

    double EmpiricalCdf::cdf(double x) const
    {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    EmpiricalCdf build_cdf(std::vector<double> samples)
    {
        return EmpiricalCdf(std::move(samples));
    }

    double gain_percent(const EmpiricalCdf &test, const EmpiricalCdf &baseline, Statistic statistic)
    {
        const auto pick = [statistic](const EmpiricalCdf &c)
        { return statistic == Statistic::mean ? c.mean() : c.cell_edge(); };
        const double base = pick(baseline);
        if (!(base > 0.0))
            throw ParameterError("gain_percent: baseline statistic must be positive");
        return 100.0 * (pick(test) - base) / base;
    }

    double ks_distance(const EmpiricalCdf &a, const EmpiricalCdf &b)
    {
        const auto &x = a.samples();
        const auto &y = b.samples();
        const double nx = static_cast<double>(x.size());
        const double ny = static_cast<double>(y.size());
        std::size_t i = 0, j = 0;
        double d = 0.0;
        while (i < x.size() && j < y.size())
        {
            const double v = std::min(x[i], y[j]);
            while (i < x.size() && x[i] == v)
                ++i;
            while (j < y.size() && y[j] == v)
                ++j;
            d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
        }
        return d;
    }

    double snr_shift_db(const EmpiricalCdf &a, const EmpiricalCdf &b, double level, double log_base)
    {
        const double sa = std::pow(log_base, a.quantile(level)) - 1.0;
        const double sb = std::pow(log_base, b.quantile(level)) - 1.0;
        if (!(sa > 0.0) || !(sb > 0.0))
            throw NumericalError("snr_shift_db: zero rate quantile, shift undefined");
        return 10.0 * std::log10(sa / sb);
    }

    Saturation detect_saturation(std::span<const double> snr_db, std::span<const double> means)
    {
        if (snr_db.size() != means.size())
            throw StructuralError("detect_saturation: grid and means differ in length");
        if (snr_db.size() < 4)
            throw ParameterError("detect_saturation: at least 4 grid points required");
        for (std::size_t i = 1; i < snr_db.size(); ++i)
            if (!(snr_db[i] > snr_db[i - 1]))
                throw ParameterError("detect_saturation: SNR grid must be strictly increasing");

        const std::size_t n = snr_db.size();
        std::vector<bool> flat(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
        {
            const double rel = means[i] > 0.0 ? (means[i + 1] - means[i]) / means[i] : INFINITY;
            const double per5 = rel * 5.0 / (snr_db[i + 1] - snr_db[i]);
            flat[i] = per5 < kSaturationSlope;
        }

        // The flat run must reach the end of the grid and span two steps.
        std::size_t start = n - 1;
        while (start > 0 && flat[start - 1])
            --start;
        Saturation s;
        if (n - 1 - start < 2)
            return s;
        s.saturated = true;
        s.snr_db = snr_db[start];
        s.plateau = std::accumulate(means.begin() + static_cast<std::ptrdiff_t>(start), means.end(), 0.0) /
                    static_cast<double>(n - start);
        return s;
    }

    nlohmann::json summary_json(const std::string &scheme, const EmpiricalCdf &cdf)
    {
        static constexpr std::array<int, 7> kPercentiles{1, 5, 25, 50, 75, 95, 99};
        nlohmann::json q = nlohmann::json::object();
        for (int p : kPercentiles)
            q[std::to_string(p)] = cdf.quantile(p / 100.0);
        return {{"scheme", scheme},
                {"n", cdf.size()},
                {"mean", cdf.mean()},
                {"cell_edge", cdf.cell_edge()},
                {"quantiles", q}};
    }
}
