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

#include "cloudradio/channel.hpp"
#include "cloudradio/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace cloudradio
{
    namespace
    {
        void check_path_loss(PathLoss pl)
        {
            if (!(pl.alpha > 2.0))
                throw ParameterError("path loss exponent alpha must exceed 2");
            if (!(pl.mu > 0.0))
                throw ParameterError("fade parameter mu must be positive");
        }

        double amplitude_loss(double z_km, double alpha)
        {
            return std::pow(std::max(z_km, kMinDistanceKm), -0.5 * alpha);
        }
    }

    NoiseModel NoiseModel::from_snr_db(double snr_db)
    {
        if (!std::isfinite(snr_db))
            throw ParameterError("snr_db must be finite");
        return {std::pow(10.0, -snr_db / 10.0), snr_db};
    }

    double NoiseModel::network_average_snr_db(double lambda_b) const
    {
        return 10.0 * std::log10(1.0 / (16.0 * lambda_b * lambda_b * sigma_sq));
    }

    ChannelMatrix build_link_matrix(std::span<const std::size_t> ue_indices,
                                    std::span<const std::size_t> bs_indices,
                                    const Association &assoc, PathLoss path_loss, Rng &rng)
    {
        check_path_loss(path_loss);
        ChannelMatrix h;
        h.path_loss = path_loss;
        h.gains = CMatrix(ue_indices.size(), bs_indices.size());
        h.distances.resize(ue_indices.size() * bs_indices.size());
        const double fade_power = 1.0 / path_loss.mu;
        for (std::size_t r = 0; r < ue_indices.size(); ++r)
            for (std::size_t c = 0; c < bs_indices.size(); ++c)
            {
                const double z = std::max(assoc.distance(ue_indices[r], bs_indices[c]), kMinDistanceKm);
                h.distances[r * bs_indices.size() + c] = z;
                h.gains(r, c) = complex_gaussian(rng, fade_power) * amplitude_loss(z, path_loss.alpha);
            }
        return h;
    }

    ChannelMatrix build_channel(const Cohort &cohort, const Association &assoc, PathLoss path_loss, Rng &rng)
    {
        if (cohort.empty())
            throw StructuralError("build_channel: empty cohort");
        std::vector<std::size_t> ues, bss;
        ues.reserve(cohort.size());
        bss.reserve(cohort.size());
        for (const auto &p : cohort.pairs)
        {
            ues.push_back(p.ue);
            bss.push_back(p.bs);
        }
        return build_link_matrix(ues, bss, assoc, path_loss, rng);
    }

    ChannelMatrix submatrix(const ChannelMatrix &h, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols)
    {
        ChannelMatrix out;
        out.path_loss = h.path_loss;
        out.gains = CMatrix(rows.size(), cols.size());
        out.distances.resize(rows.size() * cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
            {
                out.gains(r, c) = h.gains(rows[r], cols[c]);
                out.distances[r * cols.size() + c] = h.distance(rows[r], cols[c]);
            }
        return out;
    }

    std::vector<std::size_t> ranked_columns(const ChannelMatrix &h, std::size_t r, CsiSelection selection)
    {
        std::vector<std::size_t> idx(h.cols());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        if (selection == CsiSelection::magnitude)
            std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                             { return h.power(r, a) > h.power(r, b); });
        else
            std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                             { return h.distance(r, a) < h.distance(r, b); });
        return idx;
    }

    PartialCsiView take_partial_csi(const ChannelMatrix &h, std::size_t l, CsiSelection selection)
    {
        if (l < 1 || l > h.cols())
            throw ParameterError("take_partial_csi: l must lie in [1, k]");
        PartialCsiView view;
        view.l = l;
        view.known = CMatrix(h.rows(), h.cols());
        for (std::size_t r = 0; r < h.rows(); ++r)
        {
            const auto order = ranked_columns(h, r, selection);
            for (std::size_t n = 0; n < l; ++n)
                view.known(r, order[n]) = h.gains(r, order[n]);
        }
        return view;
    }

    std::vector<double> inter_cluster_interference(const ClusterSplit &split,
                                                   std::span<const std::size_t> ue_indices,
                                                   const Association &assoc, PathLoss path_loss, Rng &rng)
    {
        check_path_loss(path_loss);
        // Fades are keyed by (ue, bs) so that one generator state yields the
        // same link fade whatever the split; interference is then monotone in
        // the cluster radius for a fixed drop.
        const std::uint64_t key = rng();
        std::exponential_distribution<double> fade(path_loss.mu);
        std::vector<bool> outside(assoc.bs_count(), false);
        for (const std::size_t b : split.out_cluster)
            outside.at(b) = true;
        std::vector<double> out(ue_indices.size(), 0.0);
        for (std::size_t r = 0; r < ue_indices.size(); ++r)
        {
            if (split.out_cluster.empty())
                continue;
            Rng link = substream(key, ue_indices[r]);
            for (std::size_t b = 0; b < assoc.bs_count(); ++b)
            {
                const double g = fade(link);
                if (!outside[b])
                    continue;
                const double a = amplitude_loss(assoc.distance(ue_indices[r], b), path_loss.alpha);
                out[r] += g * a * a;
            }
        }
        return out;
    }

    bool distance_dominant(const ChannelMatrix &h)
    {
        for (std::size_t r = 0; r < std::min(h.rows(), h.cols()); ++r)
            for (std::size_t c = 0; c < h.cols(); ++c)
                if (h.distance(r, c) < h.distance(r, r))
                    return false;
        return true;
    }

    bool magnitude_dominant(const ChannelMatrix &h)
    {
        const std::size_t n = std::min(h.rows(), h.cols());
        for (std::size_t i = 0; i < n; ++i)
        {
            const double d = h.power(i, i);
            for (std::size_t c = 0; c < h.cols(); ++c)
                if (c != i && h.power(i, c) >= d)
                    return false;
            for (std::size_t r = 0; r < h.rows(); ++r)
                if (r != i && h.power(r, i) >= d)
                    return false;
        }
        return true;
    }

    void write_csv(std::ostream &os, const ChannelMatrix &h)
    {
        for (std::size_t r = 0; r < h.rows(); ++r)
        {
            for (std::size_t c = 0; c < h.cols(); ++c)
            {
                if (c)
                    os << ',';
                os << h.gains(r, c).real() << ',' << h.gains(r, c).imag();
            }
            os << '\n';
        }
    }
}
