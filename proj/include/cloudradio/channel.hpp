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

#ifndef CLOUDRADIO_CHANNEL_HPP
#define CLOUDRADIO_CHANNEL_HPP

#include "cloudradio/geometry.hpp"
#include "cloudradio/numerics.hpp"
#include "cloudradio/random.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cloudradio
{
    // UE-BS distances below this are clamped (1 m) to keep z^(-alpha/2) finite.
    inline constexpr double kMinDistanceKm = 1e-3;

    struct PathLoss
    {
        double alpha = 4.0; // path-loss exponent, > 2
        double mu = 1.0;    // fade power is exponential with mean 1/mu
    };

    /**
     * Faded path-loss matrix. Row i is the receiving UE of stream i, column j
     * the transmitting BS of stream j, entry h_ij * z_ij^(-alpha/2). Usually
     * square (one column per cohort BS); the tagged-user helpers build a
     * single row against every BS in the drop.
     */
    struct ChannelMatrix
    {
        CMatrix gains;
        std::vector<double> distances; // row-major, same shape as gains, km
        PathLoss path_loss;

        std::size_t rows() const { return gains.rows(); }
        std::size_t cols() const { return gains.cols(); }
        std::size_t k() const { return gains.rows(); }
        double distance(std::size_t r, std::size_t c) const { return distances[r * gains.cols() + c]; }
        double power(std::size_t r, std::size_t c) const { return std::norm(gains(r, c)); }
    };

    struct NoiseModel
    {
        double sigma_sq = 0.1; // per-stream noise power, unit transmit power
        double snr_db = 10.0;

        static NoiseModel from_snr_db(double snr_db);
        // Network-average SNR 1/(16 lambda^2 sigma^2) of the PPP model, in dB.
        double network_average_snr_db(double lambda_b) const;
    };

    // Fresh Rayleigh fades on the (ue, bs) grid given by the two index lists.
    ChannelMatrix build_link_matrix(std::span<const std::size_t> ue_indices,
                                    std::span<const std::size_t> bs_indices,
                                    const Association &assoc, PathLoss path_loss, Rng &rng);

    // Rows and columns picked from an existing matrix, fades kept.
    ChannelMatrix submatrix(const ChannelMatrix &h, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols);

    /// Square k x k channel of a cohort, stream i <-> pairs[i].
    ChannelMatrix build_channel(const Cohort &cohort, const Association &assoc, PathLoss path_loss, Rng &rng);

    enum class CsiSelection
    {
        magnitude, // l largest |h z^(-alpha/2)| per row
        distance   // l nearest BSs per row
    };

    struct PartialCsiView
    {
        CMatrix known;
        std::size_t l = 0;
    };

    // Keeps the l best entries per row, zeroes the rest. Requires 1 <= l <= cols.
    PartialCsiView take_partial_csi(const ChannelMatrix &h, std::size_t l,
                                    CsiSelection selection = CsiSelection::magnitude);

    // Column indices of row r ordered best-first under the selection rule.
    std::vector<std::size_t> ranked_columns(const ChannelMatrix &h, std::size_t r, CsiSelection selection);

    /// Power received by each listed UE from every out-of-cluster BS, with fresh
    /// fades drawn per (ue, bs) link from a key taken off rng.
    std::vector<double> inter_cluster_interference(const ClusterSplit &split,
                                                   std::span<const std::size_t> ue_indices,
                                                   const Association &assoc, PathLoss path_loss, Rng &rng);

    // With fades stripped, every diagonal entry is the maximum of its row.
    bool distance_dominant(const ChannelMatrix &h);
    // Every |H_ii| exceeds all other magnitudes in its row and its column.
    bool magnitude_dominant(const ChannelMatrix &h);

    // Rows of "re,im,re,im,..." values.
    void write_csv(std::ostream &os, const ChannelMatrix &h);
}

#endif
