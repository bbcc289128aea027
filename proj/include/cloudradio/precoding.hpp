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

#ifndef CLOUDRADIO_PRECODING_HPP
#define CLOUDRADIO_PRECODING_HPP

#include "cloudradio/channel.hpp"
#include "cloudradio/numerics.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cloudradio
{
    enum class Scheme
    {
        conventional,
        zfdpc,
        uplink_sic,
        zfdpc_partial,
        clustered,
        mmse,
        tic,
        smf
    };

    std::string_view to_string(Scheme s);
    std::optional<Scheme> scheme_from_string(std::string_view name);

    struct RateVector
    {
        std::vector<double> rates; // bps/Hz under the configured log base
        Scheme scheme = Scheme::zfdpc;
        std::uint64_t drop_id = 0;

        std::size_t size() const { return rates.size(); }
    };

    struct SinrBreakdown
    {
        double signal = 0.0;
        double interference = 0.0;
        double noise = 0.0;

        double sinr() const { return signal / (interference + noise); }
    };

    // log_base(1 + sinr)
    double rate_from_sinr(double sinr, double log_base = 2.0);

    // Same noise power on every stream.
    std::vector<double> uniform_noise(std::size_t k, const NoiseModel &noise);

    /// Nearest-BS link, every other column of the row interferes.
    RateVector conventional_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base = 2.0);

    /// ZF-DPC downlink: H = L Q, precoder Q^dagger, rate_i = log(1 + l_ii^2 / noise_i).
    RateVector zfdpc_rates(const ChannelMatrix &h, std::span<const double> noise, double log_base = 2.0);
    RateVector zfdpc_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base = 2.0);
    // Same, from an existing factorization.
    RateVector zfdpc_rates(const TriangularFactorization &f, std::span<const double> noise, double log_base = 2.0);

    /// Uplink with ideal successive cancellation: factor H^T instead of H.
    RateVector uplink_sic_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base = 2.0);

    /**
     * ZF-DPC driven by partial CSI.
     *
     * H_p = L_p Q_p is factored and Q_p^dagger used as precoder, so the true
     * effective channel is E = H Q_p^dagger. DPC pre-cancels the known lower
     * part L_p; the mismatch Z = E - L_p below the diagonal and every entry of
     * E above it reach the receiver as interference:
     *
     *   SINR_i = |E_ii|^2 / (noise_i + sum_{j<i} |Z_ij|^2 + sum_{j>i} |E_ij|^2)
     */
    std::vector<SinrBreakdown> zfdpc_partial_sinr(const ChannelMatrix &h, const PartialCsiView &csi,
                                                  std::span<const double> noise);
    RateVector zfdpc_partial_rates(const ChannelMatrix &h, const PartialCsiView &csi,
                                   std::span<const double> noise, double log_base = 2.0);
    RateVector zfdpc_partial_rates(const ChannelMatrix &h, const PartialCsiView &csi,
                                   const NoiseModel &noise, double log_base = 2.0);

    /// Clustered cooperation: ZF-DPC on the in-cluster channel with the
    /// inter-cluster power added to each stream's noise. Partial CSI is used
    /// when csi_l is set and smaller than the cluster size.
    RateVector clustered_rates(const ChannelMatrix &h_in, std::span<const double> interference,
                               const NoiseModel &noise, std::optional<std::size_t> csi_l = std::nullopt,
                               double log_base = 2.0);

    /// Linear MMSE receiver: MSE = s2 (H^dagger H + s2 I)^-1, rate_i = -log(MSE_ii).
    RateVector mmse_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base = 2.0);

    // Total interference cancellation: only |H_ii|^2 against noise.
    RateVector tic_rate(const ChannelMatrix &h, const NoiseModel &noise, double log_base = 2.0);

    /**
     * Spatial matched-filter combining of the l best links of each row (by
     * instantaneous power, or by distance for the nearest-BS analytic model);
     * the remaining links of the row are interference.
     */
    std::vector<SinrBreakdown> smf_sinr(const ChannelMatrix &h, const NoiseModel &noise, std::size_t l,
                                        CsiSelection selection = CsiSelection::magnitude);
    RateVector smf_rate(const ChannelMatrix &h, const NoiseModel &noise, std::size_t l,
                        CsiSelection selection = CsiSelection::magnitude, double log_base = 2.0);
}

#endif
