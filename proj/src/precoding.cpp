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

#include "cloudradio/precoding.hpp"
#include "cloudradio/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace cloudradio
{
    namespace
    {
        constexpr std::array<std::pair<Scheme, std::string_view>, 8> kSchemeNames{{
            {Scheme::conventional, "conventional"},
            {Scheme::zfdpc, "zfdpc"},
            {Scheme::uplink_sic, "uplink_sic"},
            {Scheme::zfdpc_partial, "zfdpc_partial"},
            {Scheme::clustered, "clustered"},
            {Scheme::mmse, "mmse"},
            {Scheme::tic, "tic"},
            {Scheme::smf, "smf"},
        }};

        void require_square(const ChannelMatrix &h, const char *who)
        {
            if (h.rows() == 0 || !h.gains.square())
                throw StructuralError(std::string(who) + ": expected a non-empty square channel");
        }

        void require_noise(std::span<const double> noise, std::size_t k, const char *who)
        {
            if (noise.size() != k)
                throw StructuralError(std::string(who) + ": one noise value per stream required");
        }

        RateVector tagged(Scheme s, std::vector<double> rates)
        {
            RateVector v;
            v.scheme = s;
            v.rates = std::move(rates);
            return v;
        }
    }

    std::string_view to_string(Scheme s)
    {
        for (const auto &[scheme, name] : kSchemeNames)
            if (scheme == s)
                return name;
        return "unknown";
    }

    std::optional<Scheme> scheme_from_string(std::string_view name)
    {
        for (const auto &[scheme, n] : kSchemeNames)
            if (n == name)
                return scheme;
        return std::nullopt;
    }

    double rate_from_sinr(double sinr, double log_base)
    {
        return std::log1p(sinr) / std::log(log_base);
    }

    std::vector<double> uniform_noise(std::size_t k, const NoiseModel &noise)
    {
        return std::vector<double>(k, noise.sigma_sq);
    }

    RateVector conventional_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base)
    {
        if (h.rows() == 0 || h.cols() < h.rows())
            throw StructuralError("conventional_rates: need at least one column per stream");
        std::vector<double> rates(h.rows());
        for (std::size_t i = 0; i < h.rows(); ++i)
        {
            double interference = 0.0;
            for (std::size_t j = 0; j < h.cols(); ++j)
                if (j != i)
                    interference += h.power(i, j);
            rates[i] = rate_from_sinr(h.power(i, i) / (noise.sigma_sq + interference), log_base);
        }
        return tagged(Scheme::conventional, std::move(rates));
    }

    RateVector zfdpc_rates(const TriangularFactorization &f, std::span<const double> noise, double log_base)
    {
        require_noise(noise, f.size(), "zfdpc_rates");
        std::vector<double> rates(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
        {
            const double g = f.gain(i);
            rates[i] = f.degenerate[i] ? 0.0 : rate_from_sinr(g * g / noise[i], log_base);
        }
        return tagged(Scheme::zfdpc, std::move(rates));
    }

    RateVector zfdpc_rates(const ChannelMatrix &h, std::span<const double> noise, double log_base)
    {
        require_square(h, "zfdpc_rates");
        return zfdpc_rates(lq_factor(h.gains), noise, log_base);
    }

    RateVector zfdpc_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base)
    {
        return zfdpc_rates(h, uniform_noise(h.rows(), noise), log_base);
    }

    RateVector uplink_sic_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base)
    {
        require_square(h, "uplink_sic_rates");
        auto v = zfdpc_rates(lq_factor(h.gains.transpose()), uniform_noise(h.rows(), noise), log_base);
        v.scheme = Scheme::uplink_sic;
        return v;
    }

    std::vector<SinrBreakdown> zfdpc_partial_sinr(const ChannelMatrix &h, const PartialCsiView &csi,
                                                  std::span<const double> noise)
    {
        require_square(h, "zfdpc_partial_sinr");
        require_noise(noise, h.rows(), "zfdpc_partial_sinr");
        if (csi.known.rows() != h.rows() || csi.known.cols() != h.cols())
            throw StructuralError("zfdpc_partial_sinr: CSI view does not match the channel");

        const auto fp = lq_factor(csi.known);
        const CMatrix effective = h.gains * fp.unitary.adjoint();
        const std::size_t k = h.rows();

        std::vector<SinrBreakdown> out(k);
        for (std::size_t i = 0; i < k; ++i)
        {
            double interference = 0.0;
            for (std::size_t j = 0; j < i; ++j)
                interference += std::norm(effective(i, j) - fp.lower(i, j));
            for (std::size_t j = i + 1; j < k; ++j)
                interference += std::norm(effective(i, j));
            out[i] = {std::norm(effective(i, i)), interference, noise[i]};
        }
        return out;
    }

    RateVector zfdpc_partial_rates(const ChannelMatrix &h, const PartialCsiView &csi,
                                   std::span<const double> noise, double log_base)
    {
        const auto sinr = zfdpc_partial_sinr(h, csi, noise);
        std::vector<double> rates(sinr.size());
        for (std::size_t i = 0; i < sinr.size(); ++i)
            rates[i] = rate_from_sinr(sinr[i].sinr(), log_base);
        return tagged(Scheme::zfdpc_partial, std::move(rates));
    }

    RateVector zfdpc_partial_rates(const ChannelMatrix &h, const PartialCsiView &csi,
                                   const NoiseModel &noise, double log_base)
    {
        return zfdpc_partial_rates(h, csi, uniform_noise(h.rows(), noise), log_base);
    }

    RateVector clustered_rates(const ChannelMatrix &h_in, std::span<const double> interference,
                               const NoiseModel &noise, std::optional<std::size_t> csi_l, double log_base)
    {
        require_square(h_in, "clustered_rates");
        require_noise(interference, h_in.rows(), "clustered_rates");
        std::vector<double> total(h_in.rows());
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] = noise.sigma_sq + interference[i];

        RateVector v = csi_l && *csi_l < h_in.cols()
                           ? zfdpc_partial_rates(h_in, take_partial_csi(h_in, *csi_l), total, log_base)
                           : zfdpc_rates(h_in, total, log_base);
        v.scheme = Scheme::clustered;
        return v;
    }

    RateVector mmse_rates(const ChannelMatrix &h, const NoiseModel &noise, double log_base)
    {
        require_square(h, "mmse_rates");
        const std::size_t k = h.rows();
        CMatrix gram = h.gains.adjoint() * h.gains;
        for (std::size_t i = 0; i < k; ++i)
            gram(i, i) += noise.sigma_sq;
        // Make the Gram matrix exactly Hermitian before the HPD check.
        for (std::size_t i = 0; i < k; ++i)
        {
            gram(i, i) = gram(i, i).real();
            for (std::size_t j = i + 1; j < k; ++j)
                gram(j, i) = std::conj(gram(i, j));
        }
        const CMatrix inv = hpd_inverse(gram);
        std::vector<double> rates(k);
        for (std::size_t i = 0; i < k; ++i)
        {
            const double mse = noise.sigma_sq * inv(i, i).real();
            rates[i] = std::max(0.0, -std::log(mse) / std::log(log_base));
        }
        return tagged(Scheme::mmse, std::move(rates));
    }

    RateVector tic_rate(const ChannelMatrix &h, const NoiseModel &noise, double log_base)
    {
        if (h.rows() == 0 || h.cols() < h.rows())
            throw StructuralError("tic_rate: need at least one column per stream");
        std::vector<double> rates(h.rows());
        for (std::size_t i = 0; i < h.rows(); ++i)
            rates[i] = rate_from_sinr(h.power(i, i) / noise.sigma_sq, log_base);
        return tagged(Scheme::tic, std::move(rates));
    }

    std::vector<SinrBreakdown> smf_sinr(const ChannelMatrix &h, const NoiseModel &noise, std::size_t l,
                                        CsiSelection selection)
    {
        if (h.rows() == 0)
            throw StructuralError("smf_sinr: empty channel");
        if (l < 1 || l > h.cols())
            throw ParameterError("smf_rate: combining order l must lie in [1, k]");
        std::vector<SinrBreakdown> out(h.rows());
        for (std::size_t i = 0; i < h.rows(); ++i)
        {
            const auto order = ranked_columns(h, i, selection);
            SinrBreakdown s{0.0, 0.0, noise.sigma_sq};
            for (std::size_t n = 0; n < order.size(); ++n)
                (n < l ? s.signal : s.interference) += h.power(i, order[n]);
            out[i] = s;
        }
        return out;
    }

    RateVector smf_rate(const ChannelMatrix &h, const NoiseModel &noise, std::size_t l,
                        CsiSelection selection, double log_base)
    {
        const auto sinr = smf_sinr(h, noise, l, selection);
        std::vector<double> rates(sinr.size());
        for (std::size_t i = 0; i < sinr.size(); ++i)
            rates[i] = rate_from_sinr(sinr[i].sinr(), log_base);
        return tagged(Scheme::smf, std::move(rates));
    }
}
