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

#include "cloudradio/errors.hpp"
#include "cloudradio/precoding.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace cloudradio;

namespace
{
    ChannelMatrix wrap(const CMatrix &g)
    {
        ChannelMatrix h;
        h.gains = g;
        h.distances.assign(g.rows() * g.cols(), 1.0);
        return h;
    }

    const double kLog2of11 = std::log2(11.0);

    double sum(const std::vector<double> &v) { return std::accumulate(v.begin(), v.end(), 0.0); }

    // Random channel with a realistic dynamic range: unit-variance fades scaled
    // by random path loss.
    ChannelMatrix random_channel(std::size_t k, Rng &rng)
    {
        std::uniform_real_distribution<double> z(0.2, 5.0);
        auto h = wrap(oracle::random_matrix(k, k, rng));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
            {
                const double d = z(rng);
                h.distances[i * k + j] = d;
                h.gains(i, j) *= std::pow(d, -2.0);
            }
        return h;
    }
}

TEST_SUITE("precoding")
{
    const NoiseModel ten_db = NoiseModel::from_snr_db(10.0);

    TEST_CASE("single-link formulas")
    {
        const auto h = wrap(CMatrix{{1.0}});
        CHECK(conventional_rates(h, ten_db).rates[0] == doctest::Approx(kLog2of11));
        CHECK(tic_rate(h, ten_db).rates[0] == doctest::Approx(kLog2of11));
        CHECK(zfdpc_rates(h, ten_db).rates[0] == doctest::Approx(kLog2of11));
        CHECK(mmse_rates(h, ten_db).rates[0] == doctest::Approx(kLog2of11));
    }

    TEST_CASE("equal signal and interference at vanishing noise gives one bit")
    {
        const auto h = wrap(CMatrix{{1.0, 1.0}, {1.0, 1.0}});
        NoiseModel quiet;
        quiet.sigma_sq = 1e-12;
        for (double r : conventional_rates(h, quiet).rates)
            CHECK(r == doctest::Approx(1.0).epsilon(1e-9));
    }

    TEST_CASE("identity channel decouples every scheme")
    {
        const auto h = wrap(CMatrix::identity(4));
        for (const auto &rv : {zfdpc_rates(h, ten_db), uplink_sic_rates(h, ten_db), mmse_rates(h, ten_db),
                               conventional_rates(h, ten_db), tic_rate(h, ten_db)})
            for (double r : rv.rates)
                CHECK(r == doctest::Approx(kLog2of11));
    }

    TEST_CASE("zfdpc rate is log(1 + l_ii^2 / sigma^2) with the oracle factorization")
    {
        Rng rng(1);
        const auto h = random_channel(6, rng);
        const auto o = oracle::gram_schmidt_lq(h.gains);
        const auto r = zfdpc_rates(h, ten_db);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(r.rates[i] == doctest::Approx(std::log2(1.0 + std::norm(o.l(i, i)) / 0.1)).epsilon(1e-9));
        CHECK(r.scheme == Scheme::zfdpc);
    }

    TEST_CASE("natural-log mode")
    {
        const auto h = wrap(CMatrix{{1.0}});
        CHECK(zfdpc_rates(h, ten_db, std::exp(1.0)).rates[0] == doctest::Approx(std::log(11.0)));
    }

    TEST_CASE("duality: diagonal products equal |det H| for H and H^T, k <= 3")
    {
        Rng rng(2);
        for (std::size_t k = 1; k <= 3; ++k)
            for (int trial = 0; trial < 200; ++trial)
            {
                const auto h = random_channel(k, rng);
                const double det = oracle::abs_det(h.gains);
                const auto down = lq_factor(h.gains);
                const auto up = lq_factor(h.gains.transpose());
                double pd = 1.0, pu = 1.0;
                for (std::size_t i = 0; i < k; ++i)
                {
                    pd *= down.gain(i);
                    pu *= up.gain(i);
                }
                REQUIRE(pd == doctest::Approx(det).epsilon(1e-9));
                REQUIRE(pu == doctest::Approx(det).epsilon(1e-9));
            }
    }

    TEST_CASE("duality: sum rates agree in the high-SNR limit")
    {
        Rng rng(3);
        NoiseModel quiet;
        quiet.sigma_sq = 1e-14;
        for (int trial = 0; trial < 100; ++trial)
        {
            const auto h = random_channel(3, rng);
            const double down = sum(zfdpc_rates(h, quiet).rates);
            const double up = sum(uplink_sic_rates(h, quiet).rates);
            REQUIRE(std::abs(down - up) < 1e-6 * down);
        }
    }

    TEST_CASE("duality: diagonal channel gives identical per-stream rates")
    {
        const auto h = wrap(CMatrix{{2.0, 0.0, 0.0}, {0.0, 0.5, 0.0}, {0.0, 0.0, 1.5}});
        const auto d = zfdpc_rates(h, ten_db).rates;
        const auto u = uplink_sic_rates(h, ten_db).rates;
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(d[i] == doctest::Approx(u[i]));
    }

    TEST_CASE("degenerate stream gets zero rate")
    {
        const auto h = wrap(CMatrix{{1.0, 2.0}, {2.0, 4.0}});
        const auto r = zfdpc_rates(h, ten_db);
        CHECK(r.rates[0] > 0.0);
        CHECK(r.rates[1] == 0.0);
    }

    TEST_CASE("partial CSI with l = k reproduces full-CSI rates")
    {
        Rng rng(4);
        for (int trial = 0; trial < 50; ++trial)
        {
            const auto h = random_channel(7, rng);
            const auto full = zfdpc_rates(h, ten_db).rates;
            const auto part = zfdpc_partial_rates(h, take_partial_csi(h, 7), ten_db).rates;
            for (std::size_t i = 0; i < 7; ++i)
                REQUIRE(std::abs(full[i] - part[i]) < 1e-9);
        }
    }

    TEST_CASE("partial CSI SINR against a direct evaluation")
    {
        // Needs a full-rank known part for the Gram-Schmidt oracle.
        Rng rng(5);
        ChannelMatrix h;
        PartialCsiView csi;
        do
        {
            h = random_channel(5, rng);
            csi = take_partial_csi(h, 2);
        } while (oracle::abs_det(csi.known) < 1e-3 * std::pow(csi.known.frobenius_norm(), 5));
        const auto lp = oracle::gram_schmidt_lq(csi.known);
        const CMatrix e = h.gains * lp.q.adjoint();
        const auto noise = uniform_noise(5, ten_db);
        const auto s = zfdpc_partial_sinr(h, csi, noise);
        for (std::size_t i = 0; i < 5; ++i)
        {
            double interf = 0.0;
            for (std::size_t j = 0; j < 5; ++j)
                if (j < i)
                    interf += std::norm(e(i, j) - lp.l(i, j));
                else if (j > i)
                    interf += std::norm(e(i, j));
            CHECK(s[i].signal == doctest::Approx(std::norm(e(i, i))).epsilon(1e-8));
            CHECK(s[i].interference == doctest::Approx(interf).epsilon(1e-8).scale(1e-12));
        }
    }

    TEST_CASE("clustered rates without outside interference equal plain ZF-DPC")
    {
        Rng rng(6);
        const auto h = random_channel(5, rng);
        const std::vector<double> zero(5, 0.0);
        const auto a = clustered_rates(h, zero, ten_db).rates;
        const auto b = zfdpc_rates(h, ten_db).rates;
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(a[i] == doctest::Approx(b[i]));
        const std::vector<double> some(5, 1.0);
        const auto c = clustered_rates(h, some, ten_db).rates;
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(c[i] <= b[i]);
    }

    TEST_CASE("mmse against an explicit inverse and the noise limit")
    {
        const auto h = wrap(CMatrix{{1.0, 0.5}, {0.25, 2.0}});
        // (H^dagger H + s I)^{-1} for a real 2x2 matrix.
        const double s = 0.1;
        const double a = 1.0 + 0.0625 + s, b = 0.5 + 0.5, d = 0.25 + 4.0 + s;
        const double det = a * d - b * b;
        const auto r = mmse_rates(h, ten_db).rates;
        CHECK(r[0] == doctest::Approx(-std::log2(s * d / det)));
        CHECK(r[1] == doctest::Approx(-std::log2(s * a / det)));

        NoiseModel loud;
        loud.sigma_sq = 1e12;
        for (double x : mmse_rates(h, loud).rates)
            CHECK(x < 1e-9);
    }

    TEST_CASE("ordering: conventional <= tic and conventional <= smf(k), mmse <= zf-dpc sum")
    {
        Rng rng(7);
        for (int trial = 0; trial < 100; ++trial)
        {
            const auto h = random_channel(6, rng);
            const auto conv = conventional_rates(h, ten_db).rates;
            const auto tic = tic_rate(h, ten_db).rates;
            const auto smf = smf_rate(h, ten_db, 6).rates;
            for (std::size_t i = 0; i < 6; ++i)
            {
                REQUIRE(conv[i] <= tic[i] + 1e-12);
                REQUIRE(tic[i] <= smf[i] + 1e-12);
            }
        }
    }

    TEST_CASE("smf limits")
    {
        Rng rng(8);
        const auto h = random_channel(4, rng);
        const auto full = smf_sinr(h, ten_db, 4);
        for (std::size_t i = 0; i < 4; ++i)
        {
            double row = 0.0;
            for (std::size_t j = 0; j < 4; ++j)
                row += h.power(i, j);
            CHECK(full[i].sinr() == doctest::Approx(row / 0.1));
        }
        const auto single = wrap(CMatrix{{0.7, 0.0}, {0.0, 1.3}});
        const auto tic = tic_rate(single, ten_db).rates;
        const auto smf1 = smf_rate(single, ten_db, 1).rates;
        CHECK(smf1[0] == doctest::Approx(tic[0]));
        CHECK(smf1[1] == doctest::Approx(tic[1]));
        CHECK_THROWS_AS(smf_rate(h, ten_db, 0), ParameterError);
        CHECK_THROWS_AS(smf_rate(h, ten_db, 5), ParameterError);
    }

    TEST_CASE("scheme names round-trip")
    {
        for (auto s : {Scheme::conventional, Scheme::zfdpc, Scheme::uplink_sic, Scheme::zfdpc_partial,
                       Scheme::clustered, Scheme::mmse, Scheme::tic, Scheme::smf})
            CHECK(scheme_from_string(to_string(s)) == s);
        CHECK_FALSE(scheme_from_string("nope").has_value());
    }
}
