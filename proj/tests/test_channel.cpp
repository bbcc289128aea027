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
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
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

    PointSet points(std::initializer_list<Point> p)
    {
        PointSet s;
        s.points = p;
        return s;
    }
}

TEST_SUITE("channel")
{
    TEST_CASE("entry magnitude follows z^(-alpha/2) with a shared fade")
    {
        const auto bs = points({{0, 0}});
        const auto near = associate(bs, points({{1, 0}}));
        const auto far = associate(bs, points({{2, 0}}));
        const Cohort c{{{0, 0}}};
        Rng r1(5), r2(5);
        const auto h1 = build_channel(c, near, {4.0, 1.0}, r1);
        const auto h2 = build_channel(c, far, {4.0, 1.0}, r2);
        CHECK(h1.distance(0, 0) == doctest::Approx(1.0));
        CHECK(std::abs(h1.gains(0, 0)) / std::abs(h2.gains(0, 0)) == doctest::Approx(4.0));
    }

    TEST_CASE("colocated UE is clamped to the minimum distance")
    {
        const auto a = associate(points({{0, 0}}), points({{0, 0}}));
        Rng rng(1);
        const auto h = build_channel(Cohort{{{0, 0}}}, a, {}, rng);
        CHECK(h.distance(0, 0) == kMinDistanceKm);
        CHECK(std::isfinite(std::abs(h.gains(0, 0))));
    }

    TEST_CASE("fade power has mean 1/mu")
    {
        const auto a = associate(points({{0, 0}}), points({{1, 0}}));
        for (double mu : {1.0, 2.0})
        {
            Rng rng(9);
            double sum = 0.0;
            const int n = 10000;
            for (int i = 0; i < n; ++i)
                sum += build_channel(Cohort{{{0, 0}}}, a, {4.0, mu}, rng).power(0, 0);
            CHECK(sum / n == doctest::Approx(1.0 / mu).epsilon(0.03));
        }
    }

    TEST_CASE("build_channel preconditions")
    {
        const auto a = associate(points({{0, 0}}), points({{1, 0}}));
        Rng rng(1);
        CHECK_THROWS_AS(build_channel(Cohort{}, a, {}, rng), StructuralError);
        CHECK_THROWS_AS(build_channel(Cohort{{{0, 0}}}, a, {2.0, 1.0}, rng), ParameterError);
        CHECK_THROWS_AS(build_channel(Cohort{{{0, 0}}}, a, {4.0, 0.0}, rng), ParameterError);
    }

    TEST_CASE("partial CSI keeps the l strongest entries per row (sort oracle)")
    {
        Rng rng(21);
        for (int trial = 0; trial < 100; ++trial)
        {
            const auto h = wrap(oracle::random_matrix(5, 5, rng));
            const auto view = take_partial_csi(h, 3);
            for (std::size_t r = 0; r < 5; ++r)
            {
                std::vector<double> mags;
                for (std::size_t c = 0; c < 5; ++c)
                    mags.push_back(std::abs(h.gains(r, c)));
                std::vector<double> sorted = mags;
                std::sort(sorted.rbegin(), sorted.rend());
                for (std::size_t c = 0; c < 5; ++c)
                {
                    const bool keep = mags[c] >= sorted[2];
                    REQUIRE((view.known(r, c) != cplx(0.0)) == keep);
                    if (keep)
                        REQUIRE(view.known(r, c) == h.gains(r, c));
                }
            }
        }
    }

    TEST_CASE("partial CSI limits")
    {
        Rng rng(22);
        const auto h = wrap(oracle::random_matrix(4, 4, rng));
        CHECK(relative_error(take_partial_csi(h, 4).known, h.gains) == 0.0);
        const auto one = take_partial_csi(h, 1);
        for (std::size_t r = 0; r < 4; ++r)
        {
            std::size_t best = 0;
            for (std::size_t c = 1; c < 4; ++c)
                if (std::abs(h.gains(r, c)) > std::abs(h.gains(r, best)))
                    best = c;
            for (std::size_t c = 0; c < 4; ++c)
                CHECK((one.known(r, c) != cplx(0.0)) == (c == best));
        }
        CHECK_THROWS_AS(take_partial_csi(h, 0), ParameterError);
        CHECK_THROWS_AS(take_partial_csi(h, 5), ParameterError);
    }

    TEST_CASE("distance selection keeps the nearest BSs")
    {
        auto h = wrap(CMatrix{{1.0, 5.0, 0.1}});
        h.distances = {2.0, 3.0, 1.0};
        const auto v = take_partial_csi(h, 2, CsiSelection::distance);
        CHECK(v.known(0, 0) == cplx(1.0));
        CHECK(v.known(0, 1) == cplx(0.0));
        CHECK(v.known(0, 2) == cplx(0.1));
    }

    TEST_CASE("inter-cluster interference")
    {
        const auto bs = points({{0, 0}, {1, 0}});
        const auto ue = points({{0, 0.001}});
        const auto a = associate(bs, ue);
        const std::size_t u[] = {0};
        Rng rng(1);

        ClusterSplit none{{0, 1}, {}, 50.0};
        CHECK(inter_cluster_interference(none, u, a, {}, rng)[0] == 0.0);

        // Mean over fades of a single unit-distance interferer is 1/mu.
        ClusterSplit one{{0}, {1}, 0.5};
        double sum = 0.0;
        const int n = 20000;
        for (int i = 0; i < n; ++i)
            sum += inter_cluster_interference(one, u, a, {}, rng)[0];
        CHECK(sum / n == doctest::Approx(1.0).epsilon(0.03));
    }

    TEST_CASE("inter-cluster interference is non-increasing in radius for a fixed drop")
    {
        const Region region(20.0, 20.0);
        Rng rng(31);
        for (int d = 0; d < 1000; ++d)
        {
            const auto bs = sample_ppp(0.3, region, rng);
            const auto ue = sample_ppp(0.3, region, rng);
            if (bs.points.empty() || ue.points.empty())
                continue;
            const auto a = associate(bs, ue);
            const std::size_t u[] = {0};
            const auto seed = rng();
            double prev = std::numeric_limits<double>::infinity();
            for (double r : {4.0, 6.0, 8.0, 10.0, 12.0})
            {
                Rng key(seed);
                const auto split = split_cluster(bs, ue.points[0], r);
                const double i = inter_cluster_interference(split, u, a, {}, key)[0];
                REQUIRE(i <= prev);
                prev = i;
            }
        }
    }

    TEST_CASE("submatrix keeps fades and distances")
    {
        Rng rng(4);
        auto h = wrap(oracle::random_matrix(3, 3, rng));
        h.distances = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        const std::size_t idx[] = {0, 2};
        const auto s = submatrix(h, idx, idx);
        CHECK(s.gains(1, 0) == h.gains(2, 0));
        CHECK(s.distance(1, 1) == 9.0);
    }

    TEST_CASE("noise model")
    {
        CHECK(NoiseModel::from_snr_db(10.0).sigma_sq == doctest::Approx(0.1));
        CHECK(NoiseModel::from_snr_db(-6.0).sigma_sq == doctest::Approx(std::pow(10.0, 0.6)));
    }
}
