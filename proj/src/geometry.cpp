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

#include "cloudradio/geometry.hpp"
#include "cloudradio/errors.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace cloudradio
{
    double distance(Point a, Point b)
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    Region::Region(double width_km, double height_km)
        : width_(width_km), height_(height_km)
    {
        if (!(width_km > 0.0) || !(height_km > 0.0))
            throw ParameterError("Region: width and height must be positive");
    }

    bool Region::contains(Point p) const
    {
        return p.x >= 0.0 && p.x <= width_ && p.y >= 0.0 && p.y <= height_;
    }

    PointSet sample_ppp(double intensity, const Region &region, Rng &rng)
    {
        if (!(intensity >= 0.0) || !std::isfinite(intensity))
            throw ParameterError("sample_ppp: intensity must be a finite non-negative value");

        PointSet out;
        out.intensity = intensity;
        if (intensity == 0.0)
            return out;

        std::poisson_distribution<std::size_t> count(intensity * region.area());
        const std::size_t n = count(rng);
        std::uniform_real_distribution<double> ux(0.0, region.width());
        std::uniform_real_distribution<double> uy(0.0, region.height());
        out.points.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double x = ux(rng);
            const double y = uy(rng);
            out.points.push_back({x, y});
        }
        return out;
    }

    void write_csv(std::ostream &os, const PointSet &set)
    {
        os << "x,y\n";
        for (const auto &p : set.points)
            os << p.x << ',' << p.y << '\n';
    }

    Association::Association(std::size_t n_ue, std::size_t n_bs)
        : primary_bs(n_ue, 0), n_ue_(n_ue), n_bs_(n_bs), z_(n_ue * n_bs, 0.0) {}

    Association associate(const PointSet &bs, const PointSet &ue)
    {
        if (bs.empty())
            throw StructuralError("associate: empty BS set");

        Association a(ue.size(), bs.size());
        for (std::size_t j = 0; j < ue.size(); ++j)
        {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (std::size_t i = 0; i < bs.size(); ++i)
            {
                const double z = distance(ue.points[j], bs.points[i]);
                a.distance(j, i) = z;
                if (z < best)
                {
                    best = z;
                    arg = i;
                }
            }
            a.primary_bs[j] = arg;
        }
        return a;
    }

    Cohort select_cohort(const Association &assoc, Rng &rng)
    {
        std::vector<std::vector<std::size_t>> served(assoc.bs_count());
        for (std::size_t j = 0; j < assoc.ue_count(); ++j)
            served[assoc.primary_bs[j]].push_back(j);

        Cohort c;
        for (std::size_t i = 0; i < served.size(); ++i)
        {
            const auto &ues = served[i];
            if (ues.empty())
                continue;
            std::uniform_int_distribution<std::size_t> pick(0, ues.size() - 1);
            c.pairs.push_back({i, ues[pick(rng)]});
        }
        return c;
    }

    ClusterSplit split_cluster(const PointSet &bs, Point center, double radius_km)
    {
        if (!(radius_km > 0.0))
            throw ParameterError("split_cluster: radius must be positive");

        ClusterSplit s;
        s.radius_km = radius_km;
        for (std::size_t i = 0; i < bs.size(); ++i)
        {
            if (distance(bs.points[i], center) <= radius_km)
                s.in_cluster.push_back(i);
            else
                s.out_cluster.push_back(i);
        }
        return s;
    }
}
