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

#ifndef CLOUDRADIO_GEOMETRY_HPP
#define CLOUDRADIO_GEOMETRY_HPP

#include "cloudradio/random.hpp"

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace cloudradio
{
    struct Point
    {
        double x = 0.0; // km
        double y = 0.0; // km
    };

    double distance(Point a, Point b);

    // Axis-aligned rectangle [0, width] x [0, height], km.
    class Region
    {
    public:
        Region(double width_km, double height_km);
        static Region square(double side_km) { return {side_km, side_km}; }

        double width() const { return width_; }
        double height() const { return height_; }
        double area() const { return width_ * height_; }
        Point center() const { return {0.5 * width_, 0.5 * height_}; }
        bool contains(Point p) const;

    private:
        double width_;
        double height_;
    };

    struct PointSet
    {
        std::vector<Point> points;
        double intensity = 0.0; // points per km^2

        std::size_t size() const { return points.size(); }
        bool empty() const { return points.empty(); }
    };

    /// Homogeneous PPP: Poisson(intensity * area) points, i.i.d. uniform in the region.
    PointSet sample_ppp(double intensity, const Region &region, Rng &rng);

    // Debug dump, one "x,y" row per point.
    void write_csv(std::ostream &os, const PointSet &set);

    /// Nearest-BS association. distance(j, i) is the UE j to BS i distance.
    class Association
    {
    public:
        Association() = default;
        Association(std::size_t n_ue, std::size_t n_bs);

        std::size_t ue_count() const { return n_ue_; }
        std::size_t bs_count() const { return n_bs_; }

        double distance(std::size_t ue, std::size_t bs) const { return z_[ue * n_bs_ + bs]; }
        double &distance(std::size_t ue, std::size_t bs) { return z_[ue * n_bs_ + bs]; }

        std::vector<std::size_t> primary_bs;

    private:
        std::size_t n_ue_ = 0;
        std::size_t n_bs_ = 0;
        std::vector<double> z_;
    };

    Association associate(const PointSet &bs, const PointSet &ue);

    struct CohortPair
    {
        std::size_t bs;
        std::size_t ue;
    };

    /// One (BS, UE) pair per occupied BS, in increasing BS index order. Stream i
    /// of the channel matrix is pairs[i].
    struct Cohort
    {
        std::vector<CohortPair> pairs;
        std::size_t size() const { return pairs.size(); }
        bool empty() const { return pairs.empty(); }
    };

    // UE per occupied BS drawn uniformly among its associated UEs; BSs with
    // no associated UE are left out.
    Cohort select_cohort(const Association &assoc, Rng &rng);

    struct ClusterSplit
    {
        std::vector<std::size_t> in_cluster;
        std::vector<std::size_t> out_cluster;
        double radius_km = 0.0;
    };

    // in_cluster = { i : |bs_i - center| <= radius }.
    ClusterSplit split_cluster(const PointSet &bs, Point center, double radius_km);
}

#endif
