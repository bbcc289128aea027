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

#include "cloudradio/thp.hpp"
#include "cloudradio/errors.hpp"
#include "cloudradio/precoding.hpp"

#include <cmath>
#include <string>

namespace cloudradio
{
    QamConstellation QamConstellation::make(int order)
    {
        if (order != 4 && order != 16 && order != 64)
            throw ParameterError("QAM order must be 4, 16 or 64");
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
        // Odd-integer grid {±1, ±3, ...} has mean energy 2 (M - 1) / 3.
        const double scale = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);

        QamConstellation q;
        q.order = order;
        q.grid_step = 2.0 * scale;
        q.modulo_base = side * q.grid_step;
        q.points.reserve(static_cast<std::size_t>(order));
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b)
                q.points.emplace_back((2 * a - side + 1) * scale, (2 * b - side + 1) * scale);
        return q;
    }

    cplx QamConstellation::nearest(cplx x) const
    {
        std::size_t best = 0;
        double dist = std::norm(x - points[0]);
        for (std::size_t i = 1; i < points.size(); ++i)
        {
            const double d = std::norm(x - points[i]);
            if (d < dist)
            {
                dist = d;
                best = i;
            }
        }
        return points[best];
    }

    QamConstellation select_modulation(double c_zfdpc)
    {
        if (!(c_zfdpc >= 0.0))
            throw ParameterError("select_modulation: capacity must be non-negative");
        if (c_zfdpc > 7.0)
            return QamConstellation::make(64);
        if (c_zfdpc > 4.0)
            return QamConstellation::make(16);
        return QamConstellation::make(4);
    }

    double modulo(double x, double tau)
    {
        double r = x - tau * std::floor(x / tau + 0.5);
        // floor rounding can leave r == tau/2 for values just below it
        if (r >= 0.5 * tau)
            r -= tau;
        return r;
    }

    cplx modulo(cplx x, double tau)
    {
        return {modulo(x.real(), tau), modulo(x.imag(), tau)};
    }

    ThpOutput thp_precode(const TriangularFactorization &f, std::span<const cplx> data,
                          std::span<const QamConstellation> constellations)
    {
        const std::size_t k = f.size();
        if (data.size() != k || constellations.size() != k)
            throw StructuralError("thp_precode: one symbol and one constellation per stream required");

        ThpOutput out;
        out.transmit.resize(k);
        out.per_stream_power.resize(k);
        for (std::size_t i = 0; i < k; ++i)
        {
            const double lii = f.gain(i);
            if (!(lii > 0.0))
                throw NumericalError("thp_precode: zero diagonal gain on stream " + std::to_string(i), lii,
                                     static_cast<std::ptrdiff_t>(i));
            cplx v = data[i];
            for (std::size_t j = 0; j < i; ++j)
                v -= f.lower(i, j) / lii * out.transmit[j];
            out.transmit[i] = modulo(v, constellations[i].modulo_base);
            out.per_stream_power[i] = std::norm(out.transmit[i]);
            out.total_power += out.per_stream_power[i];
        }
        return out;
    }

    std::vector<cplx> thp_receive(const TriangularFactorization &f, std::span<const cplx> received,
                                  std::span<const QamConstellation> constellations)
    {
        const std::size_t k = f.size();
        if (received.size() != k || constellations.size() != k)
            throw StructuralError("thp_receive: size mismatch");
        std::vector<cplx> out(k);
        for (std::size_t i = 0; i < k; ++i)
            out[i] = modulo(received[i] / f.gain(i), constellations[i].modulo_base);
        return out;
    }

    std::vector<cplx> thp_loopback(const TriangularFactorization &f, const ThpOutput &output,
                                   std::span<const QamConstellation> constellations)
    {
        const std::size_t k = f.size();
        if (output.transmit.size() != k)
            throw StructuralError("thp_loopback: size mismatch");
        std::vector<cplx> y(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                y[i] += f.lower(i, j) * output.transmit[j];
        return thp_receive(f, y, constellations);
    }

    std::optional<std::size_t> first_mismatch(std::span<const cplx> data, std::span<const cplx> recovered,
                                              double tol)
    {
        if (data.size() != recovered.size())
            return std::min(data.size(), recovered.size());
        for (std::size_t i = 0; i < data.size(); ++i)
            if (std::abs(data[i] - recovered[i]) > tol)
                return i;
        return std::nullopt;
    }

    namespace
    {
        std::vector<cplx> random_symbols(std::span<const QamConstellation> constellations, Rng &rng)
        {
            std::vector<cplx> d(constellations.size());
            for (std::size_t i = 0; i < d.size(); ++i)
            {
                const auto &pts = constellations[i].points;
                std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
                d[i] = pts[pick(rng)];
            }
            return d;
        }
    }

    ThpPowerSample thp_drop_power(const ChannelMatrix &h, const NoiseModel &noise, ModulationMode mode,
                                  int fixed_order, std::size_t n_vectors, Rng &rng, double log_base)
    {
        if (n_vectors == 0)
            throw ParameterError("thp_drop_power: at least one data vector required");
        const auto f = lq_factor(h.gains);
        const auto capacity = zfdpc_rates(f, uniform_noise(h.rows(), noise), log_base);

        std::vector<QamConstellation> cons;
        cons.reserve(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            cons.push_back(mode == ModulationMode::adaptive ? select_modulation(capacity.rates[i])
                                                            : QamConstellation::make(fixed_order));

        double acc = 0.0;
        for (std::size_t n = 0; n < n_vectors; ++n)
        {
            const auto data = random_symbols(cons, rng);
            acc += thp_precode(f, data, cons).total_power;
        }
        return {acc / static_cast<double>(n_vectors), f.size()};
    }

    EmpiricalCdf thp_power_cdf(std::span<const ChannelMatrix> drops, const NoiseModel &noise, ModulationMode mode,
                               int fixed_order, std::size_t n_vectors, Rng &rng, double log_base)
    {
        if (drops.size() < 100)
            throw ParameterError("thp_power_cdf: at least 100 drops required");
        std::vector<double> samples;
        samples.reserve(drops.size());
        for (const auto &h : drops)
            samples.push_back(thp_drop_power(h, noise, mode, fixed_order, n_vectors, rng, log_base).total_power);
        return EmpiricalCdf(std::move(samples));
    }

    double thp_symbol_error_rate(const TriangularFactorization &f, std::span<const QamConstellation> constellations,
                                 double sigma_sq, std::size_t n_vectors, Rng &rng)
    {
        const std::size_t k = f.size();
        std::size_t errors = 0;
        std::vector<cplx> y(k);
        for (std::size_t n = 0; n < n_vectors; ++n)
        {
            const auto data = random_symbols(constellations, rng);
            const auto out = thp_precode(f, data, constellations);
            for (std::size_t i = 0; i < k; ++i)
            {
                y[i] = complex_gaussian(rng, sigma_sq);
                for (std::size_t j = 0; j <= i; ++j)
                    y[i] += f.lower(i, j) * out.transmit[j];
            }
            const auto rx = thp_receive(f, y, constellations);
            for (std::size_t i = 0; i < k; ++i)
                if (std::abs(constellations[i].nearest(rx[i]) - data[i]) > 1e-9)
                    ++errors;
        }
        return static_cast<double>(errors) / static_cast<double>(n_vectors * k);
    }
}
