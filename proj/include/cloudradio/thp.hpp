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

#ifndef CLOUDRADIO_THP_HPP
#define CLOUDRADIO_THP_HPP

#include "cloudradio/channel.hpp"
#include "cloudradio/numerics.hpp"
#include "cloudradio/random.hpp"
#include "cloudradio/stats.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cloudradio
{
    /// Square M-QAM scaled to unit average energy, with the modulo base tau
    /// that makes the symmetric modulo transparent on the constellation.
    struct QamConstellation
    {
        int order = 4;
        std::vector<cplx> points;
        double grid_step = 0.0;   // distance between neighbouring points
        double modulo_base = 0.0; // tau = sqrt(M) * grid_step

        static QamConstellation make(int order);

        double max_coordinate() const { return 0.5 * (modulo_base - grid_step); }
        // Closest constellation point, ties broken by index.
        cplx nearest(cplx x) const;
    };

    // Adaptive rule on the ZF-DPC stream capacity: 64 above 7, 16 in (4, 7], 4 otherwise.
    QamConstellation select_modulation(double c_zfdpc);

    // Wraps real and imaginary parts into [-tau/2, tau/2).
    double modulo(double x, double tau);
    cplx modulo(cplx x, double tau);

    struct ThpOutput
    {
        std::vector<cplx> transmit; // u, before the unitary precoder Q^dagger
        std::vector<double> per_stream_power;
        double total_power = 0.0;
    };

    /**
     * Tomlinson-Harashima precoding on y = L u (+ noise):
     *   u_i = mod_tau_i( d_i - sum_{j<i} (l_ij / l_ii) u_j ).
     * The transmitted vector is Q^dagger u, which has the same power as u.
     * Throws NumericalError with the stream index if a diagonal gain is zero.
     */
    ThpOutput thp_precode(const TriangularFactorization &f, std::span<const cplx> data,
                          std::span<const QamConstellation> constellations);

    // Receiver side: mod_tau_i(y_i / l_ii) for a received vector y.
    std::vector<cplx> thp_receive(const TriangularFactorization &f, std::span<const cplx> received,
                                  std::span<const QamConstellation> constellations);

    // Noiseless loopback: y = L u, then thp_receive.
    std::vector<cplx> thp_loopback(const TriangularFactorization &f, const ThpOutput &output,
                                   std::span<const QamConstellation> constellations);

    // Index of the first stream whose recovered symbol differs from data by more than tol.
    std::optional<std::size_t> first_mismatch(std::span<const cplx> data, std::span<const cplx> recovered,
                                              double tol = 1e-9);

    enum class ModulationMode
    {
        fixed,
        adaptive
    };

    struct ThpPowerSample
    {
        double total_power = 0.0; // averaged over the data vectors of one drop
        std::size_t streams = 0;
    };

    // Average THP transmit power for one channel realization, over n_vectors
    // random data vectors. fixed_order is used when mode == fixed.
    ThpPowerSample thp_drop_power(const ChannelMatrix &h, const NoiseModel &noise, ModulationMode mode,
                                  int fixed_order, std::size_t n_vectors, Rng &rng, double log_base = 2.0);

    // CDF of total transmit power, one sample per channel (>= 100 channels).
    EmpiricalCdf thp_power_cdf(std::span<const ChannelMatrix> drops, const NoiseModel &noise, ModulationMode mode,
                               int fixed_order, std::size_t n_vectors, Rng &rng, double log_base = 2.0);

    // Symbol error rate over n_vectors transmissions through y = L u + n.
    double thp_symbol_error_rate(const TriangularFactorization &f, std::span<const QamConstellation> constellations,
                                 double sigma_sq, std::size_t n_vectors, Rng &rng);
}

#endif
