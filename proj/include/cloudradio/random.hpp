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

#ifndef CLOUDRADIO_RANDOM_HPP
#define CLOUDRADIO_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace cloudradio
{
    using Rng = std::mt19937_64;

    /// Independent generator for one drop, derived from the base seed and the
    /// drop index only, so results do not depend on which worker runs the drop.
    inline Rng substream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                          static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
        return Rng(seq);
    }

    /// Circularly-symmetric complex Gaussian with E|h|^2 = power.
    inline std::complex<double> complex_gaussian(Rng &rng, double power = 1.0)
    {
        std::normal_distribution<double> n(0.0, std::sqrt(0.5 * power));
        const double re = n(rng);
        const double im = n(rng);
        return {re, im};
    }
}

#endif
