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

// Independent reference implementations used only by the tests.

#ifndef CLOUDRADIO_TESTS_ORACLES_HPP
#define CLOUDRADIO_TESTS_ORACLES_HPP

#include "cloudradio/numerics.hpp"
#include "cloudradio/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle
{
    using cloudradio::CMatrix;
    using cloudradio::cplx;

    inline CMatrix random_matrix(std::size_t r, std::size_t c, cloudradio::Rng &rng)
    {
        CMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = cloudradio::complex_gaussian(rng);
        return m;
    }

    struct Lq
    {
        CMatrix l, q;
    };

    // Modified Gram-Schmidt on the rows: H = L Q, diag(L) > 0.
    inline Lq gram_schmidt_lq(const CMatrix &h)
    {
        const std::size_t n = h.rows();
        Lq out{CMatrix(n, n), CMatrix(n, n)};
        for (std::size_t i = 0; i < n; ++i)
        {
            std::vector<cplx> v(n);
            for (std::size_t k = 0; k < n; ++k)
                v[k] = h(i, k);
            for (std::size_t j = 0; j < i; ++j)
            {
                cplx proj = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    proj += v[k] * std::conj(out.q(j, k));
                out.l(i, j) = proj;
                for (std::size_t k = 0; k < n; ++k)
                    v[k] -= proj * out.q(j, k);
            }
            double norm = 0.0;
            for (auto x : v)
                norm += std::norm(x);
            norm = std::sqrt(norm);
            out.l(i, i) = norm;
            for (std::size_t k = 0; k < n; ++k)
                out.q(i, k) = v[k] / norm;
        }
        return out;
    }

    // |det| by Gaussian elimination with partial pivoting.
    inline double abs_det(CMatrix a)
    {
        const std::size_t n = a.rows();
        double det = 1.0;
        for (std::size_t c = 0; c < n; ++c)
        {
            std::size_t p = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (std::abs(a(r, c)) > std::abs(a(p, c)))
                    p = r;
            if (a(p, c) == cplx(0.0))
                return 0.0;
            if (p != c)
                for (std::size_t k = 0; k < n; ++k)
                    std::swap(a(p, k), a(c, k));
            det *= std::abs(a(c, c));
            for (std::size_t r = c + 1; r < n; ++r)
            {
                const cplx f = a(r, c) / a(c, c);
                for (std::size_t k = c; k < n; ++k)
                    a(r, k) -= f * a(c, k);
            }
        }
        return det;
    }

    // Largest element-wise deviation of A^dagger A from identity.
    inline double unitarity_error(const CMatrix &q)
    {
        const CMatrix g = q * q.adjoint();
        double e = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                e = std::max(e, std::abs(g(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
        return e;
    }
}

#endif
