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

#ifndef CLOUDRADIO_NUMERICS_HPP
#define CLOUDRADIO_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cloudradio
{
    using cplx = std::complex<double>;

    // Dense row-major complex matrix. Sizes in this project are tens to a
    // few hundred, so no blocking or expression templates.
    class CMatrix
    {
    public:
        CMatrix() = default;
        CMatrix(std::size_t rows, std::size_t cols, cplx fill = {});
        CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

        static CMatrix identity(std::size_t n);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool square() const { return rows_ == cols_; }
        bool empty() const { return data_.empty(); }

        cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        const std::vector<cplx> &data() const { return data_; }

        CMatrix adjoint() const;
        CMatrix transpose() const;
        double frobenius_norm() const;
        bool all_finite() const;

        CMatrix &operator*=(cplx s);
        CMatrix &operator+=(const CMatrix &other);
        CMatrix &operator-=(const CMatrix &other);

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cplx> data_;
    };

    CMatrix operator*(const CMatrix &a, const CMatrix &b);
    CMatrix operator+(CMatrix a, const CMatrix &b);
    CMatrix operator-(CMatrix a, const CMatrix &b);
    CMatrix operator*(cplx s, CMatrix a);

    // Relative Frobenius distance ||a - b|| / max(||b||, tiny).
    double relative_error(const CMatrix &a, const CMatrix &b);

    /// H = L * Q with L lower-triangular (real, non-negative diagonal) and Q unitary.
    struct TriangularFactorization
    {
        CMatrix lower;
        CMatrix unitary;
        // degenerate[i]: |l_ii| fell below the rank threshold.
        std::vector<bool> degenerate;

        std::size_t size() const { return lower.rows(); }
        double gain(std::size_t i) const { return lower(i, i).real(); }
        bool any_degenerate() const;
    };

    // Relative threshold on |l_ii| / ||H||_F below which a stream is degenerate.
    inline constexpr double kDegenerateThreshold = 1e-12;

    /**
     * Householder LQ factorization of a square complex matrix.
     *
     * Runs Householder QR on H^dagger = Qt * Rt, then H = Rt^dagger * Qt^dagger.
     * Row/column phases are rotated so that diag(L) is real and non-negative,
     * which makes the factorization unique for full-rank H. Entries above the
     * diagonal of L are exactly zero.
     */
    TriangularFactorization lq_factor(const CMatrix &h);

    /**
     * Inverse of a Hermitian positive-definite matrix via Cholesky A = C C^dagger
     * and two triangular solves.
     *
     * Throws ParameterError if A is not square or not Hermitian (relative 1e-12),
     * NumericalError carrying the pivot index if a pivot is not positive.
     */
    CMatrix hpd_inverse(const CMatrix &a);

    // |det| of a lower-triangular matrix.
    double triangular_abs_det(const CMatrix &l);
}

#endif
