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

#include "cloudradio/numerics.hpp"
#include "cloudradio/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cloudradio
{
    CMatrix::CMatrix(std::size_t rows, std::size_t cols, cplx fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows)
        {
            if (row.size() != cols_)
                throw StructuralError("CMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    CMatrix CMatrix::identity(std::size_t n)
    {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    CMatrix CMatrix::adjoint() const
    {
        CMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    CMatrix CMatrix::transpose() const
    {
        CMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = (*this)(r, c);
        return out;
    }

    double CMatrix::frobenius_norm() const
    {
        double s = 0.0;
        for (const auto &v : data_)
            s += std::norm(v);
        return std::sqrt(s);
    }

    bool CMatrix::all_finite() const
    {
        return std::all_of(data_.begin(), data_.end(),
                           [](const cplx &v)
                           { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
    }

    CMatrix &CMatrix::operator*=(cplx s)
    {
        for (auto &v : data_)
            v *= s;
        return *this;
    }

    CMatrix &CMatrix::operator+=(const CMatrix &other)
    {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw StructuralError("CMatrix: size mismatch in +=");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += other.data_[i];
        return *this;
    }

    CMatrix &CMatrix::operator-=(const CMatrix &other)
    {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw StructuralError("CMatrix: size mismatch in -=");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= other.data_[i];
        return *this;
    }

    CMatrix operator*(const CMatrix &a, const CMatrix &b)
    {
        if (a.cols() != b.rows())
            throw StructuralError("CMatrix: size mismatch in product");
        CMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t p = 0; p < a.cols(); ++p)
            {
                const cplx aip = a(i, p);
                if (aip == cplx{})
                    continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out(i, j) += aip * b(p, j);
            }
        return out;
    }

    CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    double relative_error(const CMatrix &a, const CMatrix &b)
    {
        const double denom = std::max(b.frobenius_norm(), std::numeric_limits<double>::min());
        return (a - b).frobenius_norm() / denom;
    }

    bool TriangularFactorization::any_degenerate() const
    {
        return std::find(degenerate.begin(), degenerate.end(), true) != degenerate.end();
    }

    TriangularFactorization lq_factor(const CMatrix &h)
    {
        if (!h.square() || h.empty())
            throw StructuralError("lq_factor: expected a non-empty square matrix");
        if (!h.all_finite())
            throw ParameterError("lq_factor: non-finite channel entry");

        const std::size_t n = h.rows();
        CMatrix r = h.adjoint(); // reduced in place to upper-triangular Rt
        CMatrix q = CMatrix::identity(n);
        std::vector<cplx> v(n);

        for (std::size_t j = 0; j + 1 < n; ++j)
        {
            double xnorm_sq = 0.0;
            for (std::size_t i = j; i < n; ++i)
                xnorm_sq += std::norm(r(i, j));
            const double xnorm = std::sqrt(xnorm_sq);
            if (xnorm == 0.0)
                continue;

            const cplx x0 = r(j, j);
            const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx{1.0};
            const cplx alpha = -phase * xnorm;

            // v = x - alpha e1, normalised
            for (std::size_t i = 0; i < n; ++i)
                v[i] = i < j ? cplx{} : r(i, j);
            v[j] -= alpha;
            double vnorm_sq = 0.0;
            for (std::size_t i = j; i < n; ++i)
                vnorm_sq += std::norm(v[i]);
            if (vnorm_sq == 0.0)
                continue;
            const double vnorm = std::sqrt(vnorm_sq);
            for (std::size_t i = j; i < n; ++i)
                v[i] /= vnorm;

            // r <- (I - 2 v v^H) r
            for (std::size_t c = j; c < n; ++c)
            {
                cplx dot{};
                for (std::size_t i = j; i < n; ++i)
                    dot += std::conj(v[i]) * r(i, c);
                for (std::size_t i = j; i < n; ++i)
                    r(i, c) -= 2.0 * v[i] * dot;
            }
            // q <- q (I - 2 v v^H)
            for (std::size_t row = 0; row < n; ++row)
            {
                cplx dot{};
                for (std::size_t i = j; i < n; ++i)
                    dot += q(row, i) * v[i];
                for (std::size_t i = j; i < n; ++i)
                    q(row, i) -= 2.0 * dot * std::conj(v[i]);
            }
            for (std::size_t i = j + 1; i < n; ++i)
                r(i, j) = cplx{};
        }

        // Rotate phases so diag(Rt) >= 0: Rt <- D^* Rt, Qt <- Qt D.
        for (std::size_t i = 0; i < n; ++i)
        {
            const cplx d = r(i, i);
            const double mag = std::abs(d);
            const cplx phase = mag > 0.0 ? d / mag : cplx{1.0};
            if (phase == cplx{1.0})
            {
                r(i, i) = mag;
                continue;
            }
            for (std::size_t c = i; c < n; ++c)
                r(i, c) *= std::conj(phase);
            r(i, i) = mag;
            for (std::size_t row = 0; row < n; ++row)
                q(row, i) *= phase;
        }

        TriangularFactorization out;
        out.lower = r.adjoint();
        out.unitary = q.adjoint();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = i + 1; c < n; ++c)
                out.lower(i, c) = cplx{};

        const double scale = h.frobenius_norm();
        out.degenerate.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out.degenerate[i] = out.lower(i, i).real() < kDegenerateThreshold * scale;
        return out;
    }

    CMatrix hpd_inverse(const CMatrix &a)
    {
        if (!a.square() || a.empty())
            throw ParameterError("hpd_inverse: expected a non-empty square matrix");
        const std::size_t n = a.rows();
        const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (std::abs(a(i, j) - std::conj(a(j, i))) > 1e-12 * scale)
                    throw ParameterError("hpd_inverse: matrix is not Hermitian");

        // Cholesky: a = c c^H, c lower-triangular
        CMatrix c(n, n);
        for (std::size_t j = 0; j < n; ++j)
        {
            double d = a(j, j).real();
            for (std::size_t p = 0; p < j; ++p)
                d -= std::norm(c(j, p));
            if (!(d > 0.0))
                throw NumericalError("hpd_inverse: non-positive pivot at index " + std::to_string(j), d,
                                     static_cast<std::ptrdiff_t>(j));
            const double cjj = std::sqrt(d);
            c(j, j) = cjj;
            for (std::size_t i = j + 1; i < n; ++i)
            {
                cplx s = a(i, j);
                for (std::size_t p = 0; p < j; ++p)
                    s -= c(i, p) * std::conj(c(j, p));
                c(i, j) = s / cjj;
            }
        }

        // Solve c y = I (forward), then c^H x = y (backward), column by column.
        CMatrix x(n, n);
        std::vector<cplx> y(n);
        for (std::size_t col = 0; col < n; ++col)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                cplx s = i == col ? cplx{1.0} : cplx{};
                for (std::size_t p = 0; p < i; ++p)
                    s -= c(i, p) * y[p];
                y[i] = s / c(i, i);
            }
            for (std::size_t ii = n; ii-- > 0;)
            {
                cplx s = y[ii];
                for (std::size_t p = ii + 1; p < n; ++p)
                    s -= std::conj(c(p, ii)) * x(p, col);
                x(ii, col) = s / c(ii, ii).real();
            }
        }
        return x;
    }

    double triangular_abs_det(const CMatrix &l)
    {
        double d = 1.0;
        for (std::size_t i = 0; i < l.rows(); ++i)
            d *= std::abs(l(i, i));
        return d;
    }
}
