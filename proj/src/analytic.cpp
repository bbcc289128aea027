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

#include "cloudradio/analytic.hpp"
#include "cloudradio/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <ostream>

namespace cloudradio
{
    namespace
    {
        using std::numbers::pi;

        // TIC has no interference integral, so any alpha > 0 is admissible there.
        void check_params(const CoverageParams &p, double min_alpha = 2.0)
        {
            if (!(p.lambda_b > 0.0))
                throw ParameterError("coverage: lambda_b must be positive");
            if (!(p.sigma_sq > 0.0))
                throw ParameterError("coverage: sigma_sq must be positive");
            if (!(p.mu > 0.0))
                throw ParameterError("coverage: mu must be positive");
            if (!(p.alpha > min_alpha))
                throw ParameterError(min_alpha == 2.0 ? "coverage: alpha must exceed 2"
                                                      : "coverage: alpha must be positive");
            if (!(p.log_base > 1.0))
                throw ParameterError("coverage: log base must exceed 1");
        }

        // exp(x^2) erfc(x), switching to the asymptotic series for large x.
        double scaled_erfc(double x)
        {
            if (x < 25.0)
                return std::exp(x * x) * std::erfc(x);
            const double x2 = x * x;
            return (1.0 - 0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2)) / (x * std::sqrt(pi));
        }

        // \int_r^inf kernel(v) dv where kernel(v) ~ tail_coeff v^(1-alpha), on a log grid.
        double radial_tail_integral(const std::function<double(double)> &kernel, double r, double truncation,
                                    double tail_coeff, double alpha, const QuadratureConfig &cfg)
        {
            double body = 0.0;
            if (truncation > r)
                body = integrate([&](double u)
                                 { const double v = std::exp(u); return v * kernel(v); },
                                 std::log(r), std::log(truncation), cfg);
            const double upper = std::max(truncation, r);
            return body + tail_coeff * std::pow(upper, 2.0 - alpha) / (alpha - 2.0);
        }

        double laplace_truncation(double r, double s, const CoverageParams &p, const QuadratureConfig &cfg)
        {
            // Beyond T the kernel equals its power-law bound to relative rel_tol.
            const double knee = std::pow(s / (p.mu * cfg.rel_tol), 1.0 / p.alpha);
            return std::max(r, knee);
        }
    }

    double threshold_gamma(double t, double log_base)
    {
        return std::pow(log_base, t) - 1.0;
    }

    double truncation_radius(double lambda_b, double cutoff)
    {
        return std::sqrt(-std::log(cutoff) / (pi * lambda_b));
    }

    double integrate(const std::function<double(double)> &f, double a, double b, const QuadratureConfig &cfg)
    {
        if (!(b > a))
            return 0.0;
        double error = 0.0;
        double l1 = 0.0;
        const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            f, a, b, cfg.max_depth, cfg.rel_tol, &error, &l1);
        if (!std::isfinite(value))
            throw NumericalError("quadrature produced a non-finite value");
        const double achieved = l1 > 0.0 ? error / l1 : 0.0;
        if (l1 > 0.0 && achieved > 100.0 * cfg.rel_tol && error > cfg.abs_tol)
            throw NumericalError("quadrature did not converge", achieved);
        return value;
    }

    double tau_tic_quadrature(const CoverageParams &p, double t, const QuadratureConfig &cfg)
    {
        check_params(p, 0.0);
        const double c = p.mu * threshold_gamma(t, p.log_base) * p.sigma_sq;
        const double lam = p.lambda_b;
        const double zmax = truncation_radius(lam, cfg.cutoff);
        return integrate([&](double z)
                         { return 2.0 * pi * lam * z * std::exp(-pi * lam * z * z - c * std::pow(z, p.alpha)); },
                         0.0, zmax, cfg);
    }

    std::optional<double> tau_tic_closed_form(const CoverageParams &p, double t)
    {
        check_params(p, 0.0);
        const double c = p.mu * threshold_gamma(t, p.log_base) * p.sigma_sq;
        const double b = pi * p.lambda_b;
        if (p.alpha == 2.0)
            return b / (b + c);
        if (p.alpha == 4.0)
        {
            if (c <= 0.0)
                return 1.0;
            // b \int_0^inf exp(-b u - c u^2) du
            const double x = b / (2.0 * std::sqrt(c));
            return b * std::sqrt(pi / (4.0 * c)) * scaled_erfc(x);
        }
        return std::nullopt;
    }

    double tau_tic(const CoverageParams &p, double t, const QuadratureConfig &cfg)
    {
        const double quad = tau_tic_quadrature(p, t, cfg);
        const auto closed = tau_tic_closed_form(p, t);
        if (!closed)
            return quad;
        if (std::abs(*closed - quad) > 1e-6)
            throw NumericalError("tau_tic: closed form and quadrature disagree", std::abs(*closed - quad));
        return *closed;
    }

    double laplace_interference(double exclusion_radius, double s, const CoverageParams &p,
                                const QuadratureConfig &cfg)
    {
        if (!(exclusion_radius > 0.0))
            throw ParameterError("laplace_interference: exclusion radius must be positive");
        if (!(p.lambda_b >= 0.0) || !(p.mu > 0.0) || !(p.alpha > 2.0))
            throw ParameterError("laplace_interference: invalid field parameters");
        if (s <= 0.0 || p.lambda_b == 0.0)
            return 1.0;
        const auto kernel = [&](double v)
        { return v * s / (s + p.mu * std::pow(v, p.alpha)); };
        const double trunc = laplace_truncation(exclusion_radius, s, p, cfg);
        const double integral = radial_tail_integral(kernel, exclusion_radius, trunc, s / p.mu, p.alpha, cfg);
        return std::exp(-2.0 * pi * p.lambda_b * integral);
    }

    double laplace_log_derivative(double exclusion_radius, double s, const CoverageParams &p,
                                  const QuadratureConfig &cfg)
    {
        if (!(exclusion_radius > 0.0))
            throw ParameterError("laplace_log_derivative: exclusion radius must be positive");
        if (p.lambda_b == 0.0)
            return 0.0;
        const auto kernel = [&](double v)
        {
            const double m = p.mu * std::pow(v, p.alpha);
            return v * m / ((s + m) * (s + m));
        };
        const double trunc = laplace_truncation(exclusion_radius, std::max(s, 0.0), p, cfg);
        const double integral = radial_tail_integral(kernel, exclusion_radius, trunc, 1.0 / p.mu, p.alpha, cfg);
        return -2.0 * pi * p.lambda_b * integral;
    }

    double laplace_ir(double z, double t, const CoverageParams &p, const QuadratureConfig &cfg)
    {
        if (!(z > 0.0))
            throw ParameterError("laplace_ir: z must be positive");
        const double s = p.mu * threshold_gamma(t, p.log_base) * std::pow(z, p.alpha);
        return laplace_interference(z, s, p, cfg);
    }

    double smf2_tail(double z1, double z2, double t, const CoverageParams &p, bool with_interference,
                     const QuadratureConfig &cfg)
    {
        if (!(z1 > 0.0) || !(z2 >= z1))
            throw ParameterError("smf2_tail: need 0 < z1 <= z2");
        const double gamma = threshold_gamma(t, p.log_base);
        if (gamma <= 0.0)
            return 1.0;
        // Exponential rates of the two received powers.
        const double a = p.mu * std::pow(z1, p.alpha);
        const double b = p.mu * std::pow(z2, p.alpha);
        const auto transform = [&](double s)
        {
            const double noise = std::exp(-s * p.sigma_sq);
            return with_interference ? noise * laplace_interference(z2, s, p, cfg) : noise;
        };

        if (z2 - z1 < 1e-6 * z1)
        {
            const double s = gamma * a;
            const double f = transform(s);
            double dlog = -p.sigma_sq;
            if (with_interference)
                dlog += laplace_log_derivative(z2, s, p, cfg);
            return f - s * f * dlog;
        }
        return (b * transform(gamma * a) - a * transform(gamma * b)) / (b - a);
    }

    double tau_smf2(const CoverageParams &p, double t, bool with_interference, const QuadratureConfig &cfg)
    {
        check_params(p);
        if (threshold_gamma(t, p.log_base) <= 0.0)
            return 1.0;
        const double lam = p.lambda_b;
        const double zmax = truncation_radius(lam, cfg.cutoff);
        const double c = 2.0 * pi * lam;
        // The outer weight is O(1), so inner values far below rel_tol cannot matter.
        QuadratureConfig inner_cfg = cfg;
        inner_cfg.abs_tol = std::max(cfg.abs_tol, 1e-6 * cfg.rel_tol);
        const auto inner = [&](double z1)
        {
            return integrate([&](double z2)
                             { return z2 * std::exp(-pi * lam * z2 * z2) *
                                      smf2_tail(z1, z2, t, p, with_interference, cfg); },
                             z1, zmax, inner_cfg);
        };
        return c * c * integrate([&](double z1)
                                 { return z1 * inner(z1); },
                                 0.0, zmax, cfg);
    }

    CoverageCurve coverage_curve(const std::function<double(double)> &tau, const std::vector<double> &thresholds,
                                 const CoverageParams &params)
    {
        CoverageCurve c;
        c.params = params;
        c.thresholds = thresholds;
        c.coverage.reserve(thresholds.size());
        for (double t : thresholds)
            c.coverage.push_back(tau(t));
        return c;
    }

    RateCdfCurve coverage_to_cdf(const CoverageCurve &curve)
    {
        RateCdfCurve out;
        out.thresholds = curve.thresholds;
        out.cdf.reserve(curve.coverage.size());
        for (double v : curve.coverage)
            out.cdf.push_back(1.0 - v);
        return out;
    }

    void write_csv(std::ostream &os, const CoverageCurve &curve)
    {
        os << "t,coverage\n";
        for (std::size_t i = 0; i < curve.thresholds.size(); ++i)
            os << curve.thresholds[i] << ',' << curve.coverage[i] << '\n';
    }
}
