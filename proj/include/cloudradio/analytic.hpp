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

#ifndef CLOUDRADIO_ANALYTIC_HPP
#define CLOUDRADIO_ANALYTIC_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace cloudradio
{
    struct QuadratureConfig
    {
        double rel_tol = 1e-6;
        // Radial integrals stop where exp(-pi lambda z^2) drops below this.
        double cutoff = 1e-12;
        unsigned max_depth = 18;
        // Error estimates below this absolute level are accepted regardless of rel_tol.
        double abs_tol = 0.0;
    };

    struct CoverageParams
    {
        double lambda_b = 0.3; // BS intensity, 1/km^2
        double sigma_sq = 0.1; // noise power
        double mu = 1.0;       // fade power is exponential with mean 1/mu
        double alpha = 4.0;    // path-loss exponent
        double log_base = 2.0; // rate units; e gives nats
    };

    // SINR threshold for rate t: base^t - 1.
    double threshold_gamma(double t, double log_base);

    // Radius beyond which exp(-pi lambda z^2) < cutoff.
    double truncation_radius(double lambda_b, double cutoff);

    /**
     * Adaptive 15-point Gauss-Kronrod integral of f over [a, b].
     * Throws NumericalError (carrying the achieved relative error) if the
     * error estimate stays above 100 * rel_tol of the integral's L1 norm.
     */
    double integrate(const std::function<double(double)> &f, double a, double b, const QuadratureConfig &cfg);

    /// Coverage under total interference cancellation, by quadrature of
    /// 2 pi lambda \int z exp(-pi lambda z^2 - mu gamma sigma^2 z^alpha) dz.
    double tau_tic_quadrature(const CoverageParams &p, double t, const QuadratureConfig &cfg = {});

    /// Closed forms exist for alpha = 2 (lambda pi / (lambda pi + mu gamma sigma^2))
    /// and alpha = 4 (an erfc expression); nullopt otherwise.
    std::optional<double> tau_tic_closed_form(const CoverageParams &p, double t);

    // Closed form when available, checked against quadrature to 1e-6;
    // quadrature otherwise.
    double tau_tic(const CoverageParams &p, double t, const QuadratureConfig &cfg = {});

    /**
     * E[exp(-s I)] for the interference I from a PPP of intensity lambda
     * outside a disc of radius exclusion_radius, Rayleigh fades of mean 1/mu:
     *   exp(-2 pi lambda \int_r^inf v s / (s + mu v^alpha) dv).
     * The integral is truncated where s / (mu v^alpha) < rel_tol and the
     * remainder replaced by its analytic bound s T^(2-alpha) / (mu (alpha-2)).
     */
    double laplace_interference(double exclusion_radius, double s, const CoverageParams &p,
                                const QuadratureConfig &cfg = {});

    // d/ds log L(s) for the same interference field.
    double laplace_log_derivative(double exclusion_radius, double s, const CoverageParams &p,
                                  const QuadratureConfig &cfg = {});

    // Laplace factor of a user at distance z from its serving BS, interferers
    // beyond z, evaluated at s = mu gamma(t) z^alpha.
    double laplace_ir(double z, double t, const CoverageParams &p, const QuadratureConfig &cfg = {});

    /**
     * P[g1 z1^-alpha + g2 z2^-alpha > gamma (sigma^2 + I)] for exponential
     * fades g1, g2 (the two-branch hyper-exponential tail), averaged over the
     * interference beyond z2 when with_interference is set. For
     * |z2 - z1| < 1e-6 z1 the removable singularity is replaced by its limit
     * F(s) - s F'(s), F(s) = exp(-s sigma^2) L(s).
     */
    double smf2_tail(double z1, double z2, double t, const CoverageParams &p, bool with_interference,
                     const QuadratureConfig &cfg = {});

    /// Coverage with matched-filter combining of the two nearest BSs: double
    /// integral over 0 < z1 < z2 of (2 pi lambda)^2 z1 z2 exp(-pi lambda z2^2) G.
    double tau_smf2(const CoverageParams &p, double t, bool with_interference, const QuadratureConfig &cfg = {});

    struct CoverageCurve
    {
        std::vector<double> thresholds; // rate t
        std::vector<double> coverage;   // tau(t)
        CoverageParams params;
    };

    struct RateCdfCurve
    {
        std::vector<double> thresholds;
        std::vector<double> cdf;
    };

    CoverageCurve coverage_curve(const std::function<double(double)> &tau, const std::vector<double> &thresholds,
                                 const CoverageParams &params);

    // CDF(t) = 1 - tau(t).
    RateCdfCurve coverage_to_cdf(const CoverageCurve &curve);

    // "t,coverage" rows.
    void write_csv(std::ostream &os, const CoverageCurve &curve);
}

#endif
