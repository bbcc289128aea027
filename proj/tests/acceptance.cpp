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

// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is
// non-zero if any selected criterion fails.

#include "cloudradio/analytic.hpp"
#include "cloudradio/config.hpp"
#include "cloudradio/harness.hpp"
#include "cloudradio/precoding.hpp"
#include "cloudradio/thp.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cloudradio;

namespace
{
    class Verdict
    {
    public:
        void range(const std::string &name, double value, double lo, double hi)
        {
            const bool ok = std::isfinite(value) && value >= lo && value <= hi;
            add(name + "=" + fmt(value) + " in [" + fmt(lo) + "," + fmt(hi) + "]", ok);
        }
        void around(const std::string &name, double value, double target, double tol)
        {
            range(name, value, target - tol, target + tol);
        }
        void relative(const std::string &name, double value, double target, double frac)
        {
            range(name, value, target * (1 - frac), target * (1 + frac));
        }
        void below(const std::string &name, double value, double limit)
        {
            add(name + "=" + fmt(value) + " < " + fmt(limit), std::isfinite(value) && value < limit);
        }
        void flag(const std::string &name, bool ok) { add(name, ok); }

        bool pass() const { return pass_; }
        std::string text() const { return text_; }

    private:
        static std::string fmt(double v)
        {
            std::ostringstream os;
            os.precision(4);
            os << v;
            return os.str();
        }
        void add(const std::string &s, bool ok)
        {
            if (!text_.empty())
                text_ += "; ";
            text_ += s + (ok ? " ok" : " FAIL");
            pass_ = pass_ && ok;
        }
        bool pass_ = true;
        std::string text_;
    };

    ExperimentConfig preset(const std::string &name)
    {
        auto c = find_preset(name)->config;
        c.write_files = false;
        return c;
    }

    const EmpiricalCdf &cdf(const ExperimentReport &r, const std::string &label)
    {
        const auto *s = r.find(label);
        if (!s || !s->cdf)
            throw std::runtime_error("missing series " + label);
        return *s->cdf;
    }

    ChannelMatrix random_channel(std::size_t k, Rng &rng)
    {
        std::uniform_real_distribution<double> z(0.2, 5.0);
        ChannelMatrix h;
        h.gains = oracle::random_matrix(k, k, rng);
        h.distances.resize(k * k);
        for (std::size_t i = 0; i < k * k; ++i)
        {
            h.distances[i] = z(rng);
            h.gains(i / k, i % k) *= std::pow(h.distances[i], -2.0);
        }
        return h;
    }

    Verdict conventional_baseline()
    {
        Verdict v;
        const auto r = run(preset("fig-conv-zf"));
        v.relative("conventional mean", cdf(r, "conventional").mean(), 1.63, 0.10);
        v.around("conventional cell-edge", cdf(r, "conventional").cell_edge(), 0.51, 0.10);
        return v;
    }

    Verdict zfdpc_values()
    {
        Verdict v;
        const auto r = run(preset("fig-noise"));
        v.relative("mean@10dB", cdf(r, "zfdpc_snr10").mean(), 4.93, 0.10);
        v.around("cell-edge@10dB", cdf(r, "zfdpc_snr10").cell_edge(), 0.97, 0.15);
        v.relative("mean@20dB", cdf(r, "zfdpc_snr20").mean(), 7.792, 0.10);
        v.relative("cell-edge@20dB", cdf(r, "zfdpc_snr20").cell_edge(), 3.46, 0.15);
        v.around("gain vs conventional %", *r.find("zfdpc_snr10")->gain_mean, 202.0, 25.0);
        return v;
    }

    Verdict monotone_in_snr()
    {
        Verdict v;
        const auto r = run(preset("fig-noise"));
        double prev = -1.0;
        bool ok = true;
        std::string means;
        for (const char *l : {"zfdpc_snr-6", "zfdpc_snr0", "zfdpc_snr10", "zfdpc_snr20"})
        {
            const double m = cdf(r, l).mean();
            ok = ok && m > prev;
            prev = m;
            std::ostringstream os;
            os.precision(4);
            os << m;
            means += (means.empty() ? "" : ",") + os.str();
        }
        v.flag("zfdpc means over -6,0,10,20 dB (" + means + ") strictly increasing", ok);
        return v;
    }

    Verdict mmse()
    {
        Verdict v;
        const auto r = run(preset("fig-uplink"));
        const double m = cdf(r, "mmse").mean();
        v.relative("mmse mean", m, 3.73, 0.10);
        v.around("mmse/zfdpc mean", m / cdf(r, "zfdpc").mean(), 0.75, 0.07);
        return v;
    }

    Verdict duality()
    {
        Verdict v;
        const auto r = run(preset("fig-uplink"));
        v.below("KS(uplink SIC, ZF-DPC)", ks_distance(cdf(r, "uplink_sic"), cdf(r, "zfdpc")), 0.05);

        Rng rng(2024);
        const auto noise = NoiseModel::from_snr_db(10.0);
        double det_gap = 0.0, sum_gap = 0.0;
        for (std::size_t k = 1; k <= 3; ++k)
            for (int trial = 0; trial < 1000; ++trial)
            {
                const auto h = random_channel(k, rng);
                const double det = oracle::abs_det(h.gains);
                const auto down = lq_factor(h.gains), up = lq_factor(h.gains.transpose());
                double pd = 1.0, pu = 1.0;
                for (std::size_t i = 0; i < k; ++i)
                {
                    pd *= down.gain(i);
                    pu *= up.gain(i);
                }
                det_gap = std::max({det_gap, std::abs(pd - det) / det, std::abs(pu - det) / det});
                const auto sd = zfdpc_rates(h, noise).rates, su = uplink_sic_rates(h, noise).rates;
                double a = 0.0, b = 0.0;
                for (std::size_t i = 0; i < k; ++i)
                {
                    a += sd[i];
                    b += su[i];
                }
                sum_gap = std::max(sum_gap, std::abs(a - b));
            }
        v.below("max rel |prod l_ii - |det H|| (H and H^T, k<=3)", det_gap, 1e-9);
        v.below("max |sum-rate(downlink) - sum-rate(uplink)| at 10 dB, k<=3", sum_gap, 1e-6);
        return v;
    }

    ExperimentConfig xval(const std::vector<std::string> &schemes)
    {
        auto c = preset("xval");
        c.schemes = schemes;
        return c;
    }

    Verdict tic_bound()
    {
        Verdict v;
        const auto x = crossvalidate(xval({"tic"}));
        v.below("sup gap MC vs tau_tic", x.find("tic")->sup_gap, 0.02);

        CoverageParams p;
        double gap = 0.0;
        for (double t = 0.0; t <= 14.0; t += 0.25)
            gap = std::max(gap, std::abs(tau_tic_quadrature(p, t) - *tau_tic_closed_form(p, t)));
        v.below("quadrature vs closed form", gap, 1e-6);

        auto c = preset("fig-bounds");
        c.schemes = {"zfdpc", "tic"};
        const auto r = run(c);
        const auto &tic = cdf(r, "tic");
        const auto &zf = cdf(r, "zfdpc");
        bool left = true;
        for (double q = 0.01; q <= 0.10001; q += 0.01)
            left = left && tic.quantile(q) <= zf.quantile(q);
        v.flag("TIC quantiles <= ZF-DPC quantiles for levels 1..10%", left);
        v.around("ZF-DPC vs TIC SNR shift at 5% (dB)", snr_shift_db(zf, tic, kCellEdgeLevel), 3.5, 1.5);
        return v;
    }

    Verdict smf_bound()
    {
        Verdict v;
        const auto x = crossvalidate(xval({"smf2", "smf2_interference"}));
        v.below("sup gap smf2 (no interference)", x.find("smf2")->sup_gap, 0.02);
        v.below("sup gap smf2 (with interference)", x.find("smf2_interference")->sup_gap, 0.03);

        auto c = preset("fig-bounds");
        c.schemes = {"zfdpc", "smf"};
        const auto r = run(c);
        v.around("SMF(full) vs ZF-DPC SNR shift at median (dB)", snr_shift_db(cdf(r, "smf"), cdf(r, "zfdpc"), 0.5),
                 0.7, 0.5);
        return v;
    }

    Verdict partial_csi()
    {
        Verdict v;
        const auto r = run(preset("fig-partial"));
        v.around("mean(l=6)/mean(full)", cdf(r, "zfdpc_partial_l6").mean() / cdf(r, "zfdpc").mean(), 0.81, 0.08);
        v.around("gain(l=2) vs conventional %", *r.find("zfdpc_partial_l2")->gain_mean, 48.0, 15.0);

        Rng rng(99);
        const auto noise = NoiseModel::from_snr_db(10.0);
        double gap = 0.0;
        for (int trial = 0; trial < 500; ++trial)
        {
            const auto h = random_channel(1 + trial % 30, rng);
            const auto full = zfdpc_rates(h, noise).rates;
            const auto part = zfdpc_partial_rates(h, take_partial_csi(h, h.k()), noise).rates;
            for (std::size_t i = 0; i < full.size(); ++i)
                gap = std::max(gap, std::abs(full[i] - part[i]));
        }
        v.below("max |rate(l=k) - rate(full)|", gap, 1e-9);
        return v;
    }

    Verdict clustering()
    {
        Verdict v;
        const auto r = run(preset("fig-cluster"));
        v.around("gain r=4 km %", *r.find("clustered_r4")->gain_mean, 92.0, 20.0);
        v.around("gain r=10 km %", *r.find("clustered_r10")->gain_mean, 193.0, 25.0);
        v.relative("in-cluster BSs r=4 km", r.mean_cluster_size.at(4.0), 15.0, 0.10);
        v.relative("in-cluster BSs r=8 km", r.mean_cluster_size.at(8.0), 60.0, 0.10);
        return v;
    }

    Verdict saturation()
    {
        Verdict v;
        auto c = preset("fig-8-final");
        const auto r = run(c);
        const auto *s = r.find_saturation("clustered_r8_l6");
        v.flag("mean saturates", s && s->mean.saturated);
        v.range("saturation SNR (dB)", s && s->mean.saturated ? s->mean.snr_db : NAN, 25.0, 35.0);
        v.around("plateau mean", s && s->mean.saturated ? s->mean.plateau : NAN, 5.01, 0.5);
        v.around("plateau cell-edge", s && s->cell_edge.saturated ? s->cell_edge.plateau : NAN, 1.28, 0.3);
        return v;
    }

    Verdict thp()
    {
        Verdict v;
        Rng rng(7);
        std::size_t mismatches = 0, outside = 0, trials = 0;
        for (int t = 0; t < 10000; ++t)
        {
            const std::size_t k = 1 + static_cast<std::size_t>(t % 8);
            const auto f = lq_factor(random_channel(k, rng).gains);
            std::vector<QamConstellation> cons;
            std::vector<cplx> data;
            for (std::size_t i = 0; i < k; ++i)
            {
                cons.push_back(QamConstellation::make(4 << (2 * (t % 3))));
                data.push_back(cons.back().points[std::uniform_int_distribution<std::size_t>(
                    0, cons.back().points.size() - 1)(rng)]);
            }
            const auto out = thp_precode(f, data, cons);
            for (std::size_t i = 0; i < k; ++i)
            {
                const double half = cons[i].modulo_base / 2;
                outside += std::abs(out.transmit[i].real()) > half || std::abs(out.transmit[i].imag()) > half;
            }
            mismatches += first_mismatch(data, thp_loopback(f, out, cons)).has_value();
            ++trials;
        }
        v.flag("noiseless loopback exact over " + std::to_string(trials) + " trials (" +
                   std::to_string(mismatches) + " failures)",
               mismatches == 0);
        v.flag("precoded symbols inside modulo region (" + std::to_string(outside) + " outside)", outside == 0);

        auto c = preset("fig-tx-pow");
        c.schemes = {"thp_fixed4", "thp_adaptive"};
        const auto r = run(c);
        const auto &fixed = cdf(r, "thp_fixed4");
        const auto &adaptive = cdf(r, "thp_adaptive");
        bool dominates = true;
        for (int q = 1; q <= 99; ++q)
            dominates = dominates && fixed.quantile(q / 100.0) >= adaptive.quantile(q / 100.0);
        v.flag("fixed M=4 power quantiles >= adaptive at every percentile", dominates);
        v.range("adaptive median of total power / k", r.find("thp_adaptive")->normalized->median(), 0.75, 1.25);
        return v;
    }

    Verdict numerics()
    {
        Verdict v;
        Rng rng(12);
        double recon = 0.0, unit = 0.0, det = 0.0, gs = 0.0;
        for (int t = 0; t < 10000; ++t)
        {
            const std::size_t n = 1 + static_cast<std::size_t>(t % 30);
            const auto h = oracle::random_matrix(n, n, rng);
            const auto f = lq_factor(h);
            recon = std::max(recon, relative_error(f.lower * f.unitary, h));
            unit = std::max(unit, oracle::unitarity_error(f.unitary));
            const double d = oracle::abs_det(h);
            det = std::max(det, std::abs(triangular_abs_det(f.lower) - d) / d);
        }
        for (int t = 0; t < 1000; ++t)
        {
            const auto h = oracle::random_matrix(4, 4, rng);
            const auto f = lq_factor(h);
            const auto o = oracle::gram_schmidt_lq(h);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    gs = std::max({gs, std::abs(f.lower(i, j) - o.l(i, j)), std::abs(f.unitary(i, j) - o.q(i, j))});
        }
        v.range("max reconstruction error", recon, 0.0, 1e-10);
        v.range("max unitarity error", unit, 0.0, 1e-10);
        v.range("max relative |det| error", det, 0.0, 1e-8);
        v.range("max Gram-Schmidt deviation (4x4)", gs, 0.0, 1e-8);
        return v;
    }

    Verdict reproducibility()
    {
        namespace fs = std::filesystem;
        Verdict v;
        auto c = preset("fig-partial");
        c.preset = "repro";
        c.drops = 100;
        c.write_files = true;
        const auto base = fs::temp_directory_path() / "cloudradio_acceptance_repro";
        fs::remove_all(base);
        std::vector<fs::path> dirs;
        for (std::size_t w : {1u, 1u, 4u})
        {
            c.workers = w;
            c.output_dir = (base / std::to_string(dirs.size())).string();
            run(c);
            dirs.push_back(fs::path(c.output_dir) / "repro");
        }
        const auto slurp = [](const fs::path &p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        std::size_t files = 0, same = 0;
        for (const auto &e : fs::directory_iterator(dirs[0]))
        {
            if (e.path().extension() != ".csv")
                continue;
            ++files;
            const auto ref = slurp(e.path());
            same += !ref.empty() && ref == slurp(dirs[1] / e.path().filename()) &&
                    ref == slurp(dirs[2] / e.path().filename());
        }
        fs::remove_all(base);
        v.flag("CSV files identical across reruns and 1 vs 4 workers (" + std::to_string(same) + "/" +
                   std::to_string(files) + ")",
               files > 0 && same == files);
        return v;
    }

    struct Criterion
    {
        const char *title;
        std::function<Verdict()> fn;
    };
}

int main(int argc, char **argv)
{
    CLI::App app{"cloudradio acceptance suite"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criterion number(s), 1-13; default all")->check(CLI::Range(1, 13));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all{
        {"conventional baseline", conventional_baseline},
        {"ZF-DPC rate statistics", zfdpc_values},
        {"ZF-DPC mean monotone in SNR", monotone_in_snr},
        {"MMSE", mmse},
        {"uplink/downlink duality", duality},
        {"TIC bound", tic_bound},
        {"SMF bound", smf_bound},
        {"partial CSI", partial_csi},
        {"geographic clustering", clustering},
        {"SNR saturation", saturation},
        {"THP properties", thp},
        {"triangular factorization numerics", numerics},
        {"reproducibility", reproducibility},
    };
    if (selected.empty())
        for (int i = 1; i <= 13; ++i)
            selected.push_back(i);

    bool ok = true;
    for (int n : selected)
    {
        const auto &c = all[static_cast<std::size_t>(n - 1)];
        bool pass = false;
        std::string text;
        try
        {
            const auto v = c.fn();
            pass = v.pass();
            text = v.text();
        }
        catch (const std::exception &e)
        {
            text = std::string("error: ") + e.what();
        }
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << " (" << c.title << "): " << text << std::endl;
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
