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

#include "cloudradio/harness.hpp"

#include "cloudradio/analytic.hpp"
#include "cloudradio/channel.hpp"
#include "cloudradio/errors.hpp"
#include "cloudradio/geometry.hpp"
#include "cloudradio/precoding.hpp"
#include "cloudradio/random.hpp"
#include "cloudradio/thp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

namespace cloudradio
{
    namespace
    {
        constexpr std::uint64_t kSaltDrop = 0;
        constexpr std::uint64_t kSaltTagged = 2;
        constexpr std::uint64_t kSaltCluster = 100;
        constexpr std::uint64_t kSaltThp = 1000;

        enum class Kind
        {
            conventional,
            zfdpc,
            uplink_sic,
            mmse,
            tic,
            smf,
            smf_partial,
            zfdpc_partial,
            clustered,
            thp
        };

        struct SeriesPlan
        {
            std::string base_label;
            std::string label;
            Kind kind = Kind::zfdpc;
            std::size_t snr_index = 0;
            std::size_t l = 0;
            std::size_t radius_index = 0;
            ModulationMode thp_mode = ModulationMode::fixed;
            int thp_order = 4;
        };

        std::vector<SeriesPlan> plan_series(const ExperimentConfig &c)
        {
            std::vector<SeriesPlan> base;
            auto add = [&](std::string label, Kind k) {
                SeriesPlan s;
                s.base_label = std::move(label);
                s.kind = k;
                base.push_back(s);
                return &base.back();
            };
            for (const auto &name : c.schemes)
            {
                if (name == "conventional")
                    add(name, Kind::conventional);
                else if (name == "zfdpc")
                    add(name, Kind::zfdpc);
                else if (name == "uplink_sic")
                    add(name, Kind::uplink_sic);
                else if (name == "mmse")
                    add(name, Kind::mmse);
                else if (name == "tic")
                    add(name, Kind::tic);
                else if (name == "smf")
                    add(name, Kind::smf);
                else if (name == "smf_partial")
                    for (auto l : c.csi_l)
                        add("smf_l" + std::to_string(l), Kind::smf_partial)->l = l;
                else if (name == "zfdpc_partial")
                    for (auto l : c.csi_l)
                        add("zfdpc_partial_l" + std::to_string(l), Kind::zfdpc_partial)->l = l;
                else if (name == "clustered")
                    for (std::size_t r = 0; r < c.cluster_radius_km.size(); ++r)
                    {
                        const auto rl = "clustered_r" + format_number(c.cluster_radius_km[r]);
                        add(rl, Kind::clustered)->radius_index = r;
                        for (auto l : c.csi_l)
                        {
                            auto *s = add(rl + "_l" + std::to_string(l), Kind::clustered);
                            s->radius_index = r;
                            s->l = l;
                        }
                    }
                else if (name == "thp_adaptive")
                    add(name, Kind::thp)->thp_mode = ModulationMode::adaptive;
                else if (name.rfind("thp_fixed", 0) == 0)
                    add(name, Kind::thp)->thp_order = std::stoi(name.substr(9));
                else
                    throw ConfigError("schemes", "unknown scheme '" + name + "'");
            }

            std::vector<SeriesPlan> out;
            for (std::size_t si = 0; si < c.snr_db.size(); ++si)
                for (auto s : base)
                {
                    s.snr_index = si;
                    s.label = s.base_label;
                    if (c.snr_db.size() > 1)
                        s.label += "_" + snr_suffix(c.snr_db[si]);
                    out.push_back(std::move(s));
                }
            return out;
        }

        template <class F> void parallel_for(std::size_t n, std::size_t workers, F &&body)
        {
            workers = std::max<std::size_t>(1, std::min(workers, n));
            if (workers == 1)
            {
                for (std::size_t i = 0; i < n; ++i)
                    body(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto loop = [&] {
                for (;;)
                {
                    const auto i = next.fetch_add(1);
                    if (i >= n)
                        return;
                    try
                    {
                        body(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next.store(n);
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back(loop);
            for (auto &t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        struct DropResult
        {
            bool empty = false;
            bool distance_dominant = false;
            bool magnitude_dominant = false;
            std::vector<std::vector<double>> values; // per series
            std::vector<std::size_t> streams;        // per series, THP only
            std::vector<std::size_t> cluster_size;   // per radius
        };

        struct ClusterData
        {
            ChannelMatrix h;
            std::vector<double> interference;
            std::size_t size = 0;
        };

        ClusterData make_cluster(const ExperimentConfig &c, const PointSet &bs, const PointSet &ue,
                                 const Association &assoc, const Cohort &cohort, const ChannelMatrix &h,
                                 double radius, Rng &rng)
        {
            const Point center = Region(c.region_width_km, c.region_height_km).center();
            std::size_t tagged = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < cohort.pairs.size(); ++i)
            {
                const double d = distance(ue.points[cohort.pairs[i].ue], center);
                if (d < best)
                {
                    best = d;
                    tagged = i;
                }
            }
            const auto split = split_cluster(bs, ue.points[cohort.pairs[tagged].ue], radius);
            std::vector<bool> inside(bs.points.size(), false);
            for (auto b : split.in_cluster)
                inside[b] = true;

            std::vector<std::size_t> idx, ue_idx;
            for (std::size_t i = 0; i < cohort.pairs.size(); ++i)
                if (inside[cohort.pairs[i].bs])
                {
                    idx.push_back(i);
                    ue_idx.push_back(cohort.pairs[i].ue);
                }
            ClusterData out;
            out.size = split.in_cluster.size();
            out.h = submatrix(h, idx, idx);
            out.interference = inter_cluster_interference(split, ue_idx, assoc, c.path_loss(), rng);
            return out;
        }

        DropResult simulate_drop(const ExperimentConfig &c, const std::vector<SeriesPlan> &plan, std::size_t d)
        {
            DropResult out;
            out.values.resize(plan.size());
            out.streams.assign(plan.size(), 0);
            out.cluster_size.assign(c.cluster_radius_km.size(), 0);

            const Region region(c.region_width_km, c.region_height_km);
            Rng rng = substream(c.seed, d, kSaltDrop);
            const auto bs = sample_ppp(c.lambda_b, region, rng);
            const auto ue = sample_ppp(c.ue_intensity(), region, rng);
            if (bs.points.empty() || ue.points.empty())
            {
                out.empty = true;
                return out;
            }
            const auto assoc = associate(bs, ue);
            const auto cohort = select_cohort(assoc, rng);
            const auto h = build_channel(cohort, assoc, c.path_loss(), rng);
            out.distance_dominant = distance_dominant(h);
            out.magnitude_dominant = magnitude_dominant(h);

            std::vector<std::optional<ClusterData>> clusters(c.cluster_radius_km.size());
            auto cluster = [&](std::size_t r) -> const ClusterData & {
                if (!clusters[r])
                {
                    Rng crng = substream(c.seed, d, kSaltCluster);
                    clusters[r] = make_cluster(c, bs, ue, assoc, cohort, h, c.cluster_radius_km[r], crng);
                    out.cluster_size[r] = clusters[r]->size;
                }
                return *clusters[r];
            };
            for (std::size_t r = 0; r < clusters.size(); ++r)
                cluster(r);

            const std::size_t k = h.k();
            for (std::size_t s = 0; s < plan.size(); ++s)
            {
                const auto &entry = plan[s];
                const auto noise = NoiseModel::from_snr_db(c.snr_db[entry.snr_index]);
                const double base = c.log_base;
                switch (entry.kind)
                {
                case Kind::conventional: out.values[s] = conventional_rates(h, noise, base).rates; break;
                case Kind::zfdpc: out.values[s] = zfdpc_rates(h, noise, base).rates; break;
                case Kind::uplink_sic: out.values[s] = uplink_sic_rates(h, noise, base).rates; break;
                case Kind::mmse: out.values[s] = mmse_rates(h, noise, base).rates; break;
                case Kind::tic: out.values[s] = tic_rate(h, noise, base).rates; break;
                case Kind::smf: out.values[s] = smf_rate(h, noise, k, c.csi_selection, base).rates; break;
                case Kind::smf_partial:
                    out.values[s] = smf_rate(h, noise, std::min(entry.l, k), c.csi_selection, base).rates;
                    break;
                case Kind::zfdpc_partial:
                {
                    const auto csi = take_partial_csi(h, std::min(entry.l, k), c.csi_selection);
                    out.values[s] = zfdpc_partial_rates(h, csi, noise, base).rates;
                    break;
                }
                case Kind::clustered:
                {
                    const auto &cd = cluster(entry.radius_index);
                    if (cd.h.k() == 0)
                        break;
                    std::optional<std::size_t> l;
                    if (entry.l > 0)
                        l = std::min(entry.l, cd.h.k());
                    out.values[s] = clustered_rates(cd.h, cd.interference, noise, l, base).rates;
                    break;
                }
                case Kind::thp:
                {
                    Rng trng = substream(c.seed, d, kSaltThp + s);
                    const auto p = thp_drop_power(h, noise, entry.thp_mode, entry.thp_order, c.thp_vectors, trng, base);
                    out.values[s] = {p.total_power};
                    out.streams[s] = p.streams;
                    break;
                }
                }
            }
            return out;
        }

        double seconds_since(std::chrono::steady_clock::time_point t0)
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }

        std::filesystem::path output_path(const ExperimentConfig &c)
        {
            return std::filesystem::path(c.output_dir) / c.preset;
        }

        std::ofstream open_csv(const std::filesystem::path &p)
        {
            std::ofstream os(p, std::ios::binary);
            if (!os)
                throw std::runtime_error("cannot write " + p.string());
            return os;
        }

        bool in_range(double v, const Expectation &e, double &lo, double &hi)
        {
            const double tol = e.relative ? e.tolerance * std::abs(e.target) : e.tolerance;
            lo = e.target - tol;
            hi = e.target + tol;
            return std::isfinite(v) && v >= lo && v <= hi;
        }

        std::string kind_name(CheckKind k)
        {
            switch (k)
            {
            case CheckKind::mean: return "mean";
            case CheckKind::cell_edge: return "cell_edge";
            case CheckKind::gain_mean: return "gain_mean_percent";
            case CheckKind::mean_ratio: return "mean_ratio";
            case CheckKind::plateau_mean: return "plateau_mean";
            case CheckKind::plateau_cell_edge: return "plateau_cell_edge";
            case CheckKind::saturation_snr: return "saturation_snr_db";
            case CheckKind::sup_gap: return "sup_gap";
            }
            return "?";
        }
    }

    std::string snr_suffix(double snr_db) { return "snr" + format_number(snr_db); }

    const SeriesSummary *ExperimentReport::find(const std::string &label) const
    {
        for (const auto &s : series)
            if (s.label == label)
                return &s;
        return nullptr;
    }

    const SaturationSummary *ExperimentReport::find_saturation(const std::string &base_label) const
    {
        for (const auto &s : saturation)
            if (s.base_label == base_label)
                return &s;
        return nullptr;
    }

    nlohmann::json ExperimentReport::to_json() const
    {
        using nlohmann::json;
        json j;
        j["config"] = config_echo;
        j["drops"] = config.drops;
        j["empty_drops"] = empty_drops;
        json series_json = json::array();
        for (const auto &s : series)
        {
            json e;
            if (s.cdf)
                e = summary_json(s.label, *s.cdf);
            else
                e = {{"scheme", s.label}, {"n", 0}};
            e["snr_db"] = s.snr_db;
            e["quantity"] = s.is_power ? "total_power" : "rate";
            if (s.normalized)
            {
                e["per_stream_power_mean"] = s.normalized->mean();
                e["per_stream_power_median"] = s.normalized->median();
            }
            if (s.gain_mean)
                e["gain_mean_percent"] = *s.gain_mean;
            if (s.gain_cell_edge)
                e["gain_cell_edge_percent"] = *s.gain_cell_edge;
            series_json.push_back(std::move(e));
        }
        j["series"] = std::move(series_json);
        json sat = json::array();
        for (const auto &s : saturation)
            sat.push_back({{"series", s.base_label},
                           {"mean", {{"saturated", s.mean.saturated}, {"snr_db", s.mean.snr_db}, {"plateau", s.mean.plateau}}},
                           {"cell_edge",
                            {{"saturated", s.cell_edge.saturated},
                             {"snr_db", s.cell_edge.snr_db},
                             {"plateau", s.cell_edge.plateau}}}});
        j["saturation"] = std::move(sat);
        json clusters = json::object();
        for (const auto &[r, n] : mean_cluster_size)
            clusters[format_number(r)] = n;
        j["mean_cluster_size"] = std::move(clusters);
        j["distance_dominance_rate"] = distance_dominance_rate;
        j["magnitude_dominance_rate"] = magnitude_dominance_rate;
        j["wall_clock_s"] = wall_clock_s;
        return j;
    }

    ExperimentReport run(const ExperimentConfig &config)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto check = validate(config, RunMode::run);
        if (!check.ok())
            throw ConfigError(check.errors.front().field, check.errors.front().message);

        const auto plan = plan_series(config);
        std::vector<DropResult> drops(config.drops);
        parallel_for(config.drops, config.workers,
                     [&](std::size_t d) { drops[d] = simulate_drop(config, plan, d); });

        ExperimentReport report;
        report.config = config;
        report.config_echo = to_kv(config);

        std::size_t valid = 0, dist_dom = 0, mag_dom = 0;
        std::vector<double> cluster_total(config.cluster_radius_km.size(), 0.0);
        for (const auto &d : drops)
        {
            if (d.empty)
            {
                ++report.empty_drops;
                continue;
            }
            ++valid;
            dist_dom += d.distance_dominant;
            mag_dom += d.magnitude_dominant;
            for (std::size_t r = 0; r < cluster_total.size(); ++r)
                cluster_total[r] += static_cast<double>(d.cluster_size[r]);
        }
        if (valid > 0)
        {
            report.distance_dominance_rate = static_cast<double>(dist_dom) / static_cast<double>(valid);
            report.magnitude_dominance_rate = static_cast<double>(mag_dom) / static_cast<double>(valid);
            for (std::size_t r = 0; r < cluster_total.size(); ++r)
                report.mean_cluster_size[config.cluster_radius_km[r]] = cluster_total[r] / static_cast<double>(valid);
        }

        const auto dir = output_path(config);
        if (config.write_files)
            std::filesystem::create_directories(dir);

        for (std::size_t s = 0; s < plan.size(); ++s)
        {
            const auto &entry = plan[s];
            SeriesSummary summary;
            summary.label = entry.label;
            summary.base_label = entry.base_label;
            summary.snr_db = config.snr_db[entry.snr_index];
            summary.is_power = entry.kind == Kind::thp;

            std::vector<double> samples, normalized;
            for (const auto &d : drops)
                for (double v : d.empty ? std::vector<double>{} : d.values[s])
                    samples.push_back(v);
            if (summary.is_power)
                for (const auto &d : drops)
                    if (!d.empty && d.streams[s] > 0)
                        normalized.push_back(d.values[s][0] / static_cast<double>(d.streams[s]));

            if (config.write_files)
            {
                auto os = open_csv(dir / (entry.label + ".csv"));
                if (summary.is_power)
                {
                    os << "drop_id,mode,total_power\n";
                    const std::string mode = entry.thp_mode == ModulationMode::adaptive
                                                 ? "adaptive"
                                                 : "fixed" + std::to_string(entry.thp_order);
                    for (std::size_t d = 0; d < drops.size(); ++d)
                        if (!drops[d].empty)
                            os << d << ',' << mode << ',' << format_number(drops[d].values[s][0]) << '\n';
                }
                else
                {
                    os << "drop_id,stream,rate\n";
                    for (std::size_t d = 0; d < drops.size(); ++d)
                        if (!drops[d].empty)
                            for (std::size_t i = 0; i < drops[d].values[s].size(); ++i)
                                os << d << ',' << i << ',' << format_number(drops[d].values[s][i]) << '\n';
                }
            }
            if (!samples.empty())
                summary.cdf.emplace(std::move(samples));
            if (!normalized.empty())
                summary.normalized.emplace(std::move(normalized));
            report.series.push_back(std::move(summary));
        }

        // Gains over the conventional network at the same SNR.
        for (auto &s : report.series)
        {
            if (s.is_power || !s.cdf || s.base_label == "conventional")
                continue;
            const auto conv_label =
                config.snr_db.size() > 1 ? "conventional_" + snr_suffix(s.snr_db) : std::string("conventional");
            const auto *conv = report.find(conv_label);
            if (!conv || !conv->cdf)
                continue;
            if (conv->cdf->mean() > 0.0)
                s.gain_mean = gain_percent(*s.cdf, *conv->cdf, Statistic::mean);
            if (conv->cdf->cell_edge() > 0.0)
                s.gain_cell_edge = gain_percent(*s.cdf, *conv->cdf, Statistic::cell_edge);
        }

        if (config.snr_db.size() >= 4)
        {
            std::vector<std::string> bases;
            for (const auto &entry : plan)
                if (entry.kind != Kind::thp && std::find(bases.begin(), bases.end(), entry.base_label) == bases.end())
                    bases.push_back(entry.base_label);
            for (const auto &b : bases)
            {
                std::vector<double> means, edges;
                for (const auto &s : report.series)
                    if (s.base_label == b && s.cdf)
                    {
                        means.push_back(s.cdf->mean());
                        edges.push_back(s.cdf->cell_edge());
                    }
                if (means.size() != config.snr_db.size())
                    continue;
                report.saturation.push_back(
                    {b, detect_saturation(config.snr_db, means), detect_saturation(config.snr_db, edges)});
            }
        }

        report.wall_clock_s = seconds_since(t0);
        if (config.write_files)
        {
            std::ofstream js(dir / "summary.json");
            js << report.to_json().dump(2) << '\n';
        }
        return report;
    }

    const CrossCheck *CrossvalidateReport::find(const std::string &label) const
    {
        for (const auto &c : checks)
            if (c.label == label)
                return &c;
        return nullptr;
    }

    nlohmann::json CrossvalidateReport::to_json() const
    {
        nlohmann::json j;
        j["config"] = config_echo;
        j["checks"] = nlohmann::json::array();
        for (const auto &c : checks)
            j["checks"].push_back({{"scheme", c.label},
                                   {"n", c.samples},
                                   {"sup_gap", c.sup_gap},
                                   {"median_snr_shift_db", c.snr_shift_db}});
        j["wall_clock_s"] = wall_clock_s;
        return j;
    }

    CrossvalidateReport crossvalidate(const ExperimentConfig &config)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto check = validate(config, RunMode::crossvalidate);
        if (!check.ok())
            throw ConfigError(check.errors.front().field, check.errors.front().message);

        const Region region(config.region_width_km, config.region_height_km);
        const Point center = region.center();
        const std::size_t n_snr = config.snr_db.size();
        const std::size_t n_schemes = config.schemes.size();

        // rates[drop][snr * n_schemes + scheme]; NaN marks a skipped drop.
        std::vector<std::vector<double>> rates(config.drops);
        parallel_for(config.drops, config.workers, [&](std::size_t d) {
            auto &out = rates[d];
            out.assign(n_snr * n_schemes, std::numeric_limits<double>::quiet_NaN());
            Rng rng = substream(config.seed, d, kSaltTagged);
            const auto bs = sample_ppp(config.lambda_b, region, rng);
            if (bs.points.size() < 2)
                return;
            std::vector<std::size_t> order(bs.points.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::vector<double> z(bs.points.size());
            for (std::size_t b = 0; b < z.size(); ++b)
                z[b] = distance(bs.points[b], center);
            std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return z[a] < z[b]; });

            ChannelMatrix row;
            row.path_loss = config.path_loss();
            row.gains = CMatrix(1, order.size());
            row.distances.resize(order.size());
            for (std::size_t c = 0; c < order.size(); ++c)
            {
                const double dist = std::max(z[order[c]], kMinDistanceKm);
                row.distances[c] = dist;
                row.gains(0, c) = complex_gaussian(rng, 1.0 / config.mu) * std::pow(dist, -config.alpha / 2.0);
            }
            const std::size_t two[] = {0, 1};
            const std::size_t zero[] = {0};
            const auto nearest_two = submatrix(row, zero, two);

            for (std::size_t si = 0; si < n_snr; ++si)
            {
                const auto noise = NoiseModel::from_snr_db(config.snr_db[si]);
                for (std::size_t k = 0; k < n_schemes; ++k)
                {
                    const auto &name = config.schemes[k];
                    double r = 0.0;
                    if (name == "tic")
                        r = tic_rate(row, noise, config.log_base).rates[0];
                    else if (name == "smf2")
                        r = smf_rate(nearest_two, noise, 2, CsiSelection::distance, config.log_base).rates[0];
                    else
                        r = smf_rate(row, noise, 2, CsiSelection::distance, config.log_base).rates[0];
                    out[si * n_schemes + k] = r;
                }
            }
        });

        CrossvalidateReport report;
        report.config = config;
        report.config_echo = to_kv(config);
        const auto dir = output_path(config);
        if (config.write_files)
            std::filesystem::create_directories(dir);

        for (std::size_t si = 0; si < n_snr; ++si)
            for (std::size_t k = 0; k < n_schemes; ++k)
            {
                const auto &name = config.schemes[k];
                CrossCheck cc;
                cc.label = n_snr > 1 ? name + "_" + snr_suffix(config.snr_db[si]) : name;
                std::vector<double> samples;
                for (const auto &r : rates)
                    if (!std::isnan(r[si * n_schemes + k]))
                        samples.push_back(r[si * n_schemes + k]);
                if (samples.empty())
                    throw NumericalError("crossvalidate: every drop had fewer than two base stations");
                EmpiricalCdf mc(samples);
                cc.samples = mc.size();

                CoverageParams p;
                p.lambda_b = config.lambda_b;
                p.sigma_sq = NoiseModel::from_snr_db(config.snr_db[si]).sigma_sq;
                p.mu = config.mu;
                p.alpha = config.alpha;
                p.log_base = config.log_base;

                std::function<double(double)> tau;
                if (name == "tic")
                    tau = [p](double t) { return tau_tic(p, t); };
                else
                {
                    const bool interf = name == "smf2_interference";
                    tau = [p, interf](double t) { return tau_smf2(p, t, interf); };
                }

                const double t_hi = mc.quantile(0.995);
                constexpr std::size_t kGrid = 60;
                for (std::size_t g = 0; g <= kGrid; ++g)
                    cc.thresholds.push_back(t_hi * static_cast<double>(g) / kGrid);
                const auto curve = coverage_curve(tau, cc.thresholds, p);
                const auto cdf = coverage_to_cdf(curve);
                cc.analytic_cdf = cdf.cdf;
                for (std::size_t g = 0; g < cc.thresholds.size(); ++g)
                {
                    cc.mc_cdf.push_back(mc.cdf(cc.thresholds[g]));
                    cc.sup_gap = std::max(cc.sup_gap, std::abs(cc.mc_cdf[g] - cc.analytic_cdf[g]));
                }

                // Analytic median by bisection on the monotone coverage.
                double lo = 0.0, hi = std::max(t_hi, mc.median() * 2.0);
                for (int it = 0; it < 60 && tau(hi) > 0.5; ++it)
                    hi *= 2.0;
                for (int it = 0; it < 50; ++it)
                {
                    const double mid = 0.5 * (lo + hi);
                    (tau(mid) > 0.5 ? lo : hi) = mid;
                    if (hi - lo < 1e-6 * std::max(1.0, hi))
                        break;
                }
                const double analytic_median = 0.5 * (lo + hi);
                const double num = std::pow(config.log_base, mc.median()) - 1.0;
                const double den = std::pow(config.log_base, analytic_median) - 1.0;
                cc.snr_shift_db = (num > 0 && den > 0) ? 10.0 * std::log10(num / den) : 0.0;

                if (config.write_files)
                {
                    auto os = open_csv(dir / (cc.label + "_curve.csv"));
                    os << "t,mc_cdf,analytic_cdf\n";
                    for (std::size_t g = 0; g < cc.thresholds.size(); ++g)
                        os << format_number(cc.thresholds[g]) << ',' << format_number(cc.mc_cdf[g]) << ','
                           << format_number(cc.analytic_cdf[g]) << '\n';
                    auto ac = open_csv(dir / (cc.label + "_analytic.csv"));
                    write_csv(ac, curve);
                }
                report.checks.push_back(std::move(cc));
            }

        report.wall_clock_s = seconds_since(t0);
        if (config.write_files)
        {
            std::ofstream js(dir / "summary.json");
            js << report.to_json().dump(2) << '\n';
        }
        return report;
    }

    std::vector<CheckResult> evaluate(const ExperimentReport &report, const std::vector<Expectation> &expectations)
    {
        std::vector<CheckResult> out;
        for (const auto &e : expectations)
        {
            CheckResult r;
            r.description = e.label + " " + kind_name(e.kind);
            double v = std::numeric_limits<double>::quiet_NaN();
            const auto *s = report.find(e.label);
            switch (e.kind)
            {
            case CheckKind::mean:
                if (s && s->cdf)
                    v = s->cdf->mean();
                break;
            case CheckKind::cell_edge:
                if (s && s->cdf)
                    v = s->cdf->cell_edge();
                break;
            case CheckKind::gain_mean:
                if (s && s->gain_mean)
                    v = *s->gain_mean;
                break;
            case CheckKind::mean_ratio:
            {
                const auto *o = report.find(e.other);
                r.description = e.label + "/" + e.other + " mean_ratio";
                if (s && s->cdf && o && o->cdf && o->cdf->mean() != 0.0)
                    v = s->cdf->mean() / o->cdf->mean();
                break;
            }
            case CheckKind::plateau_mean:
            case CheckKind::plateau_cell_edge:
            case CheckKind::saturation_snr:
                if (const auto *sat = report.find_saturation(e.label))
                {
                    const auto &which = e.kind == CheckKind::plateau_cell_edge ? sat->cell_edge : sat->mean;
                    if (which.saturated)
                        v = e.kind == CheckKind::saturation_snr ? which.snr_db : which.plateau;
                }
                break;
            case CheckKind::sup_gap: break;
            }
            r.value = v;
            r.pass = in_range(v, e, r.low, r.high);
            out.push_back(r);
        }
        return out;
    }

    std::vector<CheckResult> evaluate(const CrossvalidateReport &report, const std::vector<Expectation> &expectations)
    {
        std::vector<CheckResult> out;
        for (const auto &e : expectations)
        {
            CheckResult r;
            r.description = e.label + " " + kind_name(e.kind);
            double v = std::numeric_limits<double>::quiet_NaN();
            if (e.kind == CheckKind::sup_gap)
                if (const auto *c = report.find(e.label))
                    v = c->sup_gap;
            r.value = v;
            r.low = 0.0;
            r.high = e.target + e.tolerance;
            r.pass = std::isfinite(v) && v <= r.high;
            out.push_back(r);
        }
        return out;
    }
}
