// SPDX-License-Identifier: Apache-2.0
//
// chansim - stochastic channel models for massive MIMO and XL-MIMO
// Copyright (C) 2026 The chansim authors
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

#include "chansim/experiment.hpp"
#include "chansim/cbsm.hpp"
#include "chansim/gbsm.hpp"
#include "chansim/linalg.hpp"
#include "chansim/precoding.hpp"
#include "chansim/xlmimo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#ifndef CHANSIM_VERSION
#define CHANSIM_VERSION "unknown"
#endif

namespace chansim
{
    namespace
    {
        bool shadowed(model_kind m)
        {
            return m == model_kind::uncorrelated_shadowed || m == model_kind::exponential_shadowed ||
                   m == model_kind::gaussian_ula_shadowed;
        }

        bool random_correlation(const model_params &p)
        {
            if (p.model == model_kind::xlmimo)
                return true;
            if (p.aoa_max && *p.aoa_max > *p.aoa_min)
                return true;
            if (shadowed(p.model) && p.shadow_std_db > 0.0)
                return true;
            return p.model == model_kind::gaussian_ula_shadowed && p.scatterers_uniform &&
                   p.scatterer_max > p.scatterer_min;
        }

        bool uses_channels(metric_kind m)
        {
            return m == metric_kind::ergodic_capacity || m == metric_kind::sinr || m == metric_kind::corr_coeff;
        }

        double nominal(const model_params &p, double fixed, rng_engine &rng)
        {
            return p.aoa_max ? uniform(*p.aoa_min, *p.aoa_max, rng) : fixed;
        }

        // Per grid point state shared read-only by its trials
        struct point_cache
        {
            arma::cx_mat factor;                          // fixed R^(1/2) of a deterministic model
            std::optional<xlmimo::xl_scenario> scenario;  // frozen XL geometry
        };

        arma::cx_mat channels(const model_params &p, const point_cache *cache, rng_engine &rng,
                              warning_list *warnings)
        {
            if (p.model == model_kind::xlmimo)
            {
                if (cache && cache->scenario)
                    return xlmimo::assemble_channel_matrix(*cache->scenario, rng);
                const auto sc = xlmimo::build_scenario(p.xl, rng, warnings);
                return xlmimo::assemble_channel_matrix(sc, rng);
            }
            arma::cx_mat H(p.antennas, p.users);
            for (arma::uword k = 0; k < p.users; ++k)
            {
                if (cache && !cache->factor.is_empty())
                    H.col(k) = sample_correlated(cache->factor, rng);
                else
                    H.col(k) = sample_correlated(psd_sqrt(draw_correlation(p, rng, warnings)), rng);
            }
            return H;
        }

        std::vector<double> evaluate(const model_params &p, const point_cache *cache, rng_engine &rng,
                                     warning_list *warnings)
        {
            const double eta = metrics::db_to_linear(p.snr_db);
            switch (p.metric)
            {
            case metric_kind::capacity_ub:
                return {metrics::capacity_ub(draw_correlation(p, rng, warnings), eta, p.antennas)};
            case metric_kind::condition_number:
                return {condition_number(draw_correlation(p, rng, warnings))};
            case metric_kind::svd_spectrum:
                return arma::conv_to<std::vector<double>>::from(singular_values(draw_correlation(p, rng, warnings)));
            case metric_kind::ergodic_capacity:
                return {metrics::capacity_sample(channels(p, cache, rng, warnings), eta, p.antennas)};
            case metric_kind::sinr:
            {
                const arma::cx_mat H = channels(p, cache, rng, warnings);
                const arma::vec alloc = precoding::equal_power_allocation(H.n_cols, p.total_power);
                const arma::cx_mat W =
                    precoding::normalize_columns(precoding::make_precoder(H, p.precoder), alloc, p.power);
                const arma::vec gamma = metrics::sinr_per_user(H, W, p.total_power / eta);
                double acc = 0.0;
                for (const double g : gamma)
                    acc += metrics::linear_to_db(g);
                return {acc / static_cast<double>(gamma.n_elem)};
            }
            case metric_kind::corr_coeff:
            {
                const arma::cx_mat H = channels(p, cache, rng, warnings);
                double acc = 0.0;
                std::size_t pairs = 0;
                for (arma::uword i = 0; i < H.n_cols; ++i)
                    for (arma::uword j = i + 1; j < H.n_cols; ++j, ++pairs)
                        acc += metrics::correlation_coefficient(H.col(i), H.col(j));
                return {acc / static_cast<double>(pairs)};
            }
            case metric_kind::vr_stats:
            {
                arma::uvec mask;
                std::size_t bins;
                if (p.vr_length)
                {
                    mask = xlmimo::visibility_chain(*p.vr_length, p.xl.vr, rng);
                    bins = *p.vr_length + 1;
                }
                else
                {
                    mask = xlmimo::generate_vr(p.xl.array, p.xl.vr, rng).mask;
                    bins = p.antennas + 1;
                }
                std::vector<double> hist(bins, 0.0);
                hist[arma::accu(mask)] = 1.0;
                return hist;
            }
            case metric_kind::shadow_gain:
            {
                const arma::vec f = cbsm::draw_shadowing(p.antennas, p.shadow_std_db, rng);
                return {arma::mean(arma::exp10(f / 10.0))};
            }
            }
            throw invalid_param("unknown metric");
        }

        std::string format_number(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }

        std::string describe(const std::vector<std::pair<std::string, std::string>> &assignment)
        {
            std::string s;
            for (const auto &[k, v] : assignment)
                s += (s.empty() ? "" : ", ") + k + "=" + v;
            return s;
        }
    }

    arma::cx_mat draw_correlation(const model_params &p, rng_engine &rng, warning_list *warnings)
    {
        const arma::uword M = p.antennas;
        switch (p.model)
        {
        case model_kind::iid:
            return p.beta * arma::eye<arma::cx_mat>(M, M);
        case model_kind::exponential:
            return p.beta * cbsm::exponential_correlation({M, p.rho, 0.0, p.beta, 0.0});
        case model_kind::uncorrelated_shadowed:
            return cbsm::uncorrelated_with_shadowing(M, p.beta, cbsm::draw_shadowing(M, p.shadow_std_db, rng));
        case model_kind::exponential_shadowed:
        {
            const double theta = nominal(p, p.phase_aoa, rng);
            const arma::vec f = cbsm::draw_shadowing(M, p.shadow_std_db, rng);
            return cbsm::exponential_with_shadowing({M, p.rho, theta, p.beta, p.shadow_std_db}, f);
        }
        case model_kind::onering_ula:
        case model_kind::gaussian_ula:
        case model_kind::gaussian_ula_closed:
        case model_kind::gaussian_ula_shadowed:
        {
            gbsm::angular_spec ang = p.angles;
            ang.azimuth = nominal(p, p.angles.azimuth, rng);
            if (p.model == model_kind::onering_ula)
                return gbsm::onering_ula(p.ula, ang, p.quad, warnings);
            if (p.model == model_kind::gaussian_ula)
                return gbsm::gaussian_ula_numeric(p.ula, ang, p.quad, warnings);
            if (p.model == model_kind::gaussian_ula_closed)
                return gbsm::gaussian_ula_closed(p.ula, ang, warnings);
            const arma::vec f = cbsm::draw_shadowing(M, p.shadow_std_db, rng);
            const arma::vec phi = p.scatterers_uniform
                                      ? gbsm::draw_scatterer_angles(p.scatterers, p.scatterer_min, p.scatterer_max, rng)
                                      : arma::vec(p.scatterers, arma::fill::value(ang.azimuth));
            if (warnings && ang.sigma_azimuth > 15.0 * std::numbers::pi / 180.0 + 1e-12)
                warnings->push_back("gaussian_ula_shadowed: ASD above 15 degrees, small-angle approximation is inaccurate");
            return gbsm::gaussian_ula_shadowed(p.ula, ang, f, phi);
        }
        case model_kind::onering_upa:
        case model_kind::gaussian_upa:
        {
            gbsm::angular_spec ang = p.angles;
            ang.azimuth = nominal(p, p.angles.azimuth, rng);
            return p.model == model_kind::onering_upa ? gbsm::onering_upa(p.upa, ang, p.quad, warnings)
                                                      : gbsm::gaussian_upa(p.upa, ang, p.quad, warnings);
        }
        case model_kind::xlmimo:
            break;
        }
        throw invalid_param("the XL-MIMO model has no single correlation matrix");
    }

    arma::cx_mat draw_channels(const model_params &p, rng_engine &rng, warning_list *warnings)
    {
        return channels(p, nullptr, rng, warnings);
    }

    std::vector<double> evaluate_trial(const model_params &p, rng_engine &rng, warning_list *warnings)
    {
        return evaluate(p, nullptr, rng, warnings);
    }

    bool is_deterministic(const model_params &p)
    {
        const bool matrix_metric = p.metric == metric_kind::capacity_ub || p.metric == metric_kind::condition_number ||
                                   p.metric == metric_kind::svd_spectrum;
        return matrix_metric && !random_correlation(p);
    }

    run_result run_experiment(const experiment_config &cfg, const run_options &opt)
    {
        validate_config(cfg);

        // grid points: series combinations (first axis outermost), then sweep values
        struct grid_point
        {
            std::vector<std::size_t> series_idx;
            std::size_t sweep_idx;
            std::vector<std::pair<std::string, std::string>> assignment;
            model_params params;
            point_cache cache;
            std::uint64_t trials;
            std::size_t first_task;
        };
        std::vector<grid_point> points;
        std::vector<std::size_t> idx(cfg.series.size(), 0);
        while (true)
        {
            for (std::size_t j = 0; j < cfg.sweep.values.size(); ++j)
            {
                grid_point gp;
                gp.series_idx = idx;
                gp.sweep_idx = j;
                for (std::size_t a = 0; a < cfg.series.size(); ++a)
                    gp.assignment.emplace_back(cfg.series[a].param, cfg.series[a].values[idx[a]]);
                gp.assignment.emplace_back(cfg.sweep.param, cfg.sweep.values[j]);
                points.push_back(std::move(gp));
            }
            std::size_t a = idx.size();
            while (a > 0 && ++idx[a - 1] == cfg.series[a - 1].values.size())
                idx[--a] = 0;
            if (a == 0)
                break;
        }

        run_result res;
        res.deterministic = true;
        warning_list setup_warnings;
        std::size_t total = 0;
        for (auto &gp : points)
        {
            gp.params = resolve_params(cfg, gp.assignment);
            const auto &p = gp.params;
            const bool det = is_deterministic(p);
            res.deterministic = res.deterministic && det;
            gp.trials = det ? 1 : cfg.trials;
            gp.first_task = total;
            total += gp.trials;
            try
            {
                if (uses_channels(p.metric) && p.model != model_kind::xlmimo && !random_correlation(p))
                {
                    rng_engine unused = derive_stream(cfg.seed, gp.sweep_idx);
                    gp.cache.factor = psd_sqrt(draw_correlation(p, unused, &setup_warnings));
                }
                if (uses_channels(p.metric) && p.model == model_kind::xlmimo && p.freeze_geometry)
                {
                    rng_engine rng = derive_stream(cfg.seed, gp.sweep_idx, std::numeric_limits<std::uint64_t>::max());
                    gp.cache.scenario = xlmimo::build_scenario(p.xl, rng, &setup_warnings);
                }
            }
            catch (const numeric_error &e)
            {
                throw numeric_error("at " + describe(gp.assignment) + ": " + e.what());
            }
        }

        std::vector<std::size_t> task_point(total);
        for (std::size_t i = 0; i < points.size(); ++i)
            std::fill_n(task_point.begin() + static_cast<std::ptrdiff_t>(points[i].first_task), points[i].trials, i);

        std::vector<std::vector<double>> values(total);
        std::vector<warning_list> task_warnings(total);
        std::vector<std::exception_ptr> failures(total);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};

        auto worker = [&] {
            while (!failed.load(std::memory_order_relaxed))
            {
                const std::size_t t = next.fetch_add(1);
                if (t >= total)
                    return;
                const auto &gp = points[task_point[t]];
                const std::uint64_t trial = t - gp.first_task;
                try
                {
                    rng_engine rng = derive_stream(cfg.seed, gp.sweep_idx, trial);
                    values[t] = evaluate(gp.params, &gp.cache, rng, &task_warnings[t]);
                }
                catch (const config_error &)
                {
                    failures[t] = std::current_exception();
                    failed = true;
                }
                catch (const std::exception &e)
                {
                    failures[t] = std::make_exception_ptr(numeric_error(
                        "at " + describe(gp.assignment) + ", trial " + std::to_string(trial) + ": " + e.what()));
                    failed = true;
                }
            }
        };

        unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
        if (workers <= 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(worker);
            for (auto &th : pool)
                th.join();
        }
        for (const auto &f : failures)
            if (f)
                std::rethrow_exception(f);

        // indexed reduction
        const bool vec = is_vector_metric(parse_metric(cfg.metric));
        for (const auto &s : cfg.series)
            res.columns.push_back(s.param);
        res.columns.push_back(cfg.sweep.param);
        if (vec)
            res.columns.push_back("index");
        for (const char *c : {"mean", "std_error", "min", "max"})
            res.columns.emplace_back(c);

        std::set<std::string> seen;
        auto add_warnings = [&](const warning_list &w) {
            for (const auto &msg : w)
                if (seen.insert(msg).second)
                    res.warnings.push_back(msg);
        };
        add_warnings(setup_warnings);

        for (const auto &gp : points)
        {
            const std::size_t width = values[gp.first_task].size();
            for (std::size_t t = gp.first_task; t < gp.first_task + gp.trials; ++t)
            {
                add_warnings(task_warnings[t]);
                if (values[t].size() != width)
                    throw numeric_error("at " + describe(gp.assignment) + ": metric length changed between trials");
            }
            std::vector<std::string> series;
            for (std::size_t a = 0; a < cfg.series.size(); ++a)
                series.push_back(cfg.series[a].values[gp.series_idx[a]]);
            for (std::size_t i = 0; i < width; ++i)
            {
                std::vector<double> column(gp.trials);
                for (std::size_t t = 0; t < gp.trials; ++t)
                    column[t] = values[gp.first_task + t][i];
                result_row row{series, cfg.sweep.values[gp.sweep_idx], std::nullopt, metrics::summarize(column)};
                if (vec)
                    row.index = i;
                res.rows.push_back(std::move(row));
            }
        }
        return res;
    }

    std::string format_csv(const run_result &res)
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < res.columns.size(); ++i)
            out << (i ? "," : "") << res.columns[i];
        out << '\n';
        for (const auto &r : res.rows)
        {
            for (const auto &s : r.series)
                out << s << ',';
            out << r.sweep << ',';
            if (r.index)
                out << *r.index << ',';
            out << format_number(r.stats.mean) << ',' << format_number(r.stats.std_error) << ','
                << format_number(r.stats.min) << ',' << format_number(r.stats.max) << '\n';
        }
        return out.str();
    }

    std::string format_manifest(const experiment_config &cfg, const run_result &res)
    {
        std::ostringstream out;
        out << "# chansim " << CHANSIM_VERSION << " run manifest\n";
        out << "# rows: " << res.rows.size() << '\n';
        if (res.deterministic)
            out << "# deterministic metric: every point evaluated once\n";
        for (const auto &w : res.warnings)
            out << "# warning: " << w << '\n';
        out << to_config_text(cfg);
        return out.str();
    }

    void write_result(const experiment_config &cfg, const run_result &res, const std::string &path)
    {
        auto write = [](const std::string &file, const std::string &text) {
            std::ofstream out(file, std::ios::binary | std::ios::trunc);
            if (!out)
                throw io_error("cannot open '" + file + "' for writing");
            out << text;
            out.close();
            if (!out)
                throw io_error("write to '" + file + "' failed");
        };
        write(path, format_csv(res));
        write(path + ".manifest", format_manifest(cfg, res));
    }
}
