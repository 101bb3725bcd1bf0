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

#include "chansim/xlmimo.hpp"
#include "chansim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chansim::xlmimo
{
    double distance(const point &a, const point &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    double rayleigh_distance(double aperture, double wavelength)
    {
        if (!(aperture > 0.0) || !(wavelength > 0.0))
            throw invalid_param("rayleigh_distance: aperture and wavelength must be > 0");
        return 2.0 * aperture * aperture / wavelength;
    }

    void validate(const array_geometry &geom)
    {
        if (geom.antennas < 2)
            throw invalid_param("XL array: at least 2 antennas");
        if (!(geom.wavelength > 0.0) || !(geom.element_spacing > 0.0) || !std::isfinite(geom.wavelength) ||
            !std::isfinite(geom.element_spacing))
            throw invalid_param("XL array: wavelength and element spacing must be > 0");
    }

    double antenna_position(const array_geometry &geom, arma::uword n)
    {
        return (static_cast<double>(n) - 0.5 * static_cast<double>(geom.antennas - 1)) * geom.pitch();
    }

    void validate(const cluster_scheme &scheme)
    {
        if (scheme.kind == scheme_kind::scheme1)
        {
            if (!(scheme.d1 > 0.0) || !std::isfinite(scheme.d1))
                throw invalid_param("scheme1: d1 must be > 0");
            if (!(scheme.arc_max >= scheme.arc_min) || !std::isfinite(scheme.arc_min) || !std::isfinite(scheme.arc_max))
                throw invalid_param("scheme1: empty azimuth arc");
        }
        else
        {
            if (!(scheme.d2 > 0.0) || !std::isfinite(scheme.d2))
                throw invalid_param("scheme2: d2 must be > 0");
            if (scheme.span_min.has_value() != scheme.span_max.has_value())
                throw invalid_param("scheme2: give both ends of the horizontal span or neither");
            if (scheme.span_min && !(*scheme.span_max >= *scheme.span_min))
                throw invalid_param("scheme2: empty horizontal span");
        }
    }

    std::vector<std::vector<cluster>> place_clusters(const cluster_scheme &scheme, const array_geometry &geom,
                                                     arma::uword users, arma::uword clusters_per_user, double r_min,
                                                     double r_max, rng_engine &rng)
    {
        validate(scheme);
        validate(geom);
        if (clusters_per_user < 1)
            throw invalid_param("place_clusters: at least one cluster per user");
        if (!(r_min > 0.0) || !(r_max >= r_min))
            throw invalid_param("place_clusters: need 0 < r_min <= r_max");

        const double half = 0.5 * geom.length();
        const double lo = scheme.span_min.value_or(-half);
        const double hi = scheme.span_max.value_or(half);

        std::vector<std::vector<cluster>> out(users);
        for (auto &list : out)
        {
            list.resize(clusters_per_user);
            for (auto &cl : list)
            {
                if (scheme.kind == scheme_kind::scheme1)
                {
                    const double psi = uniform(scheme.arc_min, scheme.arc_max, rng);
                    cl.center = {scheme.d1 * std::sin(psi), scheme.d1 * std::cos(psi)};
                }
                else
                    cl.center = {uniform(lo, hi, rng), scheme.d2};
                cl.radius = uniform(r_min, r_max, rng);
            }
        }
        return out;
    }

    void validate(const vr_params &vr)
    {
        if (!(vr.r_min > 0.0) || !(vr.r_max >= vr.r_min) || !std::isfinite(vr.r_max))
            throw invalid_param("VR: need 0 < r_min <= r_max");
        if (!(vr.p0 >= 0.0 && vr.p0 <= 1.0) || !(vr.p1 >= 0.0 && vr.p1 <= 1.0))
            throw invalid_param("VR: probabilities must lie in [0, 1]");
        if (std::abs(vr.p0 + vr.p1 - 1.0) > 1e-9)
            throw invalid_param("VR: p0 + p1 must equal 1");
        if (!(vr.c >= 0.0 && vr.c <= 1.0))
            throw invalid_param("VR: c must lie in [0, 1]");
    }

    arma::uword vr_length(const array_geometry &geom, double radius)
    {
        validate(geom);
        if (!(radius > 0.0))
            throw invalid_param("vr_length: radius must be > 0");
        const double ratio = static_cast<double>(geom.antennas) * 2.0 * radius / geom.length();
        // guard ceil() against representation error on exact multiples
        return static_cast<arma::uword>(std::ceil(ratio - 1e-12 * ratio));
    }

    arma::uvec visibility_chain(arma::uword length, const vr_params &vr, rng_engine &rng,
                                std::vector<prob_vector> *trace)
    {
        validate(vr);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        arma::uvec mask(length);
        prob_vector prob{vr.p0, vr.p1};
        double inc = 0.0;
        unsigned v = u01(rng) < 0.5 ? 1u : 0u;

        for (arma::uword n = 0; n < length; ++n)
        {
            mask(n) = v;
            if (v == 1)
            {
                prob = {vr.p0, vr.p1};
                inc = 0.0;
            }
            else if (vr.p1 - inc >= -1e-12)
            {
                prob = {std::clamp(vr.p1 - inc, 0.0, 1.0), std::clamp(vr.p0 + inc, 0.0, 1.0)};
                inc += vr.c;
            }
            else
                prob = {0.0, 1.0};

            if (n + 1 == length)
                break;
            if (trace)
                trace->push_back(prob);
            v = u01(rng) < prob[1] ? 1u : 0u;
        }
        return mask;
    }

    vr_draw generate_vr(const array_geometry &geom, const vr_params &vr, rng_engine &rng)
    {
        validate(vr);
        const double r = uniform(vr.r_min, vr.r_max, rng);
        const arma::uword len = std::min(vr_length(geom, r), geom.antennas);
        return {r, visibility_chain(len, vr, rng)};
    }

    arma::uword nearest_antenna(const array_geometry &geom, double x)
    {
        const double t = x / geom.pitch() + 0.5 * static_cast<double>(geom.antennas - 1);
        const double n = std::ceil(t - 0.5);
        if (n <= 0.0)
            return 0;
        return std::min(static_cast<arma::uword>(n), geom.antennas - 1);
    }

    arma::uword position_vr(const array_geometry &geom, const point &center, arma::uword length)
    {
        validate(geom);
        if (length < 1 || length > geom.antennas)
            throw invalid_param("position_vr: span length outside 1..M");
        const long c = static_cast<long>(nearest_antenna(geom, center.x));
        const long first = c - static_cast<long>((length - 1) / 2);
        const long last_start = static_cast<long>(geom.antennas - length);
        return static_cast<arma::uword>(std::clamp(first, 0L, last_start));
    }

    void validate(const pathloss_params &pl)
    {
        if (!(pl.d0 > 0.0) || !std::isfinite(pl.d0))
            throw invalid_param("path loss: d0 must be > 0");
        if (!std::isfinite(pl.L0_db))
            throw invalid_param("path loss: L0 must be finite");
        if (!(pl.alpha_vr > 0.0) || !std::isfinite(pl.alpha_vr))
            throw invalid_param("path loss: alpha_vr must be > 0");
        if (!(pl.alpha_nvr >= pl.alpha_vr))
            throw invalid_param("path loss: alpha_nvr must be >= alpha_vr");
        if (!(pl.A >= 0.0) || !std::isfinite(pl.A))
            throw invalid_param("path loss: normalization must be finite and >= 0");
    }

    double unit_gain_normalization(double dist, const pathloss_params &pl)
    {
        if (!(dist > 0.0))
            throw invalid_param("normalization distance must be > 0");
        return std::pow(dist / pl.d0, pl.alpha_vr) * std::pow(10.0, -pl.L0_db / 10.0);
    }

    arma::vec pathloss_per_antenna(const cluster &cl, const point &user, const array_geometry &geom,
                                   const pathloss_params &pl, warning_list *warnings)
    {
        validate(geom);
        validate(pl);
        const arma::uword M = geom.antennas;
        const arma::uword span = cl.mask.n_elem;
        if (cl.vr_first + span > M)
            throw invalid_param("pathloss_per_antenna: VR span exceeds the array");

        const double leg = distance(cl.center, user);
        bool clamped = false;
        arma::vec beta(M);
        for (arma::uword n = 0; n < M; ++n)
        {
            const bool inside = n >= cl.vr_first && n < cl.vr_first + span;
            if (inside && cl.mask(n - cl.vr_first) == 0)
            {
                beta(n) = 0.0;
                continue;
            }
            const double alpha = inside ? pl.alpha_vr : pl.alpha_nvr;
            if (std::isinf(alpha))
            {
                beta(n) = 0.0;
                continue;
            }
            double d = distance({antenna_position(geom, n), 0.0}, cl.center) + leg;
            if (d < pl.d0)
            {
                d = pl.d0;
                clamped = true;
            }
            const double L = pl.L0_db - 10.0 * alpha * std::log10(d / pl.d0);
            beta(n) = std::sqrt(std::pow(10.0, L / 10.0) * pl.A);
        }
        if (clamped && warnings)
            warnings->push_back("pathloss_per_antenna: distance below d0 clamped to d0");
        return beta;
    }

    arma::cx_vec cluster_channel(const arma::vec &beta, const arma::cx_mat &R, rng_engine &rng)
    {
        return cluster_channel_factored(beta, psd_sqrt(R), rng);
    }

    arma::cx_vec cluster_channel_factored(const arma::vec &beta, const arma::cx_mat &S, rng_engine &rng)
    {
        if (!S.is_empty() && (S.n_rows != beta.n_elem || S.n_cols != beta.n_elem))
            throw invalid_param("cluster_channel: factor and amplitude sizes differ");
        arma::cx_vec z = complex_normal_vector(beta.n_elem, rng);
        if (!S.is_empty())
            z = S * z;
        return z % arma::conv_to<arma::cx_vec>::from(beta);
    }

    void validate(const xl_config &cfg)
    {
        validate(cfg.array);
        validate(cfg.scheme);
        validate(cfg.vr);
        validate(cfg.pathloss);
        if (cfg.users < 1)
            throw invalid_param("XL scenario: at least one user");
        if (cfg.clusters_per_user < 1)
            throw invalid_param("XL scenario: at least one cluster per user");
        if (!(cfg.user_distance > 0.0) || !std::isfinite(cfg.user_distance))
            throw invalid_param("XL scenario: user distance must be > 0");
        if (cfg.normalization && (!(*cfg.normalization >= 0.0) || !std::isfinite(*cfg.normalization)))
            throw invalid_param("XL scenario: normalization must be finite and >= 0");
        const auto &c = cfg.correlation;
        if (c.model == cluster_model::exponential && !(c.rho >= 0.0 && c.rho <= 1.0))
            throw invalid_param("XL scenario: cluster rho must lie in [0, 1]");
        if (c.model == cluster_model::onering)
        {
            if (!(c.spread >= 0.0) || !(c.spacing > 0.0))
                throw invalid_param("XL scenario: one-ring spread must be >= 0 and spacing > 0");
            gbsm::validate(c.quad);
        }
    }

    double cluster_aoa(const array_geometry &geom, const cluster &cl)
    {
        const arma::uword span = std::max<arma::uword>(cl.mask.n_elem, 1);
        const double x_ref = antenna_position(geom, cl.vr_first + (span - 1) / 2);
        return std::atan2(cl.center.x - x_ref, cl.center.y);
    }

    arma::cx_mat cluster_correlation_matrix(const xl_config &cfg, const cluster &cl, warning_list *warnings)
    {
        const arma::uword M = cfg.array.antennas;
        const auto &c = cfg.correlation;
        switch (c.model)
        {
        case cluster_model::uncorrelated:
            return arma::eye<arma::cx_mat>(M, M);
        case cluster_model::exponential:
        {
            arma::cx_mat R(M, M);
            for (arma::uword n = 0; n < M; ++n)
                for (arma::uword m = 0; m < M; ++m)
                    R(m, n) = std::pow(c.rho, static_cast<double>(m > n ? m - n : n - m));
            return R;
        }
        case cluster_model::onering:
        {
            gbsm::angular_spec ang;
            ang.azimuth = cluster_aoa(cfg.array, cl);
            ang.delta_azimuth = c.spread;
            return gbsm::onering_ula({M, c.spacing}, ang, c.quad, warnings);
        }
        }
        throw invalid_param("unknown cluster correlation model");
    }

    xl_scenario build_scenario(const xl_config &cfg, rng_engine &rng, warning_list *warnings)
    {
        validate(cfg);
        const auto &geom = cfg.array;
        pathloss_params pl = cfg.pathloss;
        pl.A = cfg.normalization.value_or(unit_gain_normalization(cfg.user_distance, pl));

        xl_scenario sc;
        sc.antennas = geom.antennas;
        sc.users.assign(cfg.users, point{0.0, cfg.user_distance});
        sc.clusters = place_clusters(cfg.scheme, geom, cfg.users, cfg.clusters_per_user, cfg.vr.r_min, cfg.vr.r_max, rng);

        arma::cx_mat shared_factor; // the exponential model does not depend on the cluster
        if (cfg.correlation.model == cluster_model::exponential)
            shared_factor = psd_sqrt(cluster_correlation_matrix(cfg, cluster{}, warnings));

        sc.beta.resize(cfg.users);
        sc.factors.resize(cfg.users);
        for (arma::uword k = 0; k < cfg.users; ++k)
            for (auto &cl : sc.clusters[k])
            {
                const arma::uword len = std::min(vr_length(geom, cl.radius), geom.antennas);
                cl.mask = visibility_chain(len, cfg.vr, rng);
                cl.vr_first = position_vr(geom, cl.center, len);
                sc.beta[k].push_back(pathloss_per_antenna(cl, sc.users[k], geom, pl, warnings));
                switch (cfg.correlation.model)
                {
                case cluster_model::uncorrelated:
                    sc.factors[k].emplace_back();
                    break;
                case cluster_model::exponential:
                    sc.factors[k].push_back(shared_factor);
                    break;
                case cluster_model::onering:
                    sc.factors[k].push_back(psd_sqrt(cluster_correlation_matrix(cfg, cl, warnings)));
                    break;
                }
            }
        return sc;
    }

    arma::cx_vec user_channel(const xl_scenario &sc, arma::uword k, rng_engine &rng)
    {
        if (k >= sc.users.size())
            throw invalid_param("user_channel: user index " + std::to_string(k) + " out of range");
        arma::cx_vec h(sc.antennas, arma::fill::zeros);
        for (std::size_t c = 0; c < sc.beta[k].size(); ++c)
            h += cluster_channel_factored(sc.beta[k][c], sc.factors[k][c], rng);
        return h;
    }

    arma::cx_mat assemble_channel_matrix(const xl_scenario &sc, rng_engine &rng)
    {
        arma::cx_mat H(sc.antennas, sc.users.size());
        for (arma::uword k = 0; k < sc.users.size(); ++k)
            H.col(k) = user_channel(sc, k, rng);
        return H;
    }
}
