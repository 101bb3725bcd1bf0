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

#include "chansim/params.hpp"
#include "chansim/cbsm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace chansim
{
    namespace
    {
        constexpr double deg = std::numbers::pi / 180.0;

        const std::map<std::string, model_kind> &model_table()
        {
            static const std::map<std::string, model_kind> t = {
                {"iid", model_kind::iid},
                {"exponential", model_kind::exponential},
                {"uncorrelated_shadowed", model_kind::uncorrelated_shadowed},
                {"exponential_shadowed", model_kind::exponential_shadowed},
                {"onering_ula", model_kind::onering_ula},
                {"gaussian_ula", model_kind::gaussian_ula},
                {"gaussian_ula_closed", model_kind::gaussian_ula_closed},
                {"gaussian_ula_shadowed", model_kind::gaussian_ula_shadowed},
                {"onering_upa", model_kind::onering_upa},
                {"gaussian_upa", model_kind::gaussian_upa},
                {"xlmimo", model_kind::xlmimo}};
            return t;
        }

        const std::map<std::string, metric_kind> &metric_table()
        {
            static const std::map<std::string, metric_kind> t = {
                {"capacity_ub", metric_kind::capacity_ub},
                {"ergodic_capacity", metric_kind::ergodic_capacity},
                {"sinr", metric_kind::sinr},
                {"condition_number", metric_kind::condition_number},
                {"svd_spectrum", metric_kind::svd_spectrum},
                {"corr_coeff", metric_kind::corr_coeff},
                {"vr_stats", metric_kind::vr_stats},
                {"shadow_gain", metric_kind::shadow_gain}};
            return t;
        }

        using model_set = std::set<model_kind>;

        const model_set all_models = {model_kind::iid,
                                      model_kind::exponential,
                                      model_kind::uncorrelated_shadowed,
                                      model_kind::exponential_shadowed,
                                      model_kind::onering_ula,
                                      model_kind::gaussian_ula,
                                      model_kind::gaussian_ula_closed,
                                      model_kind::gaussian_ula_shadowed,
                                      model_kind::onering_upa,
                                      model_kind::gaussian_upa,
                                      model_kind::xlmimo};
        const model_set ula_models = {model_kind::onering_ula, model_kind::gaussian_ula,
                                      model_kind::gaussian_ula_closed, model_kind::gaussian_ula_shadowed};
        const model_set upa_models = {model_kind::onering_upa, model_kind::gaussian_upa};
        const model_set shadow_models = {model_kind::uncorrelated_shadowed, model_kind::exponential_shadowed,
                                         model_kind::gaussian_ula_shadowed};
        const model_set stationary_models = [] {
            model_set s = all_models;
            s.erase(model_kind::xlmimo);
            return s;
        }();

        model_set join(std::initializer_list<model_set> parts)
        {
            model_set out;
            for (const auto &p : parts)
                out.insert(p.begin(), p.end());
            return out;
        }

        const std::map<std::string, model_set> &param_table()
        {
            static const std::map<std::string, model_set> t = [] {
                const model_set xl = {model_kind::xlmimo};
                const model_set gbsm_models = join({ula_models, upa_models});
                std::map<std::string, model_set> m = {
                    {"antennas", all_models},
                    {"snr_db", all_models}, // grid override of the top-level snr_db
                    {"users", all_models},
                    {"precoder", all_models},
                    {"power_convention", all_models},
                    {"total_power", all_models},
                    {"beta", stationary_models},
                    {"rho", {model_kind::exponential, model_kind::exponential_shadowed}},
                    {"shadow_std_db", shadow_models},
                    {"phase_aoa_deg", {model_kind::exponential_shadowed}},
                    {"aoa_min_deg", join({gbsm_models, {model_kind::exponential_shadowed}})},
                    {"aoa_max_deg", join({gbsm_models, {model_kind::exponential_shadowed}})},
                    {"spacing", gbsm_models},
                    {"spacing_h", upa_models},
                    {"spacing_v", upa_models},
                    {"antennas_h", upa_models},
                    {"antennas_v", upa_models},
                    {"azimuth_deg", gbsm_models},
                    {"elevation_deg", upa_models},
                    {"azimuth_spread_deg", {model_kind::onering_ula, model_kind::onering_upa}},
                    {"elevation_spread_deg", {model_kind::onering_upa}},
                    {"azimuth_asd_deg",
                     {model_kind::gaussian_ula, model_kind::gaussian_ula_closed, model_kind::gaussian_ula_shadowed,
                      model_kind::gaussian_upa}},
                    {"elevation_asd_deg", {model_kind::gaussian_upa}},
                    {"scatterers", {model_kind::gaussian_ula_shadowed}},
                    {"scatterer_angles", {model_kind::gaussian_ula_shadowed}},
                    {"scatterer_min_deg", {model_kind::gaussian_ula_shadowed}},
                    {"scatterer_max_deg", {model_kind::gaussian_ula_shadowed}},
                    {"quad_nodes", join({{model_kind::onering_ula, model_kind::gaussian_ula}, upa_models, xl})},
                    {"quad_truncation", join({{model_kind::gaussian_ula}, {model_kind::gaussian_upa}})},
                    {"quad_auto", join({{model_kind::onering_ula, model_kind::gaussian_ula}, upa_models, xl})},
                };
                for (const char *name :
                     {"scheme", "d1", "d2", "user_distance", "clusters_per_user", "r_min", "r_max", "p0", "p1",
                      "vr_step", "wavelength", "element_spacing", "ref_gain_db", "ref_distance", "alpha_vr",
                      "alpha_nvr", "normalization", "cluster_model", "cluster_rho", "cluster_spread_deg",
                      "cluster_spacing", "arc_min_deg", "arc_max_deg", "span_min", "span_max", "freeze_geometry",
                      "vr_length"})
                    m.emplace(name, xl);
                return m;
            }();
            return t;
        }

        [[noreturn]] void bad_value(const std::string &name, const std::string &value, const std::string &why)
        {
            throw config_error("parameter '" + name + "': invalid value '" + value + "' (" + why + ")");
        }

        double to_double(const std::string &name, const std::string &value)
        {
            const char *begin = value.c_str();
            char *end = nullptr;
            const double v = std::strtod(begin, &end);
            if (value.empty() || end != begin + value.size() || std::isnan(v))
                bad_value(name, value, "expected a number");
            return v;
        }

        double to_finite(const std::string &name, const std::string &value)
        {
            const double v = to_double(name, value);
            if (!std::isfinite(v))
                bad_value(name, value, "expected a finite number");
            return v;
        }

        arma::uword to_count(const std::string &name, const std::string &value)
        {
            const double v = to_finite(name, value);
            if (v < 0.0 || v != std::floor(v) || v > 1e9)
                bad_value(name, value, "expected a non-negative integer");
            return static_cast<arma::uword>(v);
        }

        bool to_bool(const std::string &name, const std::string &value)
        {
            if (value == "true" || value == "yes" || value == "1" || value == "on")
                return true;
            if (value == "false" || value == "no" || value == "0" || value == "off")
                return false;
            bad_value(name, value, "expected true or false");
        }

        struct explicit_flags
        {
            bool antennas_h = false, antennas_v = false;
            bool spacing_h = false, spacing_v = false;
            bool p1 = false, users = false;
            double spacing = 0.5;
        };

        void apply(model_params &p, explicit_flags &ex, const std::string &name, const std::string &value)
        {
            auto &xl = p.xl;
            if (name == "antennas")
                p.antennas = to_count(name, value);
            else if (name == "snr_db")
                p.snr_db = to_finite(name, value);
            else if (name == "users")
            {
                p.users = to_count(name, value);
                ex.users = true;
            }
            else if (name == "precoder")
            {
                if (value == "cb")
                    p.precoder = precoding::scheme::cb;
                else if (value == "zf")
                    p.precoder = precoding::scheme::zf;
                else
                    bad_value(name, value, "expected cb or zf");
            }
            else if (name == "power_convention")
            {
                if (value == "amplitude")
                    p.power = precoding::power_convention::amplitude;
                else if (value == "power")
                    p.power = precoding::power_convention::power;
                else
                    bad_value(name, value, "expected amplitude or power");
            }
            else if (name == "total_power")
                p.total_power = to_finite(name, value);
            else if (name == "beta")
                p.beta = p.angles.beta = to_finite(name, value);
            else if (name == "rho")
                p.rho = to_finite(name, value);
            else if (name == "shadow_std_db")
                p.shadow_std_db = to_finite(name, value);
            else if (name == "phase_aoa_deg")
                p.phase_aoa = to_finite(name, value) * deg;
            else if (name == "aoa_min_deg")
                p.aoa_min = to_finite(name, value) * deg;
            else if (name == "aoa_max_deg")
                p.aoa_max = to_finite(name, value) * deg;
            else if (name == "spacing")
                ex.spacing = to_finite(name, value);
            else if (name == "spacing_h")
            {
                p.upa.spacing_h = to_finite(name, value);
                ex.spacing_h = true;
            }
            else if (name == "spacing_v")
            {
                p.upa.spacing_v = to_finite(name, value);
                ex.spacing_v = true;
            }
            else if (name == "antennas_h")
            {
                p.upa.horizontal = to_count(name, value);
                ex.antennas_h = true;
            }
            else if (name == "antennas_v")
            {
                p.upa.vertical = to_count(name, value);
                ex.antennas_v = true;
            }
            else if (name == "azimuth_deg")
                p.angles.azimuth = to_finite(name, value) * deg;
            else if (name == "elevation_deg")
                p.angles.elevation = to_finite(name, value) * deg;
            else if (name == "azimuth_spread_deg")
                p.angles.delta_azimuth = to_finite(name, value) * deg;
            else if (name == "elevation_spread_deg")
                p.angles.delta_elevation = to_finite(name, value) * deg;
            else if (name == "azimuth_asd_deg")
                p.angles.sigma_azimuth = to_finite(name, value) * deg;
            else if (name == "elevation_asd_deg")
                p.angles.sigma_elevation = to_finite(name, value) * deg;
            else if (name == "scatterers")
                p.scatterers = to_count(name, value);
            else if (name == "scatterer_angles")
            {
                if (value == "uniform")
                    p.scatterers_uniform = true;
                else if (value == "nominal")
                    p.scatterers_uniform = false;
                else
                    bad_value(name, value, "expected uniform or nominal");
            }
            else if (name == "scatterer_min_deg")
                p.scatterer_min = to_finite(name, value) * deg;
            else if (name == "scatterer_max_deg")
                p.scatterer_max = to_finite(name, value) * deg;
            else if (name == "quad_nodes")
                p.quad.nodes_per_dim = xl.correlation.quad.nodes_per_dim = to_count(name, value);
            else if (name == "quad_truncation")
                p.quad.gaussian_truncation = to_finite(name, value);
            else if (name == "quad_auto")
                p.quad.auto_nodes = xl.correlation.quad.auto_nodes = to_bool(name, value);
            else if (name == "scheme")
            {
                if (value == "scheme1" || value == "1")
                    xl.scheme.kind = xlmimo::scheme_kind::scheme1;
                else if (value == "scheme2" || value == "2")
                    xl.scheme.kind = xlmimo::scheme_kind::scheme2;
                else
                    bad_value(name, value, "expected scheme1 or scheme2");
            }
            else if (name == "d1")
                xl.scheme.d1 = to_finite(name, value);
            else if (name == "d2")
                xl.scheme.d2 = to_finite(name, value);
            else if (name == "arc_min_deg")
                xl.scheme.arc_min = to_finite(name, value) * deg;
            else if (name == "arc_max_deg")
                xl.scheme.arc_max = to_finite(name, value) * deg;
            else if (name == "span_min")
                xl.scheme.span_min = to_finite(name, value);
            else if (name == "span_max")
                xl.scheme.span_max = to_finite(name, value);
            else if (name == "user_distance")
                xl.user_distance = to_finite(name, value);
            else if (name == "clusters_per_user")
                xl.clusters_per_user = to_count(name, value);
            else if (name == "r_min")
                xl.vr.r_min = to_finite(name, value);
            else if (name == "r_max")
                xl.vr.r_max = to_finite(name, value);
            else if (name == "p0")
                xl.vr.p0 = to_finite(name, value);
            else if (name == "p1")
            {
                xl.vr.p1 = to_finite(name, value);
                ex.p1 = true;
            }
            else if (name == "vr_step")
                xl.vr.c = to_finite(name, value);
            else if (name == "wavelength")
                xl.array.wavelength = to_finite(name, value);
            else if (name == "element_spacing")
                xl.array.element_spacing = to_finite(name, value);
            else if (name == "ref_gain_db")
                xl.pathloss.L0_db = to_finite(name, value);
            else if (name == "ref_distance")
                xl.pathloss.d0 = to_finite(name, value);
            else if (name == "alpha_vr")
                xl.pathloss.alpha_vr = to_finite(name, value);
            else if (name == "alpha_nvr")
                xl.pathloss.alpha_nvr = to_double(name, value);
            else if (name == "normalization")
            {
                if (value == "unit")
                    xl.normalization.reset();
                else
                    xl.normalization = to_finite(name, value);
            }
            else if (name == "cluster_model")
            {
                if (value == "uncorrelated")
                    xl.correlation.model = xlmimo::cluster_model::uncorrelated;
                else if (value == "exponential")
                    xl.correlation.model = xlmimo::cluster_model::exponential;
                else if (value == "onering")
                    xl.correlation.model = xlmimo::cluster_model::onering;
                else
                    bad_value(name, value, "expected uncorrelated, exponential or onering");
            }
            else if (name == "cluster_rho")
                xl.correlation.rho = to_finite(name, value);
            else if (name == "cluster_spread_deg")
                xl.correlation.spread = to_finite(name, value) * deg;
            else if (name == "cluster_spacing")
                xl.correlation.spacing = to_finite(name, value);
            else if (name == "freeze_geometry")
                p.freeze_geometry = to_bool(name, value);
            else if (name == "vr_length")
                p.vr_length = to_count(name, value);
            else
                throw config_error("unknown parameter '" + name + "'");
        }

        // Library validation errors become configuration errors at this boundary
        template <typename F>
        void check(const std::string &what, F &&f)
        {
            try
            {
                f();
            }
            catch (const invalid_param &e)
            {
                throw config_error(what + ": " + e.what());
            }
        }

        void finalize(model_params &p, const explicit_flags &ex)
        {
            const bool is_upa = upa_models.count(p.model) > 0;
            if (p.antennas < 1)
                throw config_error("parameter 'antennas' must be >= 1");

            p.ula = {p.antennas, ex.spacing};
            if (!ex.spacing_h)
                p.upa.spacing_h = ex.spacing;
            if (!ex.spacing_v)
                p.upa.spacing_v = ex.spacing;
            if (is_upa)
            {
                if (!ex.antennas_h && !ex.antennas_v)
                {
                    const auto side = static_cast<arma::uword>(std::llround(std::sqrt(static_cast<double>(p.antennas))));
                    if (side * side != p.antennas)
                        throw config_error("parameter 'antennas': a square UPA needs a perfect square, got " +
                                           std::to_string(p.antennas) + " (or set antennas_h / antennas_v)");
                    p.upa.horizontal = p.upa.vertical = side;
                }
                p.antennas = p.upa.antennas();
            }

            if (!ex.users)
                p.users = p.model == model_kind::xlmimo ? 10 : p.metric == metric_kind::corr_coeff ? 2 : 1;
            if (p.users < 1)
                throw config_error("parameter 'users' must be >= 1");
            if (p.metric == metric_kind::corr_coeff && p.users < 2)
                throw config_error("metric corr_coeff needs users >= 2");
            if (!(p.total_power > 0.0))
                throw config_error("parameter 'total_power' must be > 0");

            if (p.aoa_min && !p.aoa_max)
                throw config_error("parameter 'aoa_min_deg' needs aoa_max_deg");
            if (p.aoa_max && !p.aoa_min)
                p.aoa_min = 0.0;
            if (p.aoa_max && !(*p.aoa_max >= *p.aoa_min))
                throw config_error("parameter 'aoa_max_deg' must be >= aoa_min_deg");

            if (!ex.p1)
                p.xl.vr.p1 = 1.0 - p.xl.vr.p0;
            p.xl.array.antennas = p.antennas;
            p.xl.users = p.users;
            p.xl.correlation.quad.nodes_per_dim = p.quad.nodes_per_dim;

            if (!(p.beta >= 0.0))
                throw config_error("parameter 'beta' must be >= 0");
            if (!(p.shadow_std_db >= 0.0))
                throw config_error("parameter 'shadow_std_db' must be >= 0");

            switch (p.model)
            {
            case model_kind::exponential:
            case model_kind::exponential_shadowed:
                check("exponential model", [&] {
                    cbsm::validate({p.antennas, p.rho, p.phase_aoa, p.beta, p.shadow_std_db});
                });
                break;
            case model_kind::onering_ula:
            case model_kind::gaussian_ula:
            case model_kind::gaussian_ula_closed:
            case model_kind::gaussian_ula_shadowed:
                check("ULA", [&] {
                    gbsm::validate(p.ula);
                    gbsm::validate(p.quad);
                });
                if (p.model == model_kind::gaussian_ula_shadowed)
                {
                    if (p.scatterers < 1)
                        throw config_error("parameter 'scatterers' must be >= 1");
                    if (!(p.scatterer_max >= p.scatterer_min))
                        throw config_error("parameter 'scatterer_max_deg' must be >= scatterer_min_deg");
                }
                break;
            case model_kind::onering_upa:
            case model_kind::gaussian_upa:
                check("UPA", [&] {
                    gbsm::validate(p.upa);
                    gbsm::validate(p.quad);
                });
                break;
            case model_kind::xlmimo:
                check("XL-MIMO", [&] { xlmimo::validate(p.xl); });
                if (p.vr_length && *p.vr_length < 1)
                    throw config_error("parameter 'vr_length' must be >= 1");
                break;
            default:
                break;
            }
            for (double v : {p.angles.delta_azimuth, p.angles.delta_elevation, p.angles.sigma_azimuth,
                             p.angles.sigma_elevation})
                if (!(v >= 0.0))
                    throw config_error("angular spreads must be >= 0");
        }
    }

    model_kind parse_model(const std::string &name)
    {
        const auto it = model_table().find(name);
        if (it == model_table().end())
            throw config_error("unknown model '" + name + "'");
        return it->second;
    }

    metric_kind parse_metric(const std::string &name)
    {
        const auto it = metric_table().find(name);
        if (it == metric_table().end())
            throw config_error("unknown metric '" + name + "'");
        return it->second;
    }

    void check_compatible(model_kind model, metric_kind metric)
    {
        bool ok = true;
        switch (metric)
        {
        case metric_kind::capacity_ub:
        case metric_kind::condition_number:
        case metric_kind::svd_spectrum:
            ok = model != model_kind::xlmimo;
            break;
        case metric_kind::vr_stats:
            ok = model == model_kind::xlmimo;
            break;
        case metric_kind::shadow_gain:
            ok = shadow_models.count(model) > 0;
            break;
        default:
            break;
        }
        if (!ok)
            throw config_error("metric is not defined for this model");
    }

    bool is_vector_metric(metric_kind metric)
    {
        return metric == metric_kind::svd_spectrum || metric == metric_kind::vr_stats;
    }

    bool accepts_param(model_kind model, const std::string &param)
    {
        const auto it = param_table().find(param);
        return it != param_table().end() && it->second.count(model) > 0;
    }

    model_params resolve_params(const experiment_config &cfg,
                                const std::vector<std::pair<std::string, std::string>> &assignment)
    {
        model_params p;
        p.model = parse_model(cfg.model);
        p.metric = parse_metric(cfg.metric);
        p.snr_db = cfg.snr_db;
        explicit_flags ex;
        for (const auto *list : {&cfg.params, &assignment})
            for (const auto &[name, value] : *list)
            {
                if (!accepts_param(p.model, name))
                    throw config_error("parameter '" + name + "' is not valid for model " + cfg.model);
                apply(p, ex, name, value);
            }
        finalize(p, ex);
        return p;
    }
}
