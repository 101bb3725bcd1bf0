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

#ifndef CHANSIM_PARAMS_HPP
#define CHANSIM_PARAMS_HPP

#include <armadillo>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chansim/config.hpp"
#include "chansim/gbsm.hpp"
#include "chansim/precoding.hpp"
#include "chansim/xlmimo.hpp"

// Typed model parameters of one grid point, resolved from the textual configuration
namespace chansim
{
    enum class model_kind
    {
        iid,
        exponential,
        uncorrelated_shadowed,
        exponential_shadowed,
        onering_ula,
        gaussian_ula,
        gaussian_ula_closed,
        gaussian_ula_shadowed,
        onering_upa,
        gaussian_upa,
        xlmimo
    };

    enum class metric_kind
    {
        capacity_ub,
        ergodic_capacity,
        sinr,
        condition_number,
        svd_spectrum,
        corr_coeff,
        vr_stats,
        shadow_gain
    };

    model_kind parse_model(const std::string &name);   // config_error on unknown names
    metric_kind parse_metric(const std::string &name); // config_error on unknown names

    // config_error if the metric cannot be computed for the model
    void check_compatible(model_kind model, metric_kind metric);

    // Metrics producing one value per index (a spectrum or a histogram) instead of a scalar
    bool is_vector_metric(metric_kind metric);

    // Whether `param` is a valid model.<param> / sweep.<param> / series.<param> key for the model
    bool accepts_param(model_kind model, const std::string &param);

    struct model_params
    {
        model_kind model = model_kind::iid;
        metric_kind metric = metric_kind::capacity_ub;
        double snr_db = 60.0;

        arma::uword antennas = 100;
        double beta = 1.0;
        double rho = 0.0;
        double shadow_std_db = 0.0;
        double phase_aoa = 0.0; // rad

        gbsm::ula_geometry ula;
        gbsm::upa_geometry upa;
        gbsm::angular_spec angles; // rad
        gbsm::quadrature_config quad{201, 6.0, true};

        // Nominal AoA drawn per user from [aoa_min, aoa_max] when set (rad)
        std::optional<double> aoa_min;
        std::optional<double> aoa_max;

        arma::uword scatterers = 1;
        bool scatterers_uniform = true;
        double scatterer_min = 0.0;
        double scatterer_max = 2.0 * std::numbers::pi;

        arma::uword users = 1;
        precoding::scheme precoder = precoding::scheme::cb;
        precoding::power_convention power = precoding::power_convention::amplitude;
        double total_power = 1.0;

        xlmimo::xl_config xl;
        std::optional<arma::uword> vr_length;
        bool freeze_geometry = false;
    };

    // Apply the fixed parameters of `cfg`, then `assignment` (series and sweep values), and
    // validate the result. Bad values -> config_error naming the parameter.
    model_params resolve_params(const experiment_config &cfg,
                                const std::vector<std::pair<std::string, std::string>> &assignment);
}

#endif
