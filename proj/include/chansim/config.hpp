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

#ifndef CHANSIM_CONFIG_HPP
#define CHANSIM_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chansim/errors.hpp"

// Experiment configuration: a flat `key = value` document.
//
//   name = fig5a
//   model = exponential
//   metric = capacity_ub
//   trials = 1
//   seed = 1
//   snr_db = 60
//   model.antennas = 100        fixed model parameter
//   sweep.antennas = 20:20:400  the x axis, exactly one
//   series.rho = 0:0.2:1        curves, any number (Cartesian product)
//
// Grids are comma-separated items; an item is a token, `start:step:stop` or `start:stop` (step 1).
// `#` starts a comment. Angles are in degrees.
namespace chansim
{
    struct grid_axis
    {
        std::string param;
        std::string text;                // as written
        std::vector<std::string> values; // expanded, numbers printed with 12 significant digits

        bool operator==(const grid_axis &) const = default;
    };

    struct experiment_config
    {
        std::string name = "experiment";
        std::string model;
        std::string metric;
        std::uint64_t trials = 300;
        std::uint64_t seed = 1;
        double snr_db = 60.0;
        std::string output;
        std::vector<std::pair<std::string, std::string>> params; // model.<param>, in file order
        grid_axis sweep;
        std::vector<grid_axis> series;

        bool operator==(const experiment_config &) const = default;
    };

    inline const std::vector<std::string> &model_names()
    {
        static const std::vector<std::string> names = {
            "iid",          "exponential",         "uncorrelated_shadowed", "exponential_shadowed",
            "onering_ula",  "gaussian_ula",        "gaussian_ula_closed",   "gaussian_ula_shadowed",
            "onering_upa",  "gaussian_upa",        "xlmimo"};
        return names;
    }

    inline const std::vector<std::string> &metric_names()
    {
        static const std::vector<std::string> names = {"capacity_ub",   "ergodic_capacity", "sinr",
                                                       "condition_number", "svd_spectrum",  "corr_coeff",
                                                       "vr_stats",      "shadow_gain"};
        return names;
    }

    // Expand one grid expression; empty or malformed -> config_error
    std::vector<std::string> expand_grid(const std::string &text);

    // Parse and validate. Unset fields take the defaults (trials 300, seed 1, snr_db 60, or 10 for xlmimo).
    experiment_config parse_config(const std::string &text);

    // Read a file and parse it; unreadable -> io_error
    experiment_config load_config(const std::string &path);

    // Canonical text; parse_config(to_config_text(c)) == c
    std::string to_config_text(const experiment_config &cfg);

    // Structural checks plus a full parameter resolution of every grid point
    void validate_config(const experiment_config &cfg);
}

#endif
