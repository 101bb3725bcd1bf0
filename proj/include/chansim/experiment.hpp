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

#ifndef CHANSIM_EXPERIMENT_HPP
#define CHANSIM_EXPERIMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chansim/config.hpp"
#include "chansim/metrics.hpp"
#include "chansim/params.hpp"
#include "chansim/random.hpp"

namespace chansim
{
    struct run_options
    {
        unsigned workers = 0; // 0 = hardware concurrency
    };

    struct result_row
    {
        std::vector<std::string> series;  // one value per series axis
        std::string sweep;                // sweep value
        std::optional<std::size_t> index; // vector metrics only
        metrics::summary stats;
    };

    struct run_result
    {
        std::vector<std::string> columns;
        std::vector<result_row> rows;
        std::vector<std::string> warnings; // de-duplicated, in grid order
        bool deterministic = false;        // every point was evaluated once
    };

    // One metric evaluation for a resolved grid point. Uses only `rng` for randomness.
    std::vector<double> evaluate_trial(const model_params &p, rng_engine &rng, warning_list *warnings = nullptr);

    // Spatial correlation matrix of one user under a stationary model (random parts drawn from rng)
    arma::cx_mat draw_correlation(const model_params &p, rng_engine &rng, warning_list *warnings = nullptr);

    // M x users channel matrix
    arma::cx_mat draw_channels(const model_params &p, rng_engine &rng, warning_list *warnings = nullptr);

    // True when the metric of this point needs no random draws
    bool is_deterministic(const model_params &p);

    // Runs every (series, sweep point, trial) on a worker pool. Trial t of sweep point j uses the
    // stream derive_stream(seed, j, t) regardless of series, so curves share common random numbers.
    // Results are reduced in index order: the output does not depend on the worker count.
    run_result run_experiment(const experiment_config &cfg, const run_options &opt = {});

    // CSV with a header row, values at 12 significant digits
    std::string format_csv(const run_result &res);

    // Config text with provenance comments; parses back to `cfg`
    std::string format_manifest(const experiment_config &cfg, const run_result &res);

    // Writes `path` and `path`.manifest; failures -> io_error
    void write_result(const experiment_config &cfg, const run_result &res, const std::string &path);
}

#endif
