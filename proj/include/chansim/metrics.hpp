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

#ifndef CHANSIM_METRICS_HPP
#define CHANSIM_METRICS_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "chansim/errors.hpp"

namespace chansim::metrics
{
    double db_to_linear(double db);
    double linear_to_db(double value);

    // log2 det(I + (eta / M) H H^H) for one draw, through the smaller Gram matrix
    double capacity_sample(const arma::cx_mat &H, double eta, arma::uword antennas);

    // Mean of capacity_sample over the draws
    double ergodic_capacity(const std::vector<arma::cx_mat> &draws, double eta, arma::uword antennas);

    // Jensen upper bound log2 det(I + (eta / M) R)
    double capacity_ub(const arma::cx_mat &R, double eta, arma::uword antennas);

    // gamma_k = |h_k^H w_k|^2 / (sum_{j != k} |h_k^H w_j|^2 + sigma2)
    arma::vec sinr_per_user(const arma::cx_mat &H, const arma::cx_mat &W, double sigma2);

    // |h_i^H h_j| / (||h_i|| ||h_j||); a zero argument raises zero_vector
    double correlation_coefficient(const arma::cx_vec &hi, const arma::cx_vec &hj);

    struct summary
    {
        std::size_t count = 0;
        double mean = 0.0;
        double std_error = 0.0; // sample std / sqrt(count), 0 for a single value
        double min = 0.0;
        double max = 0.0;
    };

    // Statistics accumulated in index order, so the result does not depend on who produced the values
    summary summarize(const std::vector<double> &values);
}

#endif
