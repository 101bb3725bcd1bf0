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

#ifndef CHANSIM_CBSM_HPP
#define CHANSIM_CBSM_HPP

#include <armadillo>

#include "chansim/random.hpp"

// Correlation-based stochastic models: the correlation matrix is parameterized directly
namespace chansim::cbsm
{
    struct exponential_spec
    {
        arma::uword antennas = 100;
        double rho = 0.0;             // correlation factor, [0, 1]
        double theta = 0.0;           // AoA in rad; only the shadowed variant uses it
        double beta = 1.0;            // path-loss power gain, linear
        double sigma_shadow_db = 0.0; // shadowing std in dB
    };

    // Throws invalid_param on out-of-range fields
    void validate(const exponential_spec &spec);

    // Real symmetric Toeplitz matrix R(m,n) = rho^|n-m|. Neither beta nor theta is applied.
    arma::cx_mat exponential_correlation(const exponential_spec &spec);

    // M i.i.d. N(0, sigma^2) shadowing values in dB
    arma::vec draw_shadowing(arma::uword antennas, double sigma_db, rng_engine &rng);

    // beta * diag(10^(f_1/10), ..., 10^(f_M/10))
    arma::cx_mat uncorrelated_with_shadowing(arma::uword antennas, double beta, const arma::vec &shadow_db);

    // R(m,n) = beta * rho^|n-m| * exp(i (n-m) theta) * 10^((f_m + f_n) / 20)
    arma::cx_mat exponential_with_shadowing(const exponential_spec &spec, const arma::vec &shadow_db);
}

#endif
