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

#ifndef CHANSIM_PRECODING_HPP
#define CHANSIM_PRECODING_HPP

#include <armadillo>

#include "chansim/errors.hpp"

// Downlink linear precoding. H is M x K with one user per column; W has the same shape.
namespace chansim::precoding
{
    enum class scheme
    {
        cb, // conjugate beamforming
        zf  // zero-forcing
    };

    // How the per-user power p_k scales a unit-norm column: amplitude gives norm p_k,
    // power gives norm sqrt(p_k)
    enum class power_convention
    {
        amplitude,
        power
    };

    // Gram matrices at or above this condition number count as singular for ZF
    inline constexpr double zf_condition_limit = 1e12;

    // W = H
    arma::cx_mat cb_precoder(const arma::cx_mat &H);

    // W = H (H^H H)^-1 through a Cholesky solve. K > M or cond(H^H H) >= 1e12 -> rank_deficient.
    arma::cx_mat zf_precoder(const arma::cx_mat &H);

    arma::cx_mat make_precoder(const arma::cx_mat &H, scheme s);

    // p_k = P / K
    arma::vec equal_power_allocation(arma::uword users, double total_power = 1.0);

    // Column k becomes scale(p_k) * w_k / ||w_k||. A zero column raises zero_column.
    arma::cx_mat normalize_columns(const arma::cx_mat &W, const arma::vec &p,
                                   power_convention conv = power_convention::amplitude);
}

#endif
