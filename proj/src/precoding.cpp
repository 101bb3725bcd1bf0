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

#include "chansim/precoding.hpp"

#include <cmath>
#include <string>

namespace chansim::precoding
{
    namespace
    {
        void require_channel(const arma::cx_mat &H)
        {
            if (H.is_empty())
                throw invalid_matrix("precoder: empty channel matrix");
            if (!H.is_finite())
                throw invalid_matrix("precoder: non-finite channel matrix");
        }
    }

    arma::cx_mat cb_precoder(const arma::cx_mat &H)
    {
        require_channel(H);
        return H;
    }

    arma::cx_mat zf_precoder(const arma::cx_mat &H)
    {
        require_channel(H);
        if (H.n_cols > H.n_rows)
            throw rank_deficient("ZF: more users (" + std::to_string(H.n_cols) + ") than antennas (" +
                                 std::to_string(H.n_rows) + ")");

        arma::cx_mat G = H.t() * H;
        G = 0.5 * (G + G.t());
        arma::vec lambda;
        if (!arma::eig_sym(lambda, G))
            throw invalid_matrix("ZF: eigendecomposition of the Gram matrix failed");
        if (!(lambda.max() > 0.0) || lambda.min() <= lambda.max() / zf_condition_limit)
            throw rank_deficient("ZF: Gram matrix is singular or ill-conditioned");

        arma::cx_mat U;
        if (!arma::chol(U, G))
            throw rank_deficient("ZF: Cholesky factorization of the Gram matrix failed");
        // G X = H^H with G = U^H U, then W = X^H
        const arma::cx_mat Y = arma::solve(arma::trimatl(U.t()), H.t());
        const arma::cx_mat X = arma::solve(arma::trimatu(U), Y);
        return X.t();
    }

    arma::cx_mat make_precoder(const arma::cx_mat &H, scheme s)
    {
        return s == scheme::cb ? cb_precoder(H) : zf_precoder(H);
    }

    arma::vec equal_power_allocation(arma::uword users, double total_power)
    {
        if (users < 1)
            throw invalid_param("power allocation: at least one user");
        if (!(total_power >= 0.0) || !std::isfinite(total_power))
            throw invalid_param("power allocation: total power must be finite and >= 0");
        return arma::vec(users, arma::fill::value(total_power / static_cast<double>(users)));
    }

    arma::cx_mat normalize_columns(const arma::cx_mat &W, const arma::vec &p, power_convention conv)
    {
        if (p.n_elem != W.n_cols)
            throw invalid_param("normalize_columns: allocation length differs from the number of columns");
        arma::cx_mat out(W.n_rows, W.n_cols);
        for (arma::uword k = 0; k < W.n_cols; ++k)
        {
            if (!(p(k) >= 0.0) || !std::isfinite(p(k)))
                throw invalid_param("normalize_columns: powers must be finite and >= 0");
            const double nrm = arma::norm(W.col(k));
            if (!(nrm > 0.0))
                throw zero_column("normalize_columns: column " + std::to_string(k) + " is zero");
            const double scale = conv == power_convention::amplitude ? p(k) : std::sqrt(p(k));
            out.col(k) = W.col(k) * (scale / nrm);
        }
        return out;
    }
}
