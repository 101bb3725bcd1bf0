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

#include "chansim/cbsm.hpp"
#include "chansim/errors.hpp"
#include "chansim/linalg.hpp"

#include <cmath>

namespace chansim::cbsm
{
    void validate(const exponential_spec &spec)
    {
        if (spec.antennas < 1)
            throw invalid_param("exponential model: antenna count must be >= 1");
        if (!(spec.rho >= 0.0 && spec.rho <= 1.0))
            throw invalid_param("exponential model: rho must lie in [0, 1]");
        if (!(spec.beta >= 0.0) || !std::isfinite(spec.beta))
            throw invalid_param("exponential model: beta must be finite and >= 0");
        if (!(spec.sigma_shadow_db >= 0.0))
            throw invalid_param("exponential model: shadowing std must be >= 0");
        if (!std::isfinite(spec.theta))
            throw invalid_param("exponential model: theta must be finite");
    }

    arma::cx_mat exponential_correlation(const exponential_spec &spec)
    {
        validate(spec);
        const arma::uword M = spec.antennas;
        arma::cx_mat R(M, M);
        for (arma::uword n = 0; n < M; ++n)
            for (arma::uword m = 0; m < M; ++m)
            {
                const arma::uword lag = m > n ? m - n : n - m;
                R(m, n) = std::pow(spec.rho, static_cast<double>(lag));
            }
        return R;
    }

    arma::vec draw_shadowing(arma::uword antennas, double sigma_db, rng_engine &rng)
    {
        if (!(sigma_db >= 0.0))
            throw invalid_param("draw_shadowing: sigma must be >= 0");
        arma::vec f(antennas, arma::fill::zeros);
        if (sigma_db == 0.0)
            return f;
        std::normal_distribution<double> nd(0.0, sigma_db);
        for (auto &v : f)
            v = nd(rng);
        return f;
    }

    arma::cx_mat uncorrelated_with_shadowing(arma::uword antennas, double beta, const arma::vec &shadow_db)
    {
        if (!(beta >= 0.0))
            throw invalid_param("uncorrelated model: beta must be >= 0");
        if (shadow_db.n_elem != antennas)
            throw invalid_param("uncorrelated model: shadowing vector length must equal the antenna count");
        arma::cx_mat R(antennas, antennas, arma::fill::zeros);
        for (arma::uword m = 0; m < antennas; ++m)
            R(m, m) = beta * std::pow(10.0, shadow_db(m) / 10.0);
        return R;
    }

    arma::cx_mat exponential_with_shadowing(const exponential_spec &spec, const arma::vec &shadow_db)
    {
        validate(spec);
        const arma::uword M = spec.antennas;
        if (shadow_db.n_elem != M)
            throw invalid_param("exponential model: shadowing vector length must equal the antenna count");

        arma::vec amp(M);
        for (arma::uword m = 0; m < M; ++m)
            amp(m) = std::pow(10.0, shadow_db(m) / 20.0);

        arma::cx_mat R(M, M);
        for (arma::uword n = 0; n < M; ++n)
        {
            R(n, n) = spec.beta * amp(n) * amp(n);
            for (arma::uword m = n + 1; m < M; ++m)
            {
                // entry (m, n) has n - m < 0; its mirror (n, m) is the conjugate
                const double lag = static_cast<double>(m - n);
                const cx phase = std::polar(1.0, -lag * spec.theta);
                R(m, n) = spec.beta * std::pow(spec.rho, lag) * phase * amp(m) * amp(n);
                R(n, m) = std::conj(R(m, n));
            }
        }
        return R;
    }
}
