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

#include "chansim/metrics.hpp"
#include "chansim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace chansim::metrics
{
    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double linear_to_db(double value)
    {
        return 10.0 * std::log10(value);
    }

    namespace
    {
        double snr_scale(double eta, arma::uword antennas)
        {
            if (!(eta >= 0.0) || !std::isfinite(eta))
                throw invalid_param("SNR must be finite and >= 0");
            if (antennas < 1)
                throw invalid_param("antenna count must be >= 1");
            return eta / static_cast<double>(antennas);
        }
    }

    double capacity_sample(const arma::cx_mat &H, double eta, arma::uword antennas)
    {
        require_valid(H);
        const double scale = snr_scale(eta, antennas);
        const arma::cx_mat G = H.n_cols <= H.n_rows ? arma::cx_mat(H.t() * H) : arma::cx_mat(H * H.t());
        return log2_det_ipm(G, scale);
    }

    double ergodic_capacity(const std::vector<arma::cx_mat> &draws, double eta, arma::uword antennas)
    {
        if (draws.empty())
            throw invalid_param("ergodic_capacity: no channel draws");
        double acc = 0.0;
        for (const auto &H : draws)
            acc += capacity_sample(H, eta, antennas);
        return acc / static_cast<double>(draws.size());
    }

    double capacity_ub(const arma::cx_mat &R, double eta, arma::uword antennas)
    {
        return log2_det_ipm(R, snr_scale(eta, antennas));
    }

    arma::vec sinr_per_user(const arma::cx_mat &H, const arma::cx_mat &W, double sigma2)
    {
        require_valid(H);
        require_valid(W);
        if (H.n_rows != W.n_rows || H.n_cols != W.n_cols)
            throw invalid_param("sinr_per_user: H and W shapes differ");
        if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
            throw invalid_param("sinr_per_user: noise power must be > 0");

        const arma::cx_mat G = H.t() * W; // G(k, j) = h_k^H w_j
        const arma::uword K = H.n_cols;
        arma::vec gamma(K);
        for (arma::uword k = 0; k < K; ++k)
        {
            double interference = 0.0;
            for (arma::uword j = 0; j < K; ++j)
                if (j != k)
                    interference += std::norm(G(k, j));
            gamma(k) = std::norm(G(k, k)) / (interference + sigma2);
        }
        return gamma;
    }

    double correlation_coefficient(const arma::cx_vec &hi, const arma::cx_vec &hj)
    {
        if (hi.n_elem != hj.n_elem)
            throw invalid_param("correlation_coefficient: vector lengths differ");
        const double ni = arma::norm(hi), nj = arma::norm(hj);
        if (!(ni > 0.0) || !(nj > 0.0))
            throw zero_vector("correlation_coefficient: zero channel vector");
        const double nu = std::abs(arma::cdot(hi, hj)) / (ni * nj);
        return std::min(nu, 1.0);
    }

    summary summarize(const std::vector<double> &values)
    {
        summary s;
        s.count = values.size();
        if (values.empty())
            return s;
        double acc = 0.0;
        s.min = s.max = values.front();
        for (const double v : values)
        {
            acc += v;
            s.min = std::min(s.min, v);
            s.max = std::max(s.max, v);
        }
        s.mean = acc / static_cast<double>(s.count);
        if (s.count > 1)
        {
            double ss = 0.0;
            for (const double v : values)
                ss += (v - s.mean) * (v - s.mean);
            s.std_error = std::sqrt(ss / static_cast<double>(s.count - 1) / static_cast<double>(s.count));
        }
        return s;
    }
}
