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

// Reference implementations used only by the tests. They share no code with the library:
// integrals use plain trapezoid rules, the visibility chain is enumerated exactly and the
// capacity oracle uses a determinant instead of eigenvalues.

#ifndef CHANSIM_TESTS_ORACLES_HPP
#define CHANSIM_TESTS_ORACLES_HPP

#include <armadillo>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{
    using cx = std::complex<double>;
    constexpr double pi = std::numbers::pi;

    // Composite trapezoid rule with n points on [a, b]
    inline cx trapezoid(const std::function<cx(double)> &f, double a, double b, std::size_t n)
    {
        const double h = (b - a) / static_cast<double>(n - 1);
        cx acc = 0.5 * (f(a) + f(b));
        for (std::size_t i = 1; i + 1 < n; ++i)
            acc += f(a + static_cast<double>(i) * h);
        return acc * h;
    }

    inline double gaussian_pdf(double x, double sigma)
    {
        return std::exp(-0.5 * x * x / (sigma * sigma)) / (std::sqrt(2.0 * pi) * sigma);
    }

    // E[exp(i 2 pi d l sin(phi + x))], x ~ U(-delta, delta)
    inline cx onering_lag(double d, double phi, double delta, double lag, std::size_t n = 1000001)
    {
        return trapezoid([&](double x) { return std::polar(1.0, 2.0 * pi * d * lag * std::sin(phi + x)); }, -delta,
                         delta, n) /
               (2.0 * delta);
    }

    // Same expectation for x ~ N(0, sigma^2), integrated over +-10 sigma
    inline cx gaussian_lag(double d, double phi, double sigma, double lag, std::size_t n = 1000001)
    {
        return trapezoid(
            [&](double x) { return gaussian_pdf(x, sigma) * std::polar(1.0, 2.0 * pi * d * lag * std::sin(phi + x)); },
            -10.0 * sigma, 10.0 * sigma, n);
    }

    inline arma::cx_mat ula_from_lag(arma::uword M, const std::function<cx(double)> &lag_fn)
    {
        arma::cx_mat R(M, M);
        for (arma::uword m = 0; m < M; ++m)
            for (arma::uword n = 0; n < M; ++n)
                R(m, n) = lag_fn(static_cast<double>(m) - static_cast<double>(n));
        return R;
    }

    // UPA entry on an nx x ny trapezoid grid; weight(x) is the angular density of each axis
    inline arma::cx_mat upa_matrix(arma::uword MH, arma::uword MV, double dH, double dV, double phi, double theta,
                                   const std::function<double(double)> &w_az, double az_half,
                                   const std::function<double(double)> &w_el, double el_half, std::size_t n = 1001)
    {
        const arma::uword M = MH * MV;
        std::vector<double> xs(n), ys(n), wx(n), wy(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
            xs[i] = az_half * t;
            ys[i] = el_half * t;
            const double end = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            wx[i] = end * w_az(xs[i]) * 2.0 * az_half / static_cast<double>(n - 1);
            wy[i] = end * w_el(ys[i]) * 2.0 * el_half / static_cast<double>(n - 1);
        }
        arma::cx_mat R(M, M);
        for (arma::uword p = 0; p < M; ++p)
            for (arma::uword q = 0; q < M; ++q)
            {
                const double a = static_cast<double>(p % MH) - static_cast<double>(q % MH);
                const double b = static_cast<double>(p / MH) - static_cast<double>(q / MH);
                cx acc = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double th = theta + ys[j];
                    cx inner = 0.0;
                    for (std::size_t i = 0; i < n; ++i)
                        inner += wx[i] * std::polar(1.0, 2.0 * pi * dH * a * std::cos(th) * std::sin(phi + xs[i]));
                    acc += wy[j] * std::polar(1.0, 2.0 * pi * dV * b * std::sin(th)) * inner;
                }
                R(p, q) = acc;
            }
        return R;
    }

    // Exact distribution of the number of visible antennas produced by the VR listing:
    // equiprobable first state; after a visible antenna P(visible) = p1; after the k-th
    // consecutive obstructed antenna P(obstructed) = p1 - (k-1) c while that is >= 0, else 0.
    inline std::vector<double> visible_count_pmf(std::size_t length, double p0, double p1, double c)
    {
        // state: (last value, consecutive obstructed run length, visible count)
        const std::size_t K = length + 1;
        auto at = [&](std::vector<double> &v, int last, std::size_t run, std::size_t count) -> double & {
            return v[(static_cast<std::size_t>(last) * K + run) * K + count];
        };
        std::vector<double> cur(2 * K * K, 0.0), nxt(2 * K * K, 0.0);
        at(cur, 1, 0, 1) = 0.5;
        at(cur, 0, 1, 0) = 0.5;
        for (std::size_t n = 1; n < length; ++n)
        {
            std::fill(nxt.begin(), nxt.end(), 0.0);
            for (int last = 0; last < 2; ++last)
                for (std::size_t run = 0; run < K; ++run)
                    for (std::size_t count = 0; count < K; ++count)
                    {
                        const double pr = at(cur, last, run, count);
                        if (pr == 0.0)
                            continue;
                        double p_obstructed;
                        if (last == 1)
                            p_obstructed = p0;
                        else
                        {
                            const double i = static_cast<double>(run - 1) * c;
                            p_obstructed = (p1 - i >= -1e-12) ? std::max(p1 - i, 0.0) : 0.0;
                        }
                        if (p_obstructed > 0.0)
                            at(nxt, 0, last == 0 ? run + 1 : 1, count) += pr * p_obstructed;
                        if (p_obstructed < 1.0)
                            at(nxt, 1, 0, count + 1) += pr * (1.0 - p_obstructed);
                    }
            std::swap(cur, nxt);
        }
        std::vector<double> pmf(K, 0.0);
        for (int last = 0; last < 2; ++last)
            for (std::size_t run = 0; run < K; ++run)
                for (std::size_t count = 0; count < K; ++count)
                    pmf[count] += at(cur, last, run, count);
        return pmf;
    }

    // E[10^(f/10)] for f ~ N(0, sigma^2) in dB
    inline double lognormal_mean(double sigma_db)
    {
        const double s = sigma_db * std::log(10.0) / 10.0;
        return std::exp(0.5 * s * s);
    }

    // Brute-force ergodic capacity of an i.i.d. CN(0,1) M x K channel through log|det(I + eta/M H H^H)|
    inline double iid_capacity_mc(arma::uword M, arma::uword K, double eta, std::size_t draws, std::uint64_t seed)
    {
        std::mt19937 gen(static_cast<std::mt19937::result_type>(seed));
        std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
        double acc = 0.0;
        for (std::size_t t = 0; t < draws; ++t)
        {
            arma::cx_mat H(M, K);
            for (auto &h : H)
                h = cx(nd(gen), nd(gen));
            const arma::cx_mat A = arma::eye<arma::cx_mat>(M, M) + (eta / static_cast<double>(M)) * H * H.t();
            acc += std::real(arma::log_det(A)) / std::log(2.0);
        }
        return acc / static_cast<double>(draws);
    }
}

#endif
