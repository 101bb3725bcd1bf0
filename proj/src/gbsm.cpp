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

#include "chansim/gbsm.hpp"
#include "chansim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace chansim::gbsm
{
    using cx = std::complex<double>;
    constexpr double two_pi = 2.0 * std::numbers::pi;

    void validate(const ula_geometry &geom)
    {
        if (geom.antennas < 1)
            throw invalid_param("ULA: antenna count must be >= 1");
        if (!(geom.spacing > 0.0) || !std::isfinite(geom.spacing))
            throw invalid_param("ULA: antenna spacing must be > 0");
    }

    void validate(const upa_geometry &geom)
    {
        if (geom.horizontal < 1 || geom.vertical < 1)
            throw invalid_param("UPA: horizontal and vertical counts must be >= 1");
        if (!(geom.spacing_h > 0.0) || !(geom.spacing_v > 0.0) || !std::isfinite(geom.spacing_h) ||
            !std::isfinite(geom.spacing_v))
            throw invalid_param("UPA: antenna spacings must be > 0");
    }

    void validate(const quadrature_config &quad)
    {
        if (quad.nodes_per_dim < 3)
            throw invalid_param("quadrature: at least 3 nodes per dimension");
        if (!(quad.gaussian_truncation >= 3.0))
            throw invalid_param("quadrature: Gaussian truncation must be >= 3 sigma");
    }

    namespace
    {
        void validate_spreads(const angular_spec &ang)
        {
            for (double v : {ang.delta_azimuth, ang.delta_elevation, ang.sigma_azimuth, ang.sigma_elevation})
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw invalid_param("angular spreads must be finite and >= 0");
            if (!(ang.beta >= 0.0) || !std::isfinite(ang.beta))
                throw invalid_param("beta must be finite and >= 0");
            if (!std::isfinite(ang.azimuth) || !std::isfinite(ang.elevation))
                throw invalid_param("nominal angles must be finite");
        }

        std::size_t resolution_nodes(double half_width, double aperture)
        {
            return static_cast<std::size_t>(std::ceil(4.0 * half_width * aperture));
        }

        enum class spread_shape
        {
            uniform,
            gaussian
        };

        // Angular deviations and probability weights (sum 1) for one integration dimension
        quadrature_rule deviation_rule(spread_shape shape, double spread, double aperture,
                                       const quadrature_config &quad, const char *who, warning_list *warnings)
        {
            if (spread == 0.0)
                return {{0.0}, {1.0}};

            const double half_width = shape == spread_shape::uniform ? spread : quad.gaussian_truncation * spread;
            std::size_t n = quad.nodes_per_dim;
            const std::size_t need = resolution_nodes(half_width, aperture);
            if (n < need)
            {
                if (quad.auto_nodes)
                    n = need + 16;
                else if (warnings)
                    warnings->push_back(std::string(who) + ": " + std::to_string(n) + " quadrature nodes < " +
                                        std::to_string(need) + " needed for this spread and aperture");
            }

            quadrature_rule rule = gauss_legendre(n, -half_width, half_width);
            if (shape == spread_shape::gaussian)
                for (std::size_t i = 0; i < n; ++i)
                {
                    const double x = rule.nodes[i] / spread;
                    rule.weights[i] *= std::exp(-0.5 * x * x);
                }
            double total = 0.0;
            for (const double w : rule.weights)
                total += w;
            for (auto &w : rule.weights)
                w /= total;
            return rule;
        }

        // R(m, n) = beta * lag[m - n] for m >= n, Hermitian mirror above the diagonal
        arma::cx_mat toeplitz_from_lags(const std::vector<cx> &lag, double beta)
        {
            const arma::uword M = lag.size();
            arma::cx_mat R(M, M);
            for (arma::uword n = 0; n < M; ++n)
            {
                R(n, n) = beta;
                for (arma::uword m = n + 1; m < M; ++m)
                {
                    R(m, n) = beta * lag[m - n];
                    R(n, m) = std::conj(R(m, n));
                }
            }
            return R;
        }

        arma::cx_mat ula_from_rule(const ula_geometry &geom, double azimuth, double beta, const quadrature_rule &rule)
        {
            const arma::uword M = geom.antennas;
            std::vector<cx> lag(M, cx(0.0));
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            {
                const double k = two_pi * geom.spacing * std::sin(azimuth + rule.nodes[i]);
                for (arma::uword l = 1; l < M; ++l)
                    lag[l] += rule.weights[i] * std::polar(1.0, k * static_cast<double>(l));
            }
            return toeplitz_from_lags(lag, beta);
        }

        arma::cx_mat upa_from_rules(const upa_geometry &geom, const angular_spec &ang, const quadrature_rule &az,
                                    const quadrature_rule &el)
        {
            const arma::uword MH = geom.horizontal, MV = geom.vertical, M = geom.antennas();
            const long H = static_cast<long>(MH), V = static_cast<long>(MV);
            const std::size_t n_az = az.nodes.size(), n_el = el.nodes.size();

            std::vector<double> sin_az(n_az);
            for (std::size_t j = 0; j < n_az; ++j)
                sin_az[j] = std::sin(ang.azimuth + az.nodes[j]);

            // inner(k, a) = sum_j w_j exp(i 2 pi d_H a cos(theta_k) sin(phi_j)), a = 0..MH-1
            std::vector<cx> inner(n_el * MH, cx(0.0));
            std::vector<double> sin_el(n_el);
            for (std::size_t k = 0; k < n_el; ++k)
            {
                const double theta = ang.elevation + el.nodes[k];
                sin_el[k] = std::sin(theta);
                const double c = two_pi * geom.spacing_h * std::cos(theta);
                for (long a = 0; a < H; ++a)
                {
                    cx acc = 0.0;
                    for (std::size_t j = 0; j < n_az; ++j)
                        acc += az.weights[j] * std::polar(1.0, c * static_cast<double>(a) * sin_az[j]);
                    inner[k * MH + a] = acc;
                }
            }

            // lag(a, b) for a in [-(MH-1), MH-1], b in [-(MV-1), MV-1]
            const long width = 2 * H - 1;
            std::vector<cx> lag(static_cast<std::size_t>(width * (2 * V - 1)), cx(0.0));
            for (long b = -(V - 1); b < V; ++b)
                for (long a = -(H - 1); a < H; ++a)
                {
                    cx acc = 0.0;
                    for (std::size_t k = 0; k < n_el; ++k)
                    {
                        const cx in = a >= 0 ? inner[k * MH + a] : std::conj(inner[k * MH - a]);
                        acc += el.weights[k] * std::polar(1.0, two_pi * geom.spacing_v * b * sin_el[k]) * in;
                    }
                    lag[(b + V - 1) * width + (a + H - 1)] = acc;
                }

            arma::cx_mat R(M, M);
            for (arma::uword n = 0; n < M; ++n)
            {
                const long py_n = static_cast<long>(n % MH), pz_n = static_cast<long>(n / MH);
                R(n, n) = ang.beta;
                for (arma::uword m = n + 1; m < M; ++m)
                {
                    const long a = static_cast<long>(m % MH) - py_n;
                    const long b = static_cast<long>(m / MH) - pz_n;
                    R(m, n) = ang.beta * lag[(b + V - 1) * width + (a + H - 1)];
                    R(n, m) = std::conj(R(m, n));
                }
            }
            return R;
        }
    }

    std::size_t required_nodes(double half_width, double spacing, arma::uword antennas)
    {
        return resolution_nodes(half_width, spacing * static_cast<double>(antennas));
    }

    arma::cx_vec steering_vector_ula(const ula_geometry &geom, double azimuth, cx gain)
    {
        validate(geom);
        arma::cx_vec a(geom.antennas);
        const double k = two_pi * geom.spacing * std::sin(azimuth);
        for (arma::uword m = 0; m < geom.antennas; ++m)
            a(m) = gain * std::polar(1.0, k * static_cast<double>(m));
        return a;
    }

    arma::cx_vec steering_vector_upa(const upa_geometry &geom, double azimuth, double elevation, cx gain)
    {
        validate(geom);
        const arma::uword M = geom.antennas();
        arma::cx_vec a(M);
        const double kh = two_pi * geom.spacing_h * std::cos(elevation) * std::sin(azimuth);
        const double kv = two_pi * geom.spacing_v * std::sin(elevation);
        for (arma::uword i = 0; i < M; ++i)
        {
            const double py = static_cast<double>(i % geom.horizontal);
            const double pz = static_cast<double>(i / geom.horizontal);
            a(i) = gain * std::polar(1.0, kh * py + kv * pz);
        }
        return a;
    }

    std::pair<arma::uword, arma::uword> upa_antenna_index(const upa_geometry &geom, arma::uword m)
    {
        validate(geom);
        if (m < 1 || m > geom.antennas())
            throw invalid_param("UPA antenna index " + std::to_string(m) + " outside 1.." +
                                std::to_string(geom.antennas()));
        return {(m - 1) % geom.horizontal, (m - 1) / geom.horizontal};
    }

    arma::cx_mat onering_ula(const ula_geometry &geom, const angular_spec &ang, const quadrature_config &quad,
                             warning_list *warnings)
    {
        validate(geom);
        validate(quad);
        validate_spreads(ang);
        const auto rule = deviation_rule(spread_shape::uniform, ang.delta_azimuth,
                                         geom.spacing * static_cast<double>(geom.antennas), quad, "onering_ula",
                                         warnings);
        return ula_from_rule(geom, ang.azimuth, ang.beta, rule);
    }

    arma::cx_mat gaussian_ula_numeric(const ula_geometry &geom, const angular_spec &ang,
                                      const quadrature_config &quad, warning_list *warnings)
    {
        validate(geom);
        validate(quad);
        validate_spreads(ang);
        const auto rule = deviation_rule(spread_shape::gaussian, ang.sigma_azimuth,
                                         geom.spacing * static_cast<double>(geom.antennas), quad,
                                         "gaussian_ula_numeric", warnings);
        return ula_from_rule(geom, ang.azimuth, ang.beta, rule);
    }

    namespace
    {
        // Closed-form Gaussian kernel for lags 0..M-1 at nominal angle phi
        void accumulate_closed_kernel(std::vector<cx> &lag, double spacing, double azimuth, double sigma,
                                      double weight)
        {
            const double k_sin = two_pi * spacing * std::sin(azimuth);
            const double k_cos = two_pi * spacing * std::cos(azimuth);
            for (std::size_t l = 0; l < lag.size(); ++l)
            {
                const double dl = static_cast<double>(l);
                const double spread = sigma * k_cos * dl;
                lag[l] += weight * std::exp(-0.5 * spread * spread) * std::polar(1.0, k_sin * dl);
            }
        }
    }

    arma::cx_mat gaussian_ula_closed(const ula_geometry &geom, const angular_spec &ang, warning_list *warnings)
    {
        validate(geom);
        validate_spreads(ang);
        constexpr double validity_limit = 15.0 * std::numbers::pi / 180.0;
        if (warnings && ang.sigma_azimuth > validity_limit + 1e-12)
            warnings->push_back("gaussian_ula_closed: ASD above 15 degrees, small-angle approximation is inaccurate");
        std::vector<cx> lag(geom.antennas, cx(0.0));
        accumulate_closed_kernel(lag, geom.spacing, ang.azimuth, ang.sigma_azimuth, 1.0);
        return toeplitz_from_lags(lag, ang.beta);
    }

    arma::cx_mat gaussian_ula_shadowed(const ula_geometry &geom, const angular_spec &ang, const arma::vec &shadow_db,
                                       const arma::vec &scatterer_angles)
    {
        validate(geom);
        validate_spreads(ang);
        const arma::uword M = geom.antennas;
        if (shadow_db.n_elem != M)
            throw invalid_param("gaussian_ula_shadowed: shadowing vector length must equal the antenna count");
        if (scatterer_angles.n_elem < 1)
            throw invalid_param("gaussian_ula_shadowed: at least one scatterer required");

        std::vector<cx> lag(M, cx(0.0));
        const double w = 1.0 / static_cast<double>(scatterer_angles.n_elem);
        for (const double phi : scatterer_angles)
            accumulate_closed_kernel(lag, geom.spacing, phi, ang.sigma_azimuth, w);

        arma::vec gain(M);
        for (arma::uword m = 0; m < M; ++m)
            gain(m) = std::pow(10.0, shadow_db(m) / 10.0);

        arma::cx_mat R(M, M);
        for (arma::uword n = 0; n < M; ++n)
        {
            R(n, n) = ang.beta * gain(n) * gain(n);
            for (arma::uword m = n + 1; m < M; ++m)
            {
                R(m, n) = ang.beta * gain(m) * gain(n) * lag[m - n];
                R(n, m) = std::conj(R(m, n));
            }
        }
        return R;
    }

    arma::vec draw_scatterer_angles(arma::uword scatterers, double lo, double hi, rng_engine &rng)
    {
        if (scatterers < 1)
            throw invalid_param("draw_scatterer_angles: at least one scatterer required");
        if (!(hi >= lo))
            throw invalid_param("draw_scatterer_angles: empty interval");
        arma::vec phi(scatterers);
        for (auto &v : phi)
            v = uniform(lo, hi, rng);
        return phi;
    }

    arma::cx_mat onering_upa(const upa_geometry &geom, const angular_spec &ang, const quadrature_config &quad,
                             warning_list *warnings)
    {
        validate(geom);
        validate(quad);
        validate_spreads(ang);
        const double ap_h = geom.spacing_h * static_cast<double>(geom.horizontal);
        const double ap_v = geom.spacing_v * static_cast<double>(geom.vertical);
        const auto az = deviation_rule(spread_shape::uniform, ang.delta_azimuth, ap_h, quad, "onering_upa", warnings);
        const auto el = deviation_rule(spread_shape::uniform, ang.delta_elevation, ap_h + ap_v, quad, "onering_upa",
                                       warnings);
        return upa_from_rules(geom, ang, az, el);
    }

    arma::cx_mat gaussian_upa(const upa_geometry &geom, const angular_spec &ang, const quadrature_config &quad,
                              warning_list *warnings)
    {
        validate(geom);
        validate(quad);
        validate_spreads(ang);
        const double ap_h = geom.spacing_h * static_cast<double>(geom.horizontal);
        const double ap_v = geom.spacing_v * static_cast<double>(geom.vertical);
        const auto az =
            deviation_rule(spread_shape::gaussian, ang.sigma_azimuth, ap_h, quad, "gaussian_upa", warnings);
        const auto el =
            deviation_rule(spread_shape::gaussian, ang.sigma_elevation, ap_h + ap_v, quad, "gaussian_upa", warnings);
        return upa_from_rules(geom, ang, az, el);
    }
}
