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

#ifndef CHANSIM_XLMIMO_HPP
#define CHANSIM_XLMIMO_HPP

#include <armadillo>
#include <array>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "chansim/errors.hpp"
#include "chansim/gbsm.hpp"
#include "chansim/random.hpp"

// Non-stationary XL-MIMO channels. The array lies on the x-axis centred at the origin, users and
// clusters sit in the half-plane y > 0. Distances in meters, angles in radians.
namespace chansim::xlmimo
{
    struct point
    {
        double x = 0.0;
        double y = 0.0;
    };

    double distance(const point &a, const point &b);

    // Z = 2 D^2 / lambda
    double rayleigh_distance(double aperture, double wavelength);

    struct array_geometry
    {
        arma::uword antennas = 100;
        double wavelength = 0.125;
        double element_spacing = 5.0; // in wavelengths

        double pitch() const { return element_spacing * wavelength; }
        double length() const { return static_cast<double>(antennas - 1) * pitch(); } // L_BS
    };

    void validate(const array_geometry &geom);

    // x coordinate of antenna n (0-based)
    double antenna_position(const array_geometry &geom, arma::uword n);

    enum class scheme_kind
    {
        scheme1, // clusters on a circle of radius d1 around the array centre
        scheme2  // clusters on a line parallel to the array at distance d2
    };

    struct cluster_scheme
    {
        scheme_kind kind = scheme_kind::scheme1;
        double d1 = 35.0;
        double d2 = 20.0;
        double arc_min = -std::numbers::pi / 3.0; // scheme1 azimuth from broadside
        double arc_max = std::numbers::pi / 3.0;
        std::optional<double> span_min; // scheme2 x interval, defaults to the array extent
        std::optional<double> span_max;
    };

    void validate(const cluster_scheme &scheme);

    struct cluster
    {
        point center;
        double radius = 0.0;
        arma::uword vr_first = 0;  // first antenna of the VR span (0-based)
        arma::uvec mask;           // visibility over the span, 1 visible / 0 obstructed
    };

    // Centres and radii of clusters_per_user clusters for each user; VR fields left empty
    std::vector<std::vector<cluster>> place_clusters(const cluster_scheme &scheme, const array_geometry &geom,
                                                     arma::uword users, arma::uword clusters_per_user, double r_min,
                                                     double r_max, rng_engine &rng);

    struct vr_params
    {
        double r_min = 5.0;
        double r_max = 10.0;
        double p0 = 0.05; // probability of an obstructed antenna
        double p1 = 0.95; // probability of a visible antenna
        double c = 0.05;  // growth of the escape probability per obstructed antenna
    };

    void validate(const vr_params &vr);

    // M_VR = ceil(M * 2 r / L_BS), not truncated
    arma::uword vr_length(const array_geometry &geom, double radius);

    // Probability vector [P(obstructed), P(visible)] used for each draw of the chain
    using prob_vector = std::array<double, 2>;

    // Two-state visibility chain of the VR generator over `length` antennas. The first state is
    // equiprobable. If `trace` is given it receives the vector used for every draw after the first.
    arma::uvec visibility_chain(arma::uword length, const vr_params &vr, rng_engine &rng,
                                std::vector<prob_vector> *trace = nullptr);

    struct vr_draw
    {
        double radius;
        arma::uvec mask; // length min(M_VR, M)
    };

    // Radius uniform in [r_min, r_max], then the visibility chain over the VR length
    vr_draw generate_vr(const array_geometry &geom, const vr_params &vr, rng_engine &rng);

    // Antenna nearest to x (ties to the lower index)
    arma::uword nearest_antenna(const array_geometry &geom, double x);

    // First antenna (0-based) of a span of `length` centred on the antenna nearest the projection
    // of `center`, shifted inward at the array edges
    arma::uword position_vr(const array_geometry &geom, const point &center, arma::uword length);

    struct pathloss_params
    {
        double L0_db = -34.53;
        double d0 = 1.0;
        double alpha_vr = 3.0;
        double alpha_nvr = 6.0; // +infinity: no energy outside the VR
        double A = 1.0;         // linear power normalization
    };

    void validate(const pathloss_params &pl);

    // A that makes the gain at distance d unity with exponent alpha_vr: (d/d0)^alpha * 10^(-L0/10)
    double unit_gain_normalization(double distance, const pathloss_params &pl);

    // beta(n) = sqrt(10^(L(n)/10) * A) with L(n) = L0 - 10 alpha log10(d(n)/d0),
    // d(n) = |antenna_n - cluster| + |cluster - user|. Obstructed antennas get 0.
    arma::vec pathloss_per_antenna(const cluster &cl, const point &user, const array_geometry &geom,
                                   const pathloss_params &pl, warning_list *warnings = nullptr);

    // beta o (R^(1/2) z)
    arma::cx_vec cluster_channel(const arma::vec &beta, const arma::cx_mat &R, rng_engine &rng);

    // beta o (S z) with a precomputed square-root factor; an empty S means identity
    arma::cx_vec cluster_channel_factored(const arma::vec &beta, const arma::cx_mat &S, rng_engine &rng);

    enum class cluster_model
    {
        uncorrelated,
        exponential,
        onering
    };

    struct cluster_correlation
    {
        cluster_model model = cluster_model::onering;
        double rho = 0.5;                                 // exponential model
        double spread = 10.0 * std::numbers::pi / 180.0;  // one-ring half-width
        double spacing = 0.5;                             // correlation kernel spacing in wavelengths
        gbsm::quadrature_config quad{201, 6.0, true};
    };

    struct xl_config
    {
        array_geometry array;
        cluster_scheme scheme;
        vr_params vr;
        pathloss_params pathloss;
        std::optional<double> normalization; // defaults to unit_gain_normalization(user_distance)
        cluster_correlation correlation;
        arma::uword users = 10;
        arma::uword clusters_per_user = 2;
        double user_distance = 40.0; // users at broadside, (0, user_distance)
    };

    void validate(const xl_config &cfg);

    // Immutable per-realization geometry: clusters, their VRs, amplitudes and correlation factors
    struct xl_scenario
    {
        arma::uword antennas = 0;
        std::vector<point> users;
        std::vector<std::vector<cluster>> clusters;
        std::vector<std::vector<arma::vec>> beta;
        std::vector<std::vector<arma::cx_mat>> factors; // R^(1/2); empty = identity
    };

    // AoA of the cluster seen from the centre of its VR span, from broadside
    double cluster_aoa(const array_geometry &geom, const cluster &cl);

    // Correlation matrix of one cluster under the configured model
    arma::cx_mat cluster_correlation_matrix(const xl_config &cfg, const cluster &cl, warning_list *warnings = nullptr);

    xl_scenario build_scenario(const xl_config &cfg, rng_engine &rng, warning_list *warnings = nullptr);

    // sum over the user's clusters of cluster_channel_factored
    arma::cx_vec user_channel(const xl_scenario &sc, arma::uword k, rng_engine &rng);

    // H = [h_1 ... h_K], fresh small-scale fading per call
    arma::cx_mat assemble_channel_matrix(const xl_scenario &sc, rng_engine &rng);
}

#endif
