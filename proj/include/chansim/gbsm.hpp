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

#ifndef CHANSIM_GBSM_HPP
#define CHANSIM_GBSM_HPP

#include <armadillo>
#include <complex>
#include <cstddef>
#include <utility>

#include "chansim/errors.hpp"
#include "chansim/random.hpp"

// Geometry-based stochastic models: local scattering around the user mapped to a spatial
// correlation matrix through the array response. All angles are in radians, all spacings in
// wavelengths. The nominal azimuth is measured from broadside of the array.
namespace chansim::gbsm
{
    // Uniform linear array along one axis
    struct ula_geometry
    {
        arma::uword antennas = 100;
        double spacing = 0.5;
    };

    // Uniform planar array; antenna m (1-based) sits at column mod(m-1, horizontal), row floor((m-1)/horizontal)
    struct upa_geometry
    {
        arma::uword horizontal = 10;
        arma::uword vertical = 10;
        double spacing_h = 0.5;
        double spacing_v = 0.5;

        arma::uword antennas() const { return horizontal * vertical; }
    };

    struct angular_spec
    {
        double azimuth = 0.0;         // nominal azimuth AoA
        double elevation = 0.0;       // nominal elevation AoA (UPA only)
        double delta_azimuth = 0.0;   // half-width of the uniform azimuth spread
        double delta_elevation = 0.0; // half-width of the uniform elevation spread
        double sigma_azimuth = 0.0;   // azimuth ASD of the Gaussian model
        double sigma_elevation = 0.0; // elevation ASD of the Gaussian model
        double beta = 1.0;            // large-scale power gain
    };

    struct quadrature_config
    {
        std::size_t nodes_per_dim = 201;
        double gaussian_truncation = 6.0; // Gaussian integrals cover +-truncation * sigma
        bool auto_nodes = false;          // raise the node count to the resolution heuristic instead of warning
    };

    void validate(const ula_geometry &geom);
    void validate(const upa_geometry &geom);
    void validate(const quadrature_config &quad);

    // Nodes needed to resolve exp(i 2 pi spacing (M-1) sin(phi + delta)) over |delta| <= half_width
    std::size_t required_nodes(double half_width, double spacing, arma::uword antennas);

    // g * [1, e^{i 2 pi d sin(phi)}, ..., e^{i 2 pi d (M-1) sin(phi)}]^T
    arma::cx_vec steering_vector_ula(const ula_geometry &geom, double azimuth, std::complex<double> gain = 1.0);

    // Plane-wave response of the UPA, elements ordered by upa_antenna_index
    arma::cx_vec steering_vector_upa(const upa_geometry &geom, double azimuth, double elevation,
                                     std::complex<double> gain = 1.0);

    // (p_y, p_z) of the 1-based antenna index m; out of range -> invalid_param
    std::pair<arma::uword, arma::uword> upa_antenna_index(const upa_geometry &geom, arma::uword m);

    // One-ring: azimuth uniform in [phi - delta, phi + delta]. delta = 0 gives the rank-1 limit.
    arma::cx_mat onering_ula(const ula_geometry &geom, const angular_spec &ang, const quadrature_config &quad = {},
                             warning_list *warnings = nullptr);

    // Gaussian local scattering, evaluated numerically over +-truncation * sigma
    arma::cx_mat gaussian_ula_numeric(const ula_geometry &geom, const angular_spec &ang,
                                      const quadrature_config &quad = {}, warning_list *warnings = nullptr);

    // Small-ASD closed form of the Gaussian model. Accurate below ~15 degrees; larger ASDs
    // are still evaluated but produce a warning.
    arma::cx_mat gaussian_ula_closed(const ula_geometry &geom, const angular_spec &ang,
                                     warning_list *warnings = nullptr);

    // Closed-form Gaussian model averaged over S scatterers with nominal angles `scatterer_angles`,
    // scaled per antenna pair by beta * 10^((f_m + f_n) / 10)
    arma::cx_mat gaussian_ula_shadowed(const ula_geometry &geom, const angular_spec &ang, const arma::vec &shadow_db,
                                       const arma::vec &scatterer_angles);

    // S scatterer angles uniform in [lo, hi)
    arma::vec draw_scatterer_angles(arma::uword scatterers, double lo, double hi, rng_engine &rng);

    // 3D one-ring: azimuth and elevation independently uniform around the nominal angles
    arma::cx_mat onering_upa(const upa_geometry &geom, const angular_spec &ang, const quadrature_config &quad = {},
                             warning_list *warnings = nullptr);

    // 3D Gaussian local scattering with independent azimuth / elevation deviations
    arma::cx_mat gaussian_upa(const upa_geometry &geom, const angular_spec &ang, const quadrature_config &quad = {},
                              warning_list *warnings = nullptr);
}

#endif
