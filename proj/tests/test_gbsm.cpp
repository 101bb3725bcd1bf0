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

#include <catch2/catch_amalgamated.hpp>

#include "chansim/cbsm.hpp"
#include "chansim/gbsm.hpp"
#include "chansim/linalg.hpp"
#include "chansim/metrics.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>

using namespace chansim;
using namespace chansim::gbsm;

namespace
{
    constexpr double deg = std::numbers::pi / 180.0;

    bool is_toeplitz(const arma::cx_mat &R, double tol)
    {
        for (arma::uword m = 1; m < R.n_rows; ++m)
            for (arma::uword n = 1; n < R.n_cols; ++n)
                if (std::abs(R(m, n) - R(m - 1, n - 1)) > tol)
                    return false;
        return true;
    }

    // Largest eigenvalue share: 1 for a rank-1 matrix
    double rank1_share(const arma::cx_mat &R)
    {
        const arma::vec l = hermitian_eigenvalues(R);
        return l(0) / arma::sum(arma::clamp(l, 0.0, arma::datum::inf));
    }

    void check_valid(const arma::cx_mat &R, double diag)
    {
        CHECK(hermitian_residual(R) <= 1e-12 * arma::abs(R).max());
        const arma::vec l = hermitian_eigenvalues(R);
        CHECK(l(l.n_elem - 1) >= -1e-8 * l(0));
        CHECK(arma::abs(arma::real(R.diag()) - diag).max() <= 1e-10 * diag);
    }
}

TEST_CASE("ULA steering vector")
{
    CHECK(arma::approx_equal(steering_vector_ula({2, 0.5}, 0.0), arma::cx_vec{1.0, 1.0}, "absdiff", 0.0));

    const arma::cx_vec a = steering_vector_ula({6, 0.5}, std::numbers::pi / 2.0);
    for (arma::uword m = 0; m < 6; ++m)
        CHECK(std::abs(a(m) - cx(m % 2 ? -1.0 : 1.0)) < 1e-12);

    const cx g(0.3, -2.0);
    const arma::cx_vec b = steering_vector_ula({17, 1.3}, 0.77, g);
    CHECK(arma::accu(arma::square(arma::abs(b))) == Catch::Approx(17.0 * std::norm(g)));
}

TEST_CASE("UPA antenna index")
{
    const upa_geometry geom{4, 3, 0.5, 0.5};
    CHECK(upa_antenna_index(geom, 1) == std::pair<arma::uword, arma::uword>{0, 0});
    CHECK(upa_antenna_index(geom, 5) == std::pair<arma::uword, arma::uword>{0, 1});
    CHECK(upa_antenna_index(geom, 7) == std::pair<arma::uword, arma::uword>{2, 1});
    CHECK(upa_antenna_index(geom, 12) == std::pair<arma::uword, arma::uword>{3, 2});
    CHECK_THROWS_AS(upa_antenna_index(geom, 0), invalid_param);
    CHECK_THROWS_AS(upa_antenna_index(geom, 13), invalid_param);

    // steering vector ordering follows the index
    const arma::cx_vec a = steering_vector_upa(geom, 0.4, 0.2);
    const auto [py, pz] = upa_antenna_index(geom, 7);
    const double phase = 2.0 * std::numbers::pi * (0.5 * py * std::cos(0.2) * std::sin(0.4) + 0.5 * pz * std::sin(0.2));
    CHECK(std::abs(a(6) - std::polar(1.0, phase)) < 1e-12);
}

TEST_CASE("One-ring ULA")
{
    const ula_geometry geom{16, 0.5};
    angular_spec ang;
    ang.azimuth = 30.0 * deg;
    ang.delta_azimuth = 20.0 * deg;
    ang.beta = 2.5;

    const arma::cx_mat R = onering_ula(geom, ang);
    check_valid(R, 2.5);
    CHECK(is_toeplitz(R, 1e-10));

    SECTION("matches a trapezoid oracle")
    {
        angular_spec a2;
        a2.delta_azimuth = 10.0 * deg;
        const arma::cx_mat R2 = onering_ula({2, 0.5}, a2);
        CHECK(std::abs(R2(0, 1) - oracle::onering_lag(0.5, 0.0, 10.0 * deg, -1.0)) <= 1e-8);
        CHECK(std::abs(R2(1, 0) - oracle::onering_lag(0.5, 0.0, 10.0 * deg, 1.0)) <= 1e-8);
    }
    SECTION("zero spread is rank one")
    {
        angular_spec a0 = ang;
        a0.delta_azimuth = 0.0;
        const arma::cx_mat R0 = onering_ula(geom, a0);
        const arma::cx_vec s = steering_vector_ula(geom, ang.azimuth);
        CHECK(arma::abs(R0 - 2.5 * s * s.t()).max() < 1e-12);
        const arma::vec l = hermitian_eigenvalues(R0);
        CHECK(l(0) == Catch::Approx(16.0 * 2.5));
        CHECK(rank1_share(R0) == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("node doubling converges")
    {
        quadrature_config q2;
        q2.nodes_per_dim = 402;
        CHECK(arma::abs(onering_ula(geom, ang, q2) - R).max() < 1e-8);
    }
    SECTION("resolution warning")
    {
        angular_spec wide = ang;
        wide.delta_azimuth = 60.0 * deg;
        const ula_geometry big{200, 2.0};
        warning_list w;
        onering_ula(big, wide, {}, &w);
        REQUIRE(w.size() == 1);
        CHECK(w[0].find("quadrature nodes") != std::string::npos);

        warning_list none;
        quadrature_config autoq;
        autoq.auto_nodes = true;
        onering_ula(big, wide, autoq, &none);
        CHECK(none.empty());
    }
    SECTION("invalid input")
    {
        CHECK_THROWS_AS(onering_ula({0, 0.5}, ang), invalid_param);
        CHECK_THROWS_AS(onering_ula({4, 0.0}, ang), invalid_param);
        CHECK_THROWS_AS(onering_ula(geom, ang, {2, 6.0, false}), invalid_param);
        angular_spec bad = ang;
        bad.delta_azimuth = -0.1;
        CHECK_THROWS_AS(onering_ula(geom, bad), invalid_param);
    }
}

TEST_CASE("One-ring numerical rank grows with the spread")
{
    // sigma_min of these matrices is below double precision, so only the resolvable part of
    // the spectrum carries the trend
    const ula_geometry geom{100, 0.5};
    arma::uword prev = 0;
    for (double delta : {5.0, 15.0, 45.0})
    {
        angular_spec ang;
        ang.azimuth = 30.0 * deg;
        ang.delta_azimuth = delta * deg;
        const arma::vec s = singular_values(onering_ula(geom, ang));
        const arma::uword rank = arma::accu(s > 1e-10 * s(0));
        CHECK(rank > prev);
        CHECK(s(0) / s(99) > 1e14);
        prev = rank;
    }
}

TEST_CASE("One-ring capacity bound against the fixture")
{
    std::ifstream in(CHANSIM_FIXTURE_DIR "/capacity_oracle.json");
    REQUIRE(in.good());
    const auto fx = nlohmann::json::parse(in)["onering_ula"];
    const double eta = metrics::db_to_linear(fx["snr_db"].get<double>());
    const ula_geometry geom{fx["antennas"].get<arma::uword>(), fx["spacing"].get<double>()};

    std::vector<double> ub;
    for (std::size_t i = 0; i < fx["azimuth_deg"].size(); ++i)
    {
        angular_spec ang;
        ang.azimuth = fx["azimuth_deg"][i].get<double>() * deg;
        ang.delta_azimuth = fx["azimuth_spread_deg"].get<double>() * deg;
        ub.push_back(metrics::capacity_ub(onering_ula(geom, ang), eta, geom.antennas));
        CHECK(ub.back() == Catch::Approx(fx["capacity_ub"][i].get<double>()).epsilon(1e-6));
    }
    CHECK(ub[0] > 2.0 * ub[1]);
}

TEST_CASE("Gaussian ULA")
{
    angular_spec ang;
    ang.azimuth = std::numbers::pi / 6.0;
    ang.sigma_azimuth = 10.0 * deg;
    ang.beta = 0.7;

    SECTION("numeric model matches a trapezoid oracle")
    {
        angular_spec a1 = ang;
        a1.beta = 1.0;
        const arma::cx_mat R = gaussian_ula_numeric({4, 0.5}, a1);
        const arma::cx_mat ref = oracle::ula_from_lag(
            4, [&](double l) { return oracle::gaussian_lag(0.5, a1.azimuth, a1.sigma_azimuth, l); });
        CHECK(arma::abs(R - ref).max() <= 1e-7);
    }
    SECTION("structure")
    {
        const arma::cx_mat N = gaussian_ula_numeric({24, 0.5}, ang);
        check_valid(N, 0.7);
        CHECK(is_toeplitz(N, 1e-10));
        const arma::cx_mat C = gaussian_ula_closed({24, 0.5}, ang);
        check_valid(C, 0.7);
        CHECK(is_toeplitz(C, 1e-12));
    }
    SECTION("zero ASD is rank one")
    {
        angular_spec a0 = ang;
        a0.sigma_azimuth = 0.0;
        CHECK(rank1_share(gaussian_ula_numeric({12, 0.5}, a0)) == Catch::Approx(1.0).epsilon(1e-12));
        const arma::cx_mat C0 = gaussian_ula_closed({12, 0.5}, a0);
        CHECK(arma::abs(arma::abs(C0) - 0.7).max() < 1e-14);
        CHECK(rank1_share(C0) == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("closed form approaches the numeric model as the ASD shrinks")
    {
        double prev = arma::datum::inf;
        for (double sigma : {10.0, 5.0, 2.0})
        {
            angular_spec a = ang;
            a.sigma_azimuth = sigma * deg;
            const double err =
                arma::abs(gaussian_ula_numeric({100, 0.5}, a) - gaussian_ula_closed({100, 0.5}, a)).max() / a.beta;
            CHECK(err < prev);
            CHECK(err < 0.05);
            prev = err;
        }
        CHECK(prev < 0.01);
    }
    SECTION("validity warning")
    {
        warning_list w;
        gaussian_ula_closed({8, 0.5}, ang, &w);
        CHECK(w.empty());
        angular_spec wide = ang;
        wide.sigma_azimuth = 20.0 * deg;
        gaussian_ula_closed({8, 0.5}, wide, &w);
        CHECK(w.size() == 1);
    }
}

TEST_CASE("Gaussian ULA with shadowing")
{
    const ula_geometry geom{100, 0.5};
    angular_spec ang;
    ang.azimuth = 30.0 * deg;
    ang.sigma_azimuth = 10.0 * deg;
    ang.beta = 1.5;

    SECTION("reduces to the closed form")
    {
        const arma::cx_mat R = gaussian_ula_shadowed(geom, ang, arma::zeros(100), arma::vec{ang.azimuth});
        CHECK(arma::abs(R - gaussian_ula_closed(geom, ang)).max() < 1e-14);
    }
    SECTION("diagonal and validity")
    {
        rng_engine rng = derive_stream(2, 0);
        const arma::vec f = cbsm::draw_shadowing(100, 3.0, rng);
        const arma::vec phis = draw_scatterer_angles(4, 0.0, 2.0 * std::numbers::pi, rng);
        REQUIRE(phis.n_elem == 4);
        CHECK(arma::all(phis >= 0.0));
        CHECK(arma::all(phis < 2.0 * std::numbers::pi));
        const arma::cx_mat R = gaussian_ula_shadowed(geom, ang, f, phis);
        for (arma::uword m = 0; m < 100; ++m)
            REQUIRE(R(m, m).real() == Catch::Approx(1.5 * std::pow(10.0, 2.0 * f(m) / 10.0)).epsilon(1e-12));
        CHECK(hermitian_residual(R) <= 1e-12 * arma::abs(R).max());
    }
    SECTION("shadowing scales rows and columns")
    {
        rng_engine rng = derive_stream(4, 0);
        const arma::vec f = cbsm::draw_shadowing(100, 2.0, rng);
        const arma::vec phi{ang.azimuth};
        const arma::cx_mat D = arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::exp10(f / 10.0)));
        const arma::cx_mat R0 = gaussian_ula_shadowed(geom, ang, arma::zeros(100), phi);
        const arma::cx_mat R2 = gaussian_ula_shadowed(geom, ang, f, phi);
        CHECK(arma::abs(R2 - D * R0 * D).max() <= 1e-12 * arma::abs(R2).max());
    }
    SECTION("several scatterers average their kernels")
    {
        const arma::vec phis{0.1, 0.9, 2.0};
        const arma::cx_mat R = gaussian_ula_shadowed(geom, ang, arma::zeros(100), phis);
        arma::cx_mat ref(100, 100, arma::fill::zeros);
        for (double p : phis)
        {
            angular_spec a = ang;
            a.azimuth = p;
            ref += gaussian_ula_closed(geom, a) / 3.0;
        }
        CHECK(arma::abs(R - ref).max() < 1e-13);
    }
}

TEST_CASE("One-ring UPA")
{
    const upa_geometry geom{2, 2, 0.5, 0.5};
    angular_spec ang;
    ang.delta_azimuth = 10.0 * deg;
    ang.delta_elevation = 2.0 * deg;

    const arma::cx_mat R = onering_upa(geom, ang);
    check_valid(R, 1.0);

    const auto box = [](double half) { return [half](double) { return 1.0 / (2.0 * half); }; };
    const arma::cx_mat ref = oracle::upa_matrix(2, 2, 0.5, 0.5, 0.0, 0.0, box(10.0 * deg), 10.0 * deg, box(2.0 * deg),
                                                2.0 * deg);
    CHECK(arma::abs(R - ref).max() <= 1e-7);

    angular_spec a0;
    a0.azimuth = 0.3;
    a0.elevation = 0.1;
    const upa_geometry g3{3, 4, 0.5, 0.7};
    const arma::cx_mat R0 = onering_upa(g3, a0);
    const arma::cx_vec s = steering_vector_upa(g3, 0.3, 0.1);
    CHECK(arma::abs(R0 - s * s.t()).max() < 1e-12);
}

TEST_CASE("Gaussian UPA")
{
    const upa_geometry geom{2, 2, 0.5, 0.5};
    angular_spec ang;
    ang.azimuth = 0.2;
    ang.elevation = 0.1;
    ang.sigma_azimuth = 10.0 * deg;
    ang.sigma_elevation = 3.0 * deg;
    ang.beta = 2.0;

    const arma::cx_mat R = gaussian_upa(geom, ang);
    check_valid(R, 2.0);

    const auto pdf = [](double s) { return [s](double x) { return oracle::gaussian_pdf(x, s); }; };
    const arma::cx_mat ref = 2.0 * oracle::upa_matrix(2, 2, 0.5, 0.5, 0.2, 0.1, pdf(10.0 * deg), 100.0 * deg,
                                                      pdf(3.0 * deg), 30.0 * deg);
    CHECK(arma::abs(R - ref).max() <= 1e-7);

    angular_spec a0;
    const arma::cx_mat R0 = gaussian_upa({3, 3, 0.5, 0.5}, a0);
    CHECK(rank1_share(R0) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Gaussian UPA bound exceeds one-ring UPA")
{
    const upa_geometry geom{10, 10, 0.5, 0.5};
    const double eta = metrics::db_to_linear(60.0);
    angular_spec g, o;
    g.sigma_azimuth = o.delta_azimuth = 30.0 * deg;
    g.sigma_elevation = o.delta_elevation = 10.0 * deg;
    quadrature_config q;
    q.auto_nodes = true;
    const double cg = metrics::capacity_ub(gaussian_upa(geom, g, q), eta, 100);
    const double co = metrics::capacity_ub(onering_upa(geom, o, q), eta, 100);
    CHECK(cg > co);
}
