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

#ifndef CHANSIM_LINALG_HPP
#define CHANSIM_LINALG_HPP

#include <armadillo>
#include <complex>

#include "chansim/random.hpp"

namespace chansim
{
    using cx = std::complex<double>;

    // Relative tolerance below which negative eigenvalues count as roundoff of a PSD matrix
    inline constexpr double psd_tolerance = 1e-8;

    // Eigenvalues (or singular values) sorted nonincreasing, with the matching unitary factor
    struct spectrum
    {
        arma::vec values;
        arma::cx_mat vectors; // columns match `values`; empty when only values were requested
    };

    // Largest |A(m,n) - conj(A(n,m))|
    double hermitian_residual(const arma::cx_mat &A);

    // Hermitian within rel_tol * max|A|
    bool is_hermitian(const arma::cx_mat &A, double rel_tol = 1e-12);

    // Throws invalid_matrix on empty, non-square (if required) or non-finite input
    void require_valid(const arma::cx_mat &A, bool square = false);

    // A = U diag(values) U^H, values nonincreasing. Only the Hermitian part of A is used.
    spectrum hermitian_eig(const arma::cx_mat &A);
    arma::vec hermitian_eigenvalues(const arma::cx_mat &A);

    // Hermitian square root S (S S^H = A). Eigenvalues in [-1e-8 lambda_max, 0) are clipped to
    // zero, anything more negative raises not_psd. Eigendecomposition instead of Cholesky because
    // correlation matrices with narrow angular spread are numerically rank-deficient.
    arma::cx_mat psd_sqrt(const arma::cx_mat &A);

    // Singular values, nonincreasing
    arma::vec singular_values(const arma::cx_mat &A);

    // sigma_max / sigma_min, +infinity once sigma_min < 1e-300. All-zero input -> invalid_matrix.
    double condition_number(const arma::cx_mat &A);

    // log2 det(I + scale * R) = sum_i log2(1 + scale * lambda_i), evaluated from the eigenvalues
    double log2_det_ipm(const arma::cx_mat &R, double scale);

    // S * z with z ~ CN(0, I)
    arma::cx_vec sample_correlated(const arma::cx_mat &S, rng_engine &rng);
}

#endif
