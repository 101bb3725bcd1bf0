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

#include "chansim/linalg.hpp"
#include "chansim/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace chansim
{
    double hermitian_residual(const arma::cx_mat &A)
    {
        if (A.n_rows != A.n_cols)
            return std::numeric_limits<double>::infinity();
        double res = 0.0;
        for (arma::uword n = 0; n < A.n_cols; ++n)
            for (arma::uword m = n; m < A.n_rows; ++m)
                res = std::max(res, std::abs(A(m, n) - std::conj(A(n, m))));
        return res;
    }

    bool is_hermitian(const arma::cx_mat &A, double rel_tol)
    {
        if (A.n_rows != A.n_cols || A.is_empty())
            return false;
        const double scale = arma::abs(A).max();
        return hermitian_residual(A) <= rel_tol * scale;
    }

    void require_valid(const arma::cx_mat &A, bool square)
    {
        if (A.is_empty())
            throw invalid_matrix("matrix is empty");
        if (square && A.n_rows != A.n_cols)
            throw invalid_matrix("matrix is not square (" + std::to_string(A.n_rows) + "x" +
                                 std::to_string(A.n_cols) + ")");
        if (!A.is_finite())
            throw invalid_matrix("matrix has non-finite entries");
    }

    spectrum hermitian_eig(const arma::cx_mat &A)
    {
        require_valid(A, true);
        const arma::cx_mat H = 0.5 * (A + A.t());
        arma::vec values;
        arma::cx_mat vectors;
        if (!arma::eig_sym(values, vectors, H, "dc"))
            throw invalid_matrix("Hermitian eigendecomposition failed");
        // LAPACK returns ascending order
        return {arma::reverse(values), arma::fliplr(vectors)};
    }

    arma::vec hermitian_eigenvalues(const arma::cx_mat &A)
    {
        require_valid(A, true);
        if (A.is_diagmat()) // uncorrelated models need no LAPACK call
            return arma::sort(arma::vec(arma::real(A.diag())), "descend");
        const arma::cx_mat H = 0.5 * (A + A.t());
        arma::vec values;
        if (!arma::eig_sym(values, H))
            throw invalid_matrix("Hermitian eigendecomposition failed");
        return arma::reverse(values);
    }

    namespace
    {
        // Largest eigenvalue used as the PSD reference scale, throws on significant negatives
        double check_psd(const arma::vec &values)
        {
            const double lmax = std::max(values.front(), 0.0);
            const double lmin = values.back();
            if (lmin < -psd_tolerance * lmax || (lmax == 0.0 && lmin < 0.0))
                throw not_psd("matrix is not positive semidefinite (lambda_min = " + std::to_string(lmin) +
                              ", lambda_max = " + std::to_string(lmax) + ")");
            return lmax;
        }
    }

    arma::cx_mat psd_sqrt(const arma::cx_mat &A)
    {
        spectrum s = hermitian_eig(A);
        check_psd(s.values);
        const arma::vec root = arma::sqrt(arma::clamp(s.values, 0.0, arma::datum::inf));
        return s.vectors * arma::diagmat(root) * s.vectors.t();
    }

    arma::vec singular_values(const arma::cx_mat &A)
    {
        require_valid(A);
        arma::vec s;
        if (!arma::svd(s, A))
            throw invalid_matrix("singular value decomposition failed");
        return s; // Armadillo returns them in descending order
    }

    double condition_number(const arma::cx_mat &A)
    {
        const arma::vec s = singular_values(A);
        if (s.front() == 0.0)
            throw invalid_matrix("condition number of an all-zero matrix");
        if (s.back() < 1e-300)
            return std::numeric_limits<double>::infinity();
        return s.front() / s.back();
    }

    double log2_det_ipm(const arma::cx_mat &R, double scale)
    {
        if (!(scale >= 0.0) || !std::isfinite(scale))
            throw invalid_param("log2_det_ipm: scale must be finite and >= 0");
        const arma::vec values = hermitian_eigenvalues(R);
        check_psd(values);
        if (scale == 0.0)
            return 0.0;
        if (!R.is_diagmat())
        {
            // The determinant of I + sR via Cholesky avoids summing roundoff from near-zero eigenvalues
            arma::cx_mat L;
            const arma::cx_mat A = arma::eye<arma::cx_mat>(R.n_rows, R.n_cols) + scale * 0.5 * (R + R.t());
            if (arma::chol(L, A, "lower"))
                return 2.0 * arma::accu(arma::log(arma::real(L.diag()))) / std::numbers::ln2;
        }
        double acc = 0.0;
        for (const double l : values)
            acc += std::log1p(scale * std::max(l, 0.0));
        return acc / std::numbers::ln2;
    }

    arma::cx_vec sample_correlated(const arma::cx_mat &S, rng_engine &rng)
    {
        if (S.n_rows != S.n_cols)
            throw invalid_matrix("sample_correlated: factor must be square");
        return S * complex_normal_vector(S.n_cols, rng);
    }
}
