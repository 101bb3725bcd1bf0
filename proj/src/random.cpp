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

#include "chansim/random.hpp"

#include <cmath>

namespace chansim
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }
    }

    rng_engine derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
    {
        std::uint64_t key = splitmix64(seed);
        key = splitmix64(key ^ splitmix64(a + 0x632BE59BD9B4E019ULL));
        key = splitmix64(key ^ splitmix64(b + 0x8CB92BA72F3D8DD7ULL));
        return rng_engine(key);
    }

    std::complex<double> complex_normal(rng_engine &rng)
    {
        std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
        const double re = nd(rng);
        const double im = nd(rng);
        return {re, im};
    }

    arma::cx_vec complex_normal_vector(arma::uword n, rng_engine &rng)
    {
        std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
        arma::cx_vec z(n);
        for (arma::uword i = 0; i < n; ++i)
        {
            const double re = nd(rng);
            const double im = nd(rng);
            z(i) = {re, im};
        }
        return z;
    }

    arma::cx_mat complex_normal_matrix(arma::uword rows, arma::uword cols, rng_engine &rng)
    {
        std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
        arma::cx_mat z(rows, cols);
        for (arma::uword j = 0; j < cols; ++j)
            for (arma::uword i = 0; i < rows; ++i)
            {
                const double re = nd(rng);
                const double im = nd(rng);
                z(i, j) = {re, im};
            }
        return z;
    }

    double uniform(double lo, double hi, rng_engine &rng)
    {
        if (lo == hi)
            return lo;
        std::uniform_real_distribution<double> ud(lo, hi);
        return ud(rng);
    }
}
