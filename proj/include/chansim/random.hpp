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

#ifndef CHANSIM_RANDOM_HPP
#define CHANSIM_RANDOM_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <random>

namespace chansim
{
    using rng_engine = std::mt19937_64;

    // Independent stream for the (seed, a, b) coordinate, e.g. (seed, sweep index, trial index).
    // The engine seed is a SplitMix64 mix of the three words, so nearby coordinates give
    // unrelated streams and the result does not depend on the order streams are created in.
    rng_engine derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

    // Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2)
    std::complex<double> complex_normal(rng_engine &rng);
    arma::cx_vec complex_normal_vector(arma::uword n, rng_engine &rng);
    arma::cx_mat complex_normal_matrix(arma::uword rows, arma::uword cols, rng_engine &rng);

    double uniform(double lo, double hi, rng_engine &rng);
}

#endif
