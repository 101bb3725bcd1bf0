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

#ifndef CHANSIM_QUADRATURE_HPP
#define CHANSIM_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace chansim
{
    struct quadrature_rule
    {
        std::vector<double> nodes;
        std::vector<double> weights;
    };

    // n-point Gauss-Legendre rule mapped to [lo, hi]. Exact for polynomials of degree 2n-1.
    // Canonical [-1, 1] tables are cached and shared between threads.
    quadrature_rule gauss_legendre(std::size_t n, double lo, double hi);
}

#endif
