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

#include "chansim/quadrature.hpp"
#include "chansim/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace chansim
{
    namespace
    {
        quadrature_rule compute_canonical(std::size_t n)
        {
            quadrature_rule rule;
            rule.nodes.resize(n);
            rule.weights.resize(n);
            const std::size_t half = (n + 1) / 2;
            const double dn = static_cast<double>(n);
            for (std::size_t i = 0; i < half; ++i)
            {
                // Initial guess for the i-th root, then Newton on P_n
                double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
                double dp = 0.0;
                for (int iter = 0; iter < 100; ++iter)
                {
                    double p0 = 1.0, p1 = 0.0;
                    for (std::size_t j = 0; j < n; ++j)
                    {
                        const double p2 = p1;
                        p1 = p0;
                        const double dj = static_cast<double>(j);
                        p0 = ((2.0 * dj + 1.0) * z * p1 - dj * p2) / (dj + 1.0);
                    }
                    dp = dn * (z * p0 - p1) / (z * z - 1.0);
                    const double step = p0 / dp;
                    z -= step;
                    if (std::abs(step) <= 1e-15)
                        break;
                }
                const double w = 2.0 / ((1.0 - z * z) * dp * dp);
                rule.nodes[i] = -z;
                rule.nodes[n - 1 - i] = z;
                rule.weights[i] = w;
                rule.weights[n - 1 - i] = w;
            }
            if (n % 2 == 1)
                rule.nodes[n / 2] = 0.0;
            return rule;
        }

        std::shared_ptr<const quadrature_rule> canonical(std::size_t n)
        {
            static std::mutex mtx;
            static std::map<std::size_t, std::shared_ptr<const quadrature_rule>> cache;
            std::lock_guard lock(mtx);
            auto &slot = cache[n];
            if (!slot)
                slot = std::make_shared<const quadrature_rule>(compute_canonical(n));
            return slot;
        }
    }

    quadrature_rule gauss_legendre(std::size_t n, double lo, double hi)
    {
        if (n == 0)
            throw invalid_param("gauss_legendre: at least one node required");
        const auto base = canonical(n);
        const double mid = 0.5 * (hi + lo);
        const double half = 0.5 * (hi - lo);
        quadrature_rule rule;
        rule.nodes.resize(n);
        rule.weights.resize(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            rule.nodes[i] = mid + half * base->nodes[i];
            rule.weights[i] = half * base->weights[i];
        }
        return rule;
    }
}
