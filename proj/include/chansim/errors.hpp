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

#ifndef CHANSIM_ERRORS_HPP
#define CHANSIM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace chansim
{
    // Base of every exception thrown by the library
    class error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Numeric / model failures (CLI exit code 3)
    class numeric_error : public error
    {
    public:
        using error::error;
    };

    class invalid_matrix : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    class not_psd : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    class invalid_param : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    class rank_deficient : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    class zero_column : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    class zero_vector : public numeric_error
    {
    public:
        using numeric_error::numeric_error;
    };

    // Malformed or inconsistent experiment configuration (CLI exit code 2)
    class config_error : public error
    {
    public:
        using error::error;
    };

    // File system failures (CLI exit code 4)
    class io_error : public error
    {
    public:
        using error::error;
    };

    // Non-fatal diagnostics (quadrature resolution, validity ranges, clamping).
    // Functions accepting a `warning_list *` append to it when non-null.
    using warning_list = std::vector<std::string>;
}

#endif
