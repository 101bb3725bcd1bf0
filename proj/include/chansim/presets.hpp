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

#ifndef CHANSIM_PRESETS_HPP
#define CHANSIM_PRESETS_HPP

#include <string>
#include <vector>

#include "chansim/config.hpp"

namespace chansim
{
    // Names of the built-in experiments, in listing order
    const std::vector<std::string> &preset_names();

    // One-line description of a preset
    std::string preset_description(const std::string &name);

    // Parsed configuration of a preset; unknown name -> config_error
    experiment_config preset(const std::string &name);
}

#endif
