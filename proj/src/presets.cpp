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

#include "chansim/presets.hpp"

#include <algorithm>

namespace chansim
{
    namespace
    {
        struct preset_entry
        {
            const char *name;
            const char *description;
            const char *text;
        };

        // Grids follow the parameter tables. Ranges printed without a step use 20 antennas,
        // 0.05 in rho, 0.5 dB, 1 or 5 degrees and 0.25 wavelengths; spacing grids start at 0.25.
        const preset_entry presets[] = {
            {"fig5a", "exponential model, capacity bound vs M for several rho",
             R"(name = fig5a
seed = 1
model = exponential
metric = capacity_ub
snr_db = 60
trials = 300
model.beta = 1
series.rho = 0:0.2:1
sweep.antennas = 20:20:400
)"},
            {"fig5b", "exponential model, capacity bound vs rho at M = 100",
             R"(name = fig5b
seed = 1
model = exponential
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.beta = 1
sweep.rho = 0:0.05:1
)"},
            {"fig6a", "uncorrelated fading with shadowing, capacity bound vs M",
             R"(name = fig6a
seed = 1
model = uncorrelated_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.beta = 1
series.shadow_std_db = 0:2:6
sweep.antennas = 20:20:400
)"},
            {"fig6b", "mean shadowing amplitude 10^(f/10) vs shadowing std (10^6 draws per point)",
             R"(name = fig6b
seed = 1
model = uncorrelated_shadowed
metric = shadow_gain
trials = 10000
model.antennas = 100
sweep.shadow_std_db = 0:0.5:10
)"},
            {"fig7a", "exponential model with shadowing, capacity bound vs M",
             R"(name = fig7a
seed = 1
model = exponential_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.beta = 1
model.shadow_std_db = 4
model.phase_aoa_deg = 90
series.rho = 0:0.2:1
sweep.antennas = 20:20:400
)"},
            {"fig7b", "exponential model with shadowing, capacity bound vs rho at M = 100",
             R"(name = fig7b
seed = 1
model = exponential_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.beta = 1
model.phase_aoa_deg = 90
series.shadow_std_db = 0:2:6
sweep.rho = 0:0.05:1
)"},
            {"fig8b", "one-ring ULA, capacity bound vs AoA and angular range",
             R"(name = fig8b
seed = 1
model = onering_ula
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
series.azimuth_spread_deg = 0:5:45
sweep.azimuth_deg = 0:5:355
)"},
            {"fig9a", "one-ring ULA, condition number vs angular range",
             R"(name = fig9a
seed = 1
model = onering_ula
metric = condition_number
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_deg = 30
sweep.azimuth_spread_deg = 1:1:50
)"},
            {"fig9b", "one-ring ULA, singular values for three angular ranges",
             R"(name = fig9b
seed = 1
model = onering_ula
metric = svd_spectrum
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_deg = 30
sweep.azimuth_spread_deg = 17.3205080757,34.6410161514,51.9615242271
)"},
            {"fig10a", "one-ring ULA, capacity bound vs angular range",
             R"(name = fig10a
seed = 1
model = onering_ula
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
series.azimuth_deg = 0,90
sweep.azimuth_spread_deg = 0:1:45
)"},
            {"fig10b", "one-ring ULA, capacity bound vs AoA",
             R"(name = fig10b
seed = 1
model = onering_ula
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
series.azimuth_spread_deg = 10,30
sweep.azimuth_deg = 0:5:360
)"},
            {"fig10c", "one-ring ULA, capacity bound vs M",
             R"(name = fig10c
seed = 1
model = onering_ula
metric = capacity_ub
snr_db = 60
trials = 300
model.spacing = 0.5
series.azimuth_deg = 0,90
series.azimuth_spread_deg = 10,30
sweep.antennas = 20:20:400
)"},
            {"fig10d", "one-ring ULA, capacity bound vs antenna spacing",
             R"(name = fig10d
seed = 1
model = onering_ula
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.azimuth_deg = 0
series.azimuth_spread_deg = 10,30
sweep.spacing = 0.25:0.25:10
)"},
            {"fig11a", "Gaussian local scattering, singular values without shadowing",
             R"(name = fig11a
seed = 1
model = gaussian_ula_shadowed
metric = svd_spectrum
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_deg = 30
model.shadow_std_db = 0
model.scatterers = 1
model.scatterer_angles = nominal
sweep.azimuth_asd_deg = 0:5:15
)"},
            {"fig11b", "Gaussian local scattering, singular values with 2 dB shadowing",
             R"(name = fig11b
seed = 1
model = gaussian_ula_shadowed
metric = svd_spectrum
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_deg = 30
model.shadow_std_db = 2
model.scatterers = 1
model.scatterer_angles = nominal
sweep.azimuth_asd_deg = 0:5:15
)"},
            {"fig12a", "Gaussian closed form, capacity bound vs ASD",
             R"(name = fig12a
seed = 1
model = gaussian_ula_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
model.scatterers = 1
model.scatterer_angles = nominal
series.azimuth_deg = 0,90
series.shadow_std_db = 0:2:4
sweep.azimuth_asd_deg = 0:1:15
)"},
            {"fig12b", "Gaussian closed form, capacity bound vs AoA",
             R"(name = fig12b
seed = 1
model = gaussian_ula_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_asd_deg = 15
model.scatterers = 1
model.scatterer_angles = nominal
series.shadow_std_db = 0:2:4
sweep.azimuth_deg = 0:5:360
)"},
            {"fig12c", "Gaussian closed form, capacity bound vs M",
             R"(name = fig12c
seed = 1
model = gaussian_ula_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.spacing = 0.5
model.azimuth_asd_deg = 15
model.scatterers = 1
model.scatterer_angles = nominal
series.azimuth_deg = 0,90
series.shadow_std_db = 0:2:4
sweep.antennas = 20:20:400
)"},
            {"fig12d", "Gaussian closed form, capacity bound vs antenna spacing",
             R"(name = fig12d
seed = 1
model = gaussian_ula_shadowed
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.azimuth_deg = 0
model.shadow_std_db = 0
model.scatterers = 1
model.scatterer_angles = nominal
series.azimuth_asd_deg = 5,15
sweep.spacing = 0.25:0.25:10
)"},
            {"fig13a", "one-ring UPA, capacity bound vs azimuth and elevation",
             R"(name = fig13a
seed = 1
model = onering_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
model.azimuth_spread_deg = 10
model.elevation_spread_deg = 2
series.elevation_deg = -90:10:90
sweep.azimuth_deg = 0:10:360
)"},
            {"fig13b", "one-ring UPA, capacity bound vs M (square arrays)",
             R"(name = fig13b
seed = 1
model = onering_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.spacing = 0.5
model.azimuth_spread_deg = 30
series.azimuth_deg = 0,90
series.elevation_deg = 0,90
series.elevation_spread_deg = 15,30
sweep.antennas = 16,25,36,49,64,81,100,121,144,169,196,225,256,289,324,361,400
)"},
            {"fig13c", "one-ring UPA, capacity bound vs azimuth",
             R"(name = fig13c
seed = 1
model = onering_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
model.elevation_deg = 0
series.azimuth_spread_deg = 10,30
series.elevation_spread_deg = 2,10,30
sweep.azimuth_deg = 0:5:360
)"},
            {"fig13d", "one-ring UPA, capacity bound vs antenna spacing",
             R"(name = fig13d
seed = 1
model = onering_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.azimuth_deg = 0
model.elevation_deg = 0
series.azimuth_spread_deg = 10,40
series.elevation_spread_deg = 5,20
sweep.spacing = 0.25:0.25:10
)"},
            {"fig14a", "Gaussian UPA, capacity bound vs M (square arrays)",
             R"(name = fig14a
seed = 1
model = gaussian_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.spacing = 0.5
model.azimuth_asd_deg = 30
series.azimuth_deg = 0,90
series.elevation_deg = 0,90
series.elevation_asd_deg = 15,30
sweep.antennas = 16,25,36,49,64,81,100,121,144,169,196,225,256,289,324,361,400
)"},
            {"fig14b", "Gaussian UPA, capacity bound vs azimuth",
             R"(name = fig14b
seed = 1
model = gaussian_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.spacing = 0.5
model.elevation_deg = 0
series.azimuth_asd_deg = 10,30
series.elevation_asd_deg = 2,10
sweep.azimuth_deg = 0:5:360
)"},
            {"fig14c", "Gaussian UPA, capacity bound vs antenna spacing",
             R"(name = fig14c
seed = 1
model = gaussian_upa
metric = capacity_ub
snr_db = 60
trials = 300
model.antennas = 100
model.azimuth_deg = 0
model.elevation_deg = 0
series.azimuth_asd_deg = 5,20
series.elevation_asd_deg = 5,20
sweep.spacing = 0.25:0.25:10
)"},
            {"corrcoef", "mean correlation coefficient of two i.i.d. channels vs M",
             R"(name = corrcoef
seed = 1
model = iid
metric = corr_coeff
trials = 1000
model.users = 2
sweep.antennas = 10:10:100
)"},
            {"corrcoef_exponential", "mean correlation coefficient, exponential model",
             R"(name = corrcoef_exponential
seed = 1
model = exponential
metric = corr_coeff
trials = 1000
model.users = 2
model.beta = 1
series.rho = 0.8,0.85
sweep.antennas = 10:10:100
)"},
            {"corrcoef_exponential_shadowed", "mean correlation coefficient, exponential model with random AoA",
             R"(name = corrcoef_exponential_shadowed
seed = 1
model = exponential_shadowed
metric = corr_coeff
trials = 1000
model.users = 2
model.beta = 1
model.rho = 0.8
model.shadow_std_db = 0
series.aoa_max_deg = 60,90,180
sweep.antennas = 10:10:100
)"},
            {"corrcoef_onering", "mean correlation coefficient, one-ring ULA with random AoA",
             R"(name = corrcoef_onering
seed = 1
model = onering_ula
metric = corr_coeff
trials = 1000
model.users = 2
model.beta = 1
model.spacing = 0.5
model.azimuth_spread_deg = 10
model.aoa_max_deg = 180
sweep.antennas = 10:10:100
)"},
            {"corrcoef_gaussian", "mean correlation coefficient, Gaussian ULA with random AoA",
             R"(name = corrcoef_gaussian
seed = 1
model = gaussian_ula_shadowed
metric = corr_coeff
trials = 1000
model.users = 2
model.beta = 1
model.spacing = 0.5
model.shadow_std_db = 0
model.azimuth_asd_deg = 10
model.scatterers = 1
model.scatterer_angles = nominal
model.aoa_max_deg = 180
sweep.antennas = 10:10:100
)"},
            {"vr_hist", "histogram of visible antennas in a 33-antenna VR",
             R"(name = vr_hist
seed = 1
model = xlmimo
metric = vr_stats
trials = 10000
model.p0 = 0.05
model.p1 = 0.95
model.vr_step = 0.05
sweep.vr_length = 33
)"},
            {"fig15a", "XL-MIMO SINR vs K, scheme 1, uncorrelated and one-ring clusters",
             R"(name = fig15a
seed = 1
model = xlmimo
metric = sinr
snr_db = 10
trials = 300
model.antennas = 100
model.wavelength = 0.125
model.element_spacing = 5
model.clusters_per_user = 2
model.user_distance = 40
model.r_min = 5
model.r_max = 10
model.p0 = 0.05
model.p1 = 0.95
model.vr_step = 0.05
model.alpha_vr = 3
model.alpha_nvr = 6
model.ref_gain_db = -34.53
model.ref_distance = 1
model.scheme = scheme1
model.d1 = 35
series.cluster_model = uncorrelated,onering
series.precoder = cb,zf
sweep.users = 1:20
)"},
            {"fig15b", "XL-MIMO SINR vs K, scheme 1, exponential clusters",
             R"(name = fig15b
seed = 1
model = xlmimo
metric = sinr
snr_db = 10
trials = 300
model.antennas = 100
model.wavelength = 0.125
model.element_spacing = 5
model.clusters_per_user = 2
model.user_distance = 40
model.r_min = 5
model.r_max = 10
model.p0 = 0.05
model.p1 = 0.95
model.vr_step = 0.05
model.alpha_vr = 3
model.alpha_nvr = 6
model.ref_gain_db = -34.53
model.ref_distance = 1
model.scheme = scheme1
model.d1 = 35
model.cluster_model = exponential
series.cluster_rho = 0.2,0.5,0.8
series.precoder = cb,zf
sweep.users = 1:20
)"},
            {"fig15c", "XL-MIMO SINR vs K, scheme 2, uncorrelated and one-ring clusters",
             R"(name = fig15c
seed = 1
model = xlmimo
metric = sinr
snr_db = 10
trials = 300
model.antennas = 100
model.wavelength = 0.125
model.element_spacing = 5
model.clusters_per_user = 2
model.user_distance = 40
model.r_min = 5
model.r_max = 10
model.p0 = 0.05
model.p1 = 0.95
model.vr_step = 0.05
model.alpha_vr = 3
model.alpha_nvr = 6
model.ref_gain_db = -34.53
model.ref_distance = 1
model.scheme = scheme2
model.d2 = 20
series.cluster_model = uncorrelated,onering
series.precoder = cb,zf
sweep.users = 1:20
)"},
            {"fig15d", "XL-MIMO SINR vs K, scheme 2, exponential clusters",
             R"(name = fig15d
seed = 1
model = xlmimo
metric = sinr
snr_db = 10
trials = 300
model.antennas = 100
model.wavelength = 0.125
model.element_spacing = 5
model.clusters_per_user = 2
model.user_distance = 40
model.r_min = 5
model.r_max = 10
model.p0 = 0.05
model.p1 = 0.95
model.vr_step = 0.05
model.alpha_vr = 3
model.alpha_nvr = 6
model.ref_gain_db = -34.53
model.ref_distance = 1
model.scheme = scheme2
model.d2 = 20
model.cluster_model = exponential
series.cluster_rho = 0.2,0.5,0.8
series.precoder = cb,zf
sweep.users = 1:20
)"},
        };

        const preset_entry &find(const std::string &name)
        {
            const auto it = std::find_if(std::begin(presets), std::end(presets),
                                         [&](const preset_entry &p) { return name == p.name; });
            if (it == std::end(presets))
                throw config_error("unknown preset '" + name + "' (see list-presets)");
            return *it;
        }
    }

    const std::vector<std::string> &preset_names()
    {
        static const std::vector<std::string> names = [] {
            std::vector<std::string> v;
            for (const auto &p : presets)
                v.emplace_back(p.name);
            return v;
        }();
        return names;
    }

    std::string preset_description(const std::string &name)
    {
        return find(name).description;
    }

    experiment_config preset(const std::string &name)
    {
        return parse_config(find(name).text);
    }
}
