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

// chansim command line: run experiment configs and built-in figure presets

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "chansim/config.hpp"
#include "chansim/errors.hpp"
#include "chansim/experiment.hpp"
#include "chansim/presets.hpp"

namespace
{
    struct run_flags
    {
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> trials;
        std::string out;
        unsigned workers = 0;
    };

    void add_run_flags(CLI::App *cmd, run_flags &f)
    {
        cmd->add_option("--seed", f.seed, "Override the random seed");
        cmd->add_option("--trials", f.trials, "Override the number of Monte Carlo trials")->check(CLI::PositiveNumber);
        cmd->add_option("--out", f.out, "CSV output path (manifest goes to <out>.manifest)");
        cmd->add_option("--workers", f.workers, "Worker threads, 0 = all cores");
    }

    int execute(chansim::experiment_config cfg, const run_flags &f)
    {
        if (f.seed)
            cfg.seed = *f.seed;
        if (f.trials)
            cfg.trials = *f.trials;
        if (!f.out.empty())
            cfg.output = f.out;
        if (cfg.output.empty())
            cfg.output = cfg.name + ".csv";

        const auto res = chansim::run_experiment(cfg, {f.workers});
        for (const auto &w : res.warnings)
            std::cerr << "warning: " << w << '\n';
        chansim::write_result(cfg, res, cfg.output);
        std::cout << "wrote " << cfg.output << " (" << res.rows.size() << " rows)\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"chansim - stochastic channel simulator for massive MIMO and XL-MIMO"};
    app.require_subcommand(1);

    run_flags run_f, preset_f;
    std::string config_path, preset_name;
    bool print_only = false;

    auto *run = app.add_subcommand("run", "Run an experiment config file");
    run->add_option("--config", config_path, "Experiment config")->required();
    add_run_flags(run, run_f);

    auto *pre = app.add_subcommand("preset", "Run a built-in figure preset");
    pre->add_option("name", preset_name, "Preset name (see list-presets)")->required();
    pre->add_flag("--print", print_only, "Print the preset config instead of running it");
    add_run_flags(pre, preset_f);

    auto *list = app.add_subcommand("list-presets", "List the built-in presets");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        if (*list)
        {
            for (const auto &name : chansim::preset_names())
                std::cout << name << "  " << chansim::preset_description(name) << '\n';
            return 0;
        }
        if (*pre)
        {
            const auto cfg = chansim::preset(preset_name);
            if (print_only)
            {
                std::cout << chansim::to_config_text(cfg);
                return 0;
            }
            return execute(cfg, preset_f);
        }
        return execute(chansim::load_config(config_path), run_f);
    }
    catch (const chansim::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const chansim::numeric_error &e)
    {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    }
    catch (const chansim::io_error &e)
    {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 4;
    }
}
