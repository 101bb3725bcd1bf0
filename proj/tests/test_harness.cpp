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

#include <catch2/catch_amalgamated.hpp>

#include "chansim/config.hpp"
#include "chansim/errors.hpp"
#include "chansim/experiment.hpp"
#include "chansim/params.hpp"
#include "chansim/presets.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chansim;

namespace
{
    std::string message_of(const std::string &text)
    {
        try
        {
            parse_config(text);
        }
        catch (const config_error &e)
        {
            return e.what();
        }
        return {};
    }

    std::size_t count_lines(const std::string &s)
    {
        return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
    }

    std::vector<double> as_numbers(const std::vector<std::string> &v)
    {
        std::vector<double> out;
        for (const auto &s : v)
            out.push_back(std::stod(s));
        return out;
    }

    const std::string minimal = "model = exponential\nmetric = capacity_ub\nsweep.rho = 0:0.2:1\n";
}

TEST_CASE("Grid expressions")
{
    CHECK(expand_grid("0:0.2:1") == std::vector<std::string>{"0", "0.2", "0.4", "0.6", "0.8", "1"});
    CHECK(expand_grid("1:4") == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(expand_grid("3") == std::vector<std::string>{"3"});
    CHECK(expand_grid("cb, zf") == std::vector<std::string>{"cb", "zf"});
    CHECK(expand_grid("10:-5:0") == std::vector<std::string>{"10", "5", "0"});
    CHECK(expand_grid("0:0.1:0.3").size() == 4);
    CHECK_THROWS_AS(expand_grid(""), config_error);
    CHECK_THROWS_AS(expand_grid("1:0:3"), config_error);
    CHECK_THROWS_AS(expand_grid("3:1:1"), config_error);
    CHECK_THROWS_AS(expand_grid("1,,2"), config_error);
}

TEST_CASE("Config parsing")
{
    SECTION("defaults")
    {
        const experiment_config cfg = parse_config(minimal);
        CHECK(cfg.trials == 300);
        CHECK(cfg.seed == 1);
        CHECK(cfg.snr_db == 60.0);
        CHECK(cfg.sweep.param == "rho");
        CHECK(cfg.sweep.values.size() == 6);
        const model_params p = resolve_params(cfg, {{"rho", "0.4"}});
        CHECK(p.antennas == 100);
        CHECK(p.beta == 1.0);
        CHECK(p.rho == 0.4);

        const experiment_config xl =
            parse_config("model = xlmimo\nmetric = sinr\nsweep.users = 1:3\n");
        CHECK(xl.snr_db == 10.0);
        const model_params q = resolve_params(xl, {{"users", "2"}});
        CHECK(q.xl.array.antennas == 100);
        CHECK(q.xl.clusters_per_user == 2);
        CHECK(q.xl.scheme.d1 == 35.0);
        CHECK(q.xl.pathloss.alpha_vr == 3.0);
    }
    SECTION("comments and whitespace")
    {
        const experiment_config cfg =
            parse_config("# header\n\n  model=exponential   # inline\nmetric = capacity_ub\nsweep.rho = 0, 1\n");
        CHECK(cfg.model == "exponential");
        CHECK(cfg.sweep.values == std::vector<std::string>{"0", "1"});
    }
    SECTION("errors name the offending field")
    {
        CHECK(message_of("model = exponential\nmetric = capacity_ub\nsweep.rho = \n").find("rho") != std::string::npos);
        CHECK(message_of("model = exponential\nmetric = capacty\nsweep.rho = 0\n").find("metric") != std::string::npos);
        CHECK(message_of(minimal + "bogus = 1\n").find("bogus") != std::string::npos);
        CHECK(message_of(minimal + "model.bogus = 1\n").find("bogus") != std::string::npos);
        CHECK(message_of(minimal + "model.antennas = 0\n").find("antennas") != std::string::npos);
        CHECK(message_of(minimal + "trials = 0\n").find("trials") != std::string::npos);
        CHECK(message_of(minimal + "model.rho = 0.5\nmodel.rho = 0.6\n").find("rho") != std::string::npos);
        CHECK_FALSE(message_of("metric = capacity_ub\nsweep.rho = 0\n").empty());
        CHECK_FALSE(message_of(minimal + "sweep.antennas = 4\n").empty());
        CHECK_FALSE(message_of("model = exponential\nmetric = vr_stats\nsweep.rho = 0\n").empty());
        CHECK_FALSE(message_of("model = exponential\nmetric = capacity_ub\nsweep.rho = 0:0.5:2\n").empty());
        CHECK_FALSE(message_of("model = exponential\nmetric = capacity_ub\nsweep.rho = 0\nno equals sign\n").empty());
        CHECK_FALSE(message_of("model = onering_upa\nmetric = capacity_ub\nsweep.antennas = 10\n").empty());
    }
    SECTION("canonical text round-trips")
    {
        for (const auto &name : preset_names())
        {
            const experiment_config cfg = preset(name);
            CHECK(parse_config(to_config_text(cfg)) == cfg);
        }
    }
    SECTION("unreadable file")
    {
        CHECK_THROWS_AS(load_config("/nonexistent/dir/x.cfg"), io_error);
    }
}

TEST_CASE("Running experiments")
{
    SECTION("a deterministic metric has zero standard error")
    {
        experiment_config cfg = parse_config(minimal + "trials = 1\nmodel.antennas = 8\n");
        const run_result res = run_experiment(cfg, {1});
        REQUIRE(res.rows.size() == 6);
        for (const auto &r : res.rows)
        {
            CHECK(r.stats.count == 1);
            CHECK(r.stats.std_error == 0.0);
        }
    }
    SECTION("three sweep points give four CSV lines")
    {
        experiment_config cfg =
            parse_config("model = iid\nmetric = ergodic_capacity\ntrials = 20\nsweep.antennas = 2,4,8\n");
        const run_result res = run_experiment(cfg, {2});
        const std::string csv = format_csv(res);
        CHECK(count_lines(csv) == 4);
        CHECK(csv.rfind("antennas,mean,std_error,min,max\n", 0) == 0);
        for (const auto &r : res.rows)
            CHECK(r.stats.std_error > 0.0);
    }
    SECTION("output does not depend on the worker count")
    {
        const experiment_config cfg = parse_config(
            "model = exponential_shadowed\nmetric = ergodic_capacity\ntrials = 40\nseed = 7\n"
            "model.antennas = 12\nmodel.shadow_std_db = 3\nseries.rho = 0.3,0.9\nsweep.snr_db = 0:10:30\n");
        const std::string a = format_csv(run_experiment(cfg, {1}));
        const std::string b = format_csv(run_experiment(cfg, {3}));
        const std::string c = format_csv(run_experiment(cfg, {8}));
        CHECK(a == b);
        CHECK(a == c);

        experiment_config other = cfg;
        other.seed = 8;
        CHECK(format_csv(run_experiment(other, {2})) != a);
    }
    SECTION("means agree with a sequential reference")
    {
        const experiment_config cfg = parse_config(
            "model = onering_ula\nmetric = ergodic_capacity\ntrials = 25\nseed = 3\nsnr_db = 20\n"
            "model.antennas = 8\nmodel.azimuth_spread_deg = 10\nsweep.azimuth_deg = 0,45\n");
        const run_result res = run_experiment(cfg, {4});
        for (std::size_t j = 0; j < cfg.sweep.values.size(); ++j)
        {
            const model_params p = resolve_params(cfg, {{"azimuth_deg", cfg.sweep.values[j]}});
            std::vector<double> v;
            for (std::uint64_t t = 0; t < cfg.trials; ++t)
            {
                rng_engine rng = derive_stream(cfg.seed, j, t);
                v.push_back(evaluate_trial(p, rng).at(0));
            }
            const metrics::summary ref = metrics::summarize(v);
            CHECK(std::abs(res.rows[j].stats.mean - ref.mean) <= 1e-12 * std::abs(ref.mean));
            CHECK(std::abs(res.rows[j].stats.std_error - ref.std_error) <= 1e-12 * ref.std_error);
        }
    }
    SECTION("vector metrics emit one row per index")
    {
        const experiment_config cfg = parse_config(
            "model = onering_ula\nmetric = svd_spectrum\nmodel.antennas = 6\nmodel.azimuth_spread_deg = 10\n"
            "sweep.azimuth_deg = 0,30\n");
        const run_result res = run_experiment(cfg);
        CHECK(res.rows.size() == 12);
        CHECK(res.deterministic);
        CHECK(format_csv(res).rfind("azimuth_deg,index,mean", 0) == 0);
    }
    SECTION("model failures carry the grid point")
    {
        const experiment_config cfg = parse_config(
            "model = iid\nmetric = sinr\nmodel.antennas = 2\nmodel.precoder = zf\ntrials = 3\nsweep.users = 1,3\n");
        try
        {
            run_experiment(cfg, {2});
            FAIL("expected a numeric error");
        }
        catch (const numeric_error &e)
        {
            CHECK(std::string(e.what()).find("users=3") != std::string::npos);
        }
    }
    SECTION("monotone capacity in the antenna count")
    {
        experiment_config cfg = preset("fig5a");
        const run_result res = run_experiment(cfg);
        REQUIRE(res.rows.size() == 6 * 20);
        for (std::size_t s = 0; s < 6; ++s)
            for (std::size_t j = 1; j < 20; ++j)
            {
                const double prev = res.rows[s * 20 + j - 1].stats.mean;
                const double cur = res.rows[s * 20 + j].stats.mean;
                if (res.rows[s * 20].series[0] == "1")
                    CHECK(cur == Catch::Approx(std::log2(1.0 + 1e6)).epsilon(1e-8)); // rank one: flat
                else
                    CHECK(cur > prev);
            }
    }
}

TEST_CASE("Result files")
{
    const experiment_config cfg = parse_config(minimal + "trials = 1\nmodel.antennas = 4\nname = files\n");
    const run_result res = run_experiment(cfg);

    SECTION("manifest parses back to the config")
    {
        const std::string text = format_manifest(cfg, res);
        CHECK(text.rfind("# chansim", 0) == 0);
        CHECK(parse_config(text) == cfg);
    }
    SECTION("written files")
    {
        const auto dir = std::filesystem::temp_directory_path() / "chansim_test_harness";
        std::filesystem::create_directories(dir);
        const std::string path = (dir / "out.csv").string();
        write_result(cfg, res, path);
        std::ifstream csv(path), man(path + ".manifest");
        REQUIRE(csv.good());
        REQUIRE(man.good());
        std::stringstream a, b;
        a << csv.rdbuf();
        b << man.rdbuf();
        CHECK(a.str() == format_csv(res));
        CHECK(b.str() == format_manifest(cfg, res));

        // a second run of the same config leaves identical bytes
        write_result(cfg, run_experiment(cfg), path);
        std::ifstream again(path);
        std::stringstream c;
        c << again.rdbuf();
        CHECK(c.str() == a.str());
        std::filesystem::remove_all(dir);
    }
    SECTION("unwritable path")
    {
        CHECK_THROWS_AS(write_result(cfg, res, "/nonexistent/dir/out.csv"), io_error);
    }
}

TEST_CASE("Presets")
{
    CHECK(preset_names().size() >= 30);
    CHECK_THROWS_AS(preset("fig99"), config_error);
    for (const auto &name : preset_names())
    {
        CHECK_FALSE(preset_description(name).empty());
        const experiment_config cfg = preset(name);
        CHECK(cfg.name == name);
    }

    const experiment_config b = preset("fig5b");
    CHECK(b.snr_db == 60.0);
    CHECK(resolve_params(b, {{"rho", "0"}}).antennas == 100);
    CHECK(b.sweep.values.front() == "0");
    CHECK(b.sweep.values.back() == "1");

    for (const char *name : {"fig15a", "fig15b", "fig15c", "fig15d"})
    {
        const experiment_config cfg = preset(name);
        CHECK(cfg.trials == 300);
        CHECK(cfg.snr_db == 10.0);
        CHECK(cfg.sweep.param == "users");
        const model_params p = resolve_params(cfg, {{"users", "4"}});
        CHECK(p.xl.array.antennas == 100);
        CHECK(p.xl.clusters_per_user == 2);
        CHECK(p.xl.users == 4);
    }
}

TEST_CASE("Presets match the parameter tables")
{
    std::ifstream in(CHANSIM_FIXTURE_DIR "/preset_table.json");
    REQUIRE(in.good());
    const auto table = nlohmann::json::parse(in)["presets"];

    for (const auto &[name, row] : table.items())
    {
        INFO("preset " << name);
        const experiment_config cfg = preset(name);
        CHECK(cfg.model == row["model"].get<std::string>());
        CHECK(cfg.metric == row["metric"].get<std::string>());
        if (row.contains("snr_db"))
            CHECK(cfg.snr_db == row["snr_db"].get<double>());
        if (row.contains("trials"))
            CHECK(cfg.trials == row["trials"].get<std::uint64_t>());

        for (const auto &[param, value] : row["fixed"].items())
        {
            INFO("fixed " << param);
            const auto it = std::find_if(cfg.params.begin(), cfg.params.end(),
                                         [&](const auto &kv) { return kv.first == param; });
            REQUIRE(it != cfg.params.end());
            if (value.is_string())
                CHECK(it->second == value.get<std::string>());
            else
                CHECK(std::stod(it->second) == Catch::Approx(value.get<double>()).epsilon(1e-12));
        }

        for (const auto &[param, spec] : row["axes"].items())
        {
            INFO("axis " << param);
            const grid_axis *axis = cfg.sweep.param == param ? &cfg.sweep : nullptr;
            for (const auto &s : cfg.series)
                if (s.param == param)
                    axis = &s;
            REQUIRE(axis != nullptr);

            if (spec.contains("set"))
            {
                if (spec["set"].front().is_string())
                    CHECK(axis->values == spec["set"].get<std::vector<std::string>>());
                else
                {
                    const auto want = spec["set"].get<std::vector<double>>();
                    const auto got = as_numbers(axis->values);
                    REQUIRE(got.size() == want.size());
                    for (std::size_t i = 0; i < got.size(); ++i)
                        CHECK(got[i] == Catch::Approx(want[i]).epsilon(1e-11));
                }
                continue;
            }
            const auto v = as_numbers(axis->values);
            const double lo = spec["range"][0].get<double>(), hi = spec["range"][1].get<double>();
            if (spec.value("lower_open", false))
                CHECK((v.front() > lo && v.front() < lo + 1.0));
            else
                CHECK(v.front() == Catch::Approx(lo));
            if (spec.value("upper_open", false))
                CHECK((v.back() < hi && v.back() > hi - 10.0));
            else
                CHECK(v.back() == Catch::Approx(hi));
            CHECK(std::is_sorted(v.begin(), v.end()));
            if (spec.contains("step"))
                for (std::size_t i = 1; i < v.size(); ++i)
                    CHECK(v[i] - v[i - 1] == Catch::Approx(spec["step"].get<double>()));
        }
    }
}
