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

#include "chansim/config.hpp"
#include "chansim/params.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace chansim
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::string format_number(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }

        bool parse_number(const std::string &s, double &out)
        {
            const char *begin = s.c_str();
            char *end = nullptr;
            out = std::strtod(begin, &end);
            return !s.empty() && end == begin + s.size() && std::isfinite(out);
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::string item;
            std::istringstream in(s);
            while (std::getline(in, item, sep))
                out.push_back(trim(item));
            if (!s.empty() && s.back() == sep)
                out.emplace_back();
            return out;
        }

        std::uint64_t parse_u64(const std::string &key, const std::string &value)
        {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
                throw config_error("key '" + key + "': expected a non-negative integer, got '" + value + "'");
            errno = 0;
            const auto v = std::strtoull(value.c_str(), nullptr, 10);
            if (errno == ERANGE)
                throw config_error("key '" + key + "': value out of range");
            return v;
        }
    }

    std::vector<std::string> expand_grid(const std::string &text)
    {
        if (trim(text).empty())
            throw config_error("empty grid");
        std::vector<std::string> values;
        for (const auto &item : split(text, ','))
        {
            if (item.empty())
                throw config_error("empty item in grid '" + text + "'");
            if (item.find(':') == std::string::npos)
            {
                double v;
                values.push_back(parse_number(item, v) ? format_number(v) : item);
                continue;
            }
            const auto parts = split(item, ':');
            double a, step = 1.0, b;
            const bool ok = parts.size() == 2   ? parse_number(parts[0], a) && parse_number(parts[1], b)
                            : parts.size() == 3 ? parse_number(parts[0], a) && parse_number(parts[1], step) &&
                                                      parse_number(parts[2], b)
                                                : false;
            if (!ok || step == 0.0)
                throw config_error("malformed range '" + item + "' (expected start:step:stop or start:stop)");
            const double span = (b - a) / step;
            if (span < -1e-9)
                throw config_error("empty range '" + item + "'");
            const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
            if (n > 1000000)
                throw config_error("range '" + item + "' has too many points");
            for (std::size_t i = 0; i < n; ++i)
                values.push_back(format_number(a + static_cast<double>(i) * step));
        }
        return values;
    }

    void validate_config(const experiment_config &cfg)
    {
        const auto model = parse_model(cfg.model);
        const auto metric = parse_metric(cfg.metric);
        check_compatible(model, metric);
        if (cfg.trials < 1)
            throw config_error("trials must be >= 1");
        if (!std::isfinite(cfg.snr_db))
            throw config_error("snr_db must be finite");
        if (cfg.sweep.param.empty())
            throw config_error("exactly one sweep.<param> is required");

        std::set<std::string> seen;
        for (const auto &[name, value] : cfg.params)
            if (!seen.insert(name).second)
                throw config_error("parameter '" + name + "' given twice");
        std::vector<const grid_axis *> axes;
        for (const auto &s : cfg.series)
            axes.push_back(&s);
        axes.push_back(&cfg.sweep);
        for (const auto *axis : axes)
        {
            if (!seen.insert(axis->param).second)
                throw config_error("parameter '" + axis->param + "' given twice");
            if (!accepts_param(model, axis->param))
                throw config_error("parameter '" + axis->param + "' is not valid for model " + cfg.model);
            if (axis->values.empty())
                throw config_error("empty grid for '" + axis->param + "'");
        }

        // every grid point must resolve
        std::vector<std::size_t> idx(axes.size(), 0);
        while (true)
        {
            std::vector<std::pair<std::string, std::string>> assignment;
            for (std::size_t a = 0; a < axes.size(); ++a)
                assignment.emplace_back(axes[a]->param, axes[a]->values[idx[a]]);
            resolve_params(cfg, assignment);
            std::size_t a = axes.size();
            while (a > 0 && ++idx[a - 1] == axes[a - 1]->values.size())
                idx[--a] = 0;
            if (a == 0)
                break;
        }
    }

    experiment_config parse_config(const std::string &text)
    {
        experiment_config cfg;
        std::set<std::string> keys;
        bool have_snr = false, have_sweep = false;
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw config_error("line " + std::to_string(line_no) + ": missing key");
            if (!keys.insert(key).second)
                throw config_error("key '" + key + "' given twice");

            if (key == "name")
                cfg.name = value;
            else if (key == "model")
                cfg.model = value;
            else if (key == "metric")
                cfg.metric = value;
            else if (key == "trials")
                cfg.trials = parse_u64(key, value);
            else if (key == "seed")
                cfg.seed = parse_u64(key, value);
            else if (key == "snr_db")
            {
                if (!parse_number(value, cfg.snr_db))
                    throw config_error("key 'snr_db': expected a number, got '" + value + "'");
                have_snr = true;
            }
            else if (key == "output")
                cfg.output = value;
            else if (key.rfind("model.", 0) == 0 && key.size() > 6)
                cfg.params.emplace_back(key.substr(6), value);
            else if (key.rfind("sweep.", 0) == 0 && key.size() > 6)
            {
                if (have_sweep)
                    throw config_error("only one sweep.<param> is allowed (second: '" + key + "')");
                have_sweep = true;
                cfg.sweep = {key.substr(6), value, {}};
                try
                {
                    cfg.sweep.values = expand_grid(value);
                }
                catch (const config_error &e)
                {
                    throw config_error("key '" + key + "': " + e.what());
                }
            }
            else if (key.rfind("series.", 0) == 0 && key.size() > 7)
            {
                grid_axis axis{key.substr(7), value, {}};
                try
                {
                    axis.values = expand_grid(value);
                }
                catch (const config_error &e)
                {
                    throw config_error("key '" + key + "': " + e.what());
                }
                cfg.series.push_back(std::move(axis));
            }
            else
                throw config_error("unknown key '" + key + "'");
        }
        if (cfg.model.empty())
            throw config_error("missing key 'model'");
        if (cfg.metric.empty())
            throw config_error("missing key 'metric'");
        if (!have_snr && cfg.model == "xlmimo")
            cfg.snr_db = 10.0;
        validate_config(cfg);
        return cfg;
    }

    experiment_config load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw io_error("cannot read config file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string to_config_text(const experiment_config &cfg)
    {
        char snr[40];
        std::snprintf(snr, sizeof snr, "%.17g", cfg.snr_db);
        std::ostringstream out;
        out << "name = " << cfg.name << '\n'
            << "model = " << cfg.model << '\n'
            << "metric = " << cfg.metric << '\n'
            << "trials = " << cfg.trials << '\n'
            << "seed = " << cfg.seed << '\n'
            << "snr_db = " << snr << '\n';
        if (!cfg.output.empty())
            out << "output = " << cfg.output << '\n';
        for (const auto &[k, v] : cfg.params)
            out << "model." << k << " = " << v << '\n';
        for (const auto &s : cfg.series)
            out << "series." << s.param << " = " << s.text << '\n';
        out << "sweep." << cfg.sweep.param << " = " << cfg.sweep.text << '\n';
        return out.str();
    }
}
