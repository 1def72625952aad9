// SPDX-License-Identifier: Apache-2.0
//
// wiptlib - numerical toolkit for wireless information and power transfer
// Copyright (C) 2026 the wiptlib authors
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
//
// Flat key=value configuration with a closed, typed schema. Unknown keys
// are rejected at parse time so a typo can never silently fall back to a
// default physical parameter. Values are strings until a typed getter
// pulls them; absent keys resolve to the schema default.

#ifndef WIPT_CONFIG_HPP
#define WIPT_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wipt
{
    enum class ConfigType
    {
        Real,
        Integer,
        String,
        RealList,
        IntegerList,
        Grid // "start:stop:step" inclusive lattice
    };

    struct ConfigKey
    {
        const char *name;
        ConfigType type;
        const char *def;
        const char *help;
    };

    // The complete configuration schema. Every key any subcommand reads is
    // declared here with its default; parse-time validation checks
    // membership against this table.
    inline const std::vector<ConfigKey> &config_schema()
    {
        static const std::vector<ConfigKey> schema = {
            {"seed", ConfigType::Integer, "1", "master seed for all Monte Carlo substreams"},

            {"models.p_min", ConfigType::Real, "0", "transfer-curve sweep start, W"},
            {"models.p_max", ConfigType::Real, "2", "transfer-curve sweep end, W"},
            {"models.p_points", ConfigType::Integer, "201", "transfer-curve sweep length"},
            {"models.linear_eta", ConfigType::Real, "1", "linear model efficiency"},
            {"models.pwl_eta", ConfigType::Real, "0.5", "piecewise model efficiency"},
            {"models.pwl_p_sens", ConfigType::Real, "0.1", "piecewise sensitivity threshold, W"},
            {"models.pwl_p_sat", ConfigType::Real, "0.2", "piecewise saturation output, W"},
            {"models.sigmoid_p_sat", ConfigType::Real, "1", "sigmoid saturation output, W"},
            {"models.sigmoid_a", ConfigType::Real, "1", "sigmoid steepness, 1/W"},
            {"models.sigmoid_b", ConfigType::Real, "1", "sigmoid inflection power, W"},
            {"models.k2", ConfigType::Real, "1", "diode 2nd-moment coefficient"},
            {"models.k4", ConfigType::Real, "1", "diode 4th-moment coefficient"},

            {"robust.rate", ConfigType::Real, "1", "nominal exponential rate (1 = unit mean)"},
            {"robust.d_list", ConfigType::RealList, "0,0.05,0.2,0.5", "KL radii, nats"},
            {"robust.x_max", ConfigType::Real, "5", "CDF grid end, energy units"},
            {"robust.x_points", ConfigType::Integer, "500", "CDF grid length"},

            {"capacity.energies", ConfigType::RealList, "0,1", "per-symbol energies, epcu"},
            {"capacity.grid", ConfigType::Grid, "0:1:0.01", "minimum energy rate grid, epcu"},

            {"receivers.gains", ConfigType::RealList, "0.5,0.5", "per-antenna power gains |h_i|^2"},
            {"receivers.power", ConfigType::Real, "1", "transmit power, W"},
            {"receivers.sigma_n2", ConfigType::Real, "0.5", "antenna noise variance, W"},
            {"receivers.sigma_c2", ConfigType::Real, "0.5", "conversion noise variance, W"},
            {"receivers.eta", ConfigType::Real, "1", "linear harvester efficiency"},
            {"receivers.grid", ConfigType::Grid, "0:1:0.01", "tau/rho sweep lattice"},

            {"network.lambda", ConfigType::Real, "1e-3", "transmitter density, 1/m^2"},
            {"network.d", ConfigType::Real, "10", "serving-link distance, m"},
            {"network.alpha", ConfigType::Real, "4", "path-loss exponent"},
            {"network.theta", ConfigType::Real, "1", "SINR decoding threshold"},
            {"network.rho_baselines", ConfigType::RealList, "0.5,0.9", "baseline splitting fractions"},
            {"network.sigma_n2", ConfigType::Real, "1e-8", "antenna noise variance, W"},
            {"network.sigma_c2", ConfigType::Real, "1e-3", "conversion noise variance, W"},
            {"network.eta", ConfigType::Real, "1", "harvest efficiency"},
            {"network.r0", ConfigType::Real, "1", "interferer exclusion radius, m"},
            {"network.sim_radius", ConfigType::Real, "200", "interferer disc radius, m"},
            {"network.n_realizations", ConfigType::Integer, "100000", "Monte Carlo sample count per sweep"},
            {"network.p_dbw_grid", ConfigType::Grid, "0:58:2", "transmit power sweep, dBW"},
            {"network.min_covered", ConfigType::Integer, "25", "minimum covered samples before adapting rho"},

            {"waveform.n_list", ConfigType::IntegerList, "1,2,4,8", "energy tone counts"},
            {"waveform.power", ConfigType::Real, "1", "energy waveform power, W"},
            {"waveform.k2", ConfigType::Real, "1", "diode 2nd-moment coefficient"},
            {"waveform.k4", ConfigType::Real, "1", "diode 4th-moment coefficient"},
            {"waveform.info_bins", ConfigType::IntegerList, "1,2,3,4", "information subcarrier indices"},
            {"waveform.symbols", ConfigType::Integer, "4", "information symbols per composite"},

            {"validate.n_realizations", ConfigType::Integer, "1000000", "Monte Carlo size for the coverage check"},
        };
        return schema;
    }

    namespace detail
    {
        inline std::string trim(const std::string &s)
        {
            std::size_t b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return "";
            std::size_t e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        inline const ConfigKey *find_key(const std::string &name)
        {
            for (const ConfigKey &k : config_schema())
                if (name == k.name)
                    return &k;
            return nullptr;
        }

        inline double parse_real(const std::string &key, const std::string &value)
        {
            std::size_t pos = 0;
            double v = 0.0;
            try
            {
                v = std::stod(value, &pos);
            }
            catch (const std::exception &)
            {
                throw domain_error("config: key '" + key + "' has non-numeric value '" + value + "'");
            }
            if (pos != value.size())
                throw domain_error("config: key '" + key + "' has trailing junk in '" + value + "'");
            return v;
        }

        inline std::uint64_t parse_integer(const std::string &key, const std::string &value)
        {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
                throw domain_error("config: key '" + key + "' needs a nonnegative integer, got '" +
                                   value + "'");
            try
            {
                return std::stoull(value);
            }
            catch (const std::exception &)
            {
                throw domain_error("config: key '" + key + "' integer out of range: '" + value + "'");
            }
        }

        inline std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::string cur;
            for (char ch : s)
            {
                if (ch == sep)
                {
                    out.push_back(trim(cur));
                    cur.clear();
                }
                else
                {
                    cur += ch;
                }
            }
            out.push_back(trim(cur));
            return out;
        }
    } // namespace detail

    // Inclusive lattice "start:stop:step": all points start + i*step that do
    // not overshoot stop (with a relative guard), the last snapped to stop
    // when it lands there.
    inline std::vector<double> parse_grid(const std::string &key, const std::string &text)
    {
        std::vector<std::string> parts = detail::split(text, ':');
        if (parts.size() != 3)
            throw domain_error("config: key '" + key + "' needs start:stop:step, got '" + text + "'");
        double start = detail::parse_real(key, parts[0]);
        double stop = detail::parse_real(key, parts[1]);
        double step = detail::parse_real(key, parts[2]);
        if (!(step > 0.0) || stop < start)
            throw domain_error("config: key '" + key + "' needs stop >= start and step > 0");
        std::vector<double> grid;
        double guard = step * 1e-9;
        for (std::size_t i = 0;; ++i)
        {
            double v = start + step * static_cast<double>(i);
            if (v > stop + guard)
                break;
            if (std::fabs(v - stop) <= guard)
                v = stop;
            grid.push_back(v);
            if (grid.size() > 10000000)
                throw domain_error("config: key '" + key + "' grid exceeds 1e7 points");
        }
        return grid;
    }

    class ConfigMap
    {
    public:
        ConfigMap() = default;

        // Parses a key=value file: '#' starts a comment, blank lines are
        // skipped, keys must be unique and schema-known.
        static ConfigMap parse_file(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
                throw domain_error("config: cannot open file: " + path);
            std::ostringstream ss;
            ss << in.rdbuf();
            return parse_text(ss.str(), path);
        }

        static ConfigMap parse_text(const std::string &text, const std::string &origin = "<inline>")
        {
            ConfigMap cfg;
            std::istringstream in(text);
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line))
            {
                ++lineno;
                std::size_t hash = line.find('#');
                if (hash != std::string::npos)
                    line = line.substr(0, hash);
                line = detail::trim(line);
                if (line.empty())
                    continue;
                std::size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw domain_error("config: " + origin + ":" + std::to_string(lineno) +
                                       ": expected key = value, got '" + line + "'");
                std::string key = detail::trim(line.substr(0, eq));
                std::string value = detail::trim(line.substr(eq + 1));
                if (!detail::find_key(key))
                    throw domain_error("config: " + origin + ":" + std::to_string(lineno) +
                                       ": unknown key '" + key + "'");
                if (cfg.values_.count(key))
                    throw domain_error("config: " + origin + ":" + std::to_string(lineno) +
                                       ": duplicate key '" + key + "'");
                cfg.values_[key] = value;
            }
            return cfg;
        }

        void set(const std::string &key, const std::string &value)
        {
            if (!detail::find_key(key))
                throw domain_error("config: unknown key '" + key + "'");
            values_[key] = value;
        }

        bool has(const std::string &key) const { return values_.count(key) != 0; }

        // Raw value with schema-default fallback; getter type must match the
        // schema entry (programming error otherwise).
        std::string raw(const std::string &key, ConfigType expect) const
        {
            const ConfigKey *k = detail::find_key(key);
            if (!k || k->type != expect)
                throw std::logic_error("config: getter/schema mismatch for key '" + key + "'");
            auto it = values_.find(key);
            return it != values_.end() ? it->second : std::string(k->def);
        }

        double get_real(const std::string &key) const
        {
            return detail::parse_real(key, raw(key, ConfigType::Real));
        }

        std::uint64_t get_integer(const std::string &key) const
        {
            return detail::parse_integer(key, raw(key, ConfigType::Integer));
        }

        std::vector<double> get_real_list(const std::string &key) const
        {
            std::vector<double> out;
            for (const std::string &tok : detail::split(raw(key, ConfigType::RealList), ','))
            {
                if (tok.empty())
                    throw domain_error("config: key '" + key + "' has an empty list entry");
                out.push_back(detail::parse_real(key, tok));
            }
            return out;
        }

        std::vector<std::size_t> get_integer_list(const std::string &key) const
        {
            std::vector<std::size_t> out;
            for (const std::string &tok : detail::split(raw(key, ConfigType::IntegerList), ','))
            {
                if (tok.empty())
                    throw domain_error("config: key '" + key + "' has an empty list entry");
                out.push_back(detail::parse_integer(key, tok));
            }
            return out;
        }

        std::vector<double> get_grid(const std::string &key) const
        {
            return parse_grid(key, raw(key, ConfigType::Grid));
        }

        // Resolved (key, value) pairs for provenance comments: every schema
        // key with the value in effect. Execution knobs such as worker count
        // are deliberately not part of the schema, so provenance lines are
        // identical across worker counts.
        std::vector<std::pair<std::string, std::string>> resolved() const
        {
            std::vector<std::pair<std::string, std::string>> out;
            for (const ConfigKey &k : config_schema())
            {
                auto it = values_.find(k.name);
                out.emplace_back(k.name, it != values_.end() ? it->second : std::string(k.def));
            }
            return out;
        }

    private:
        std::map<std::string, std::string> values_;
    };

} // namespace wipt

#endif
