// SPDX-License-Identifier: Apache-2.0
//
// fdma-secrecy: secrecy-oriented design of frequency-diverse movable-antenna arrays
// Copyright (C) 2026 The fdma-secrecy authors
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

#include "fdma/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "fdma/errors.hpp"
#include "fdma/rng.hpp"

namespace fdma
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::string fmt_real(double v) { return fmt::format("{:.17g}", v); }

        // Value parsers throw std::invalid_argument with a short reason; the caller adds key/line
        double parse_real(std::string_view v)
        {
            double out = 0.0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
                throw std::invalid_argument("expected a finite real number, got '" + std::string(v) + "'");
            return out;
        }

        std::uint64_t parse_u64(std::string_view v)
        {
            std::uint64_t out = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size())
                throw std::invalid_argument("expected a non-negative integer, got '" + std::string(v) + "'");
            return out;
        }

        std::size_t parse_size(std::string_view v) { return std::size_t(parse_u64(v)); }

        std::vector<std::size_t> parse_size_list(std::string_view v)
        {
            std::vector<std::size_t> out;
            while (!v.empty())
            {
                const auto comma = v.find(',');
                const auto item = trim(v.substr(0, comma));
                out.push_back(parse_size(item));
                if (comma == std::string_view::npos)
                    break;
                v.remove_prefix(comma + 1);
            }
            if (out.empty())
                throw std::invalid_argument("expected a comma-separated list of integers");
            return out;
        }

        std::string fmt_size_list(const std::vector<std::size_t> &v)
        {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? ", " : "") + std::to_string(v[i]);
            return out;
        }

        std::optional<double> parse_ridge(std::string_view v)
        {
            if (v == "auto")
                return std::nullopt;
            return parse_real(v);
        }

        std::string fmt_ridge(const std::optional<double> &r) { return r ? fmt_real(*r) : "auto"; }

        template <typename Enum, std::size_t N>
        Enum parse_enum(std::string_view v, const std::pair<std::string_view, Enum> (&names)[N])
        {
            for (const auto &[name, value] : names)
                if (name == v)
                    return value;
            std::string allowed;
            for (const auto &[name, value] : names)
                allowed += (allowed.empty() ? "" : "|") + std::string(name);
            throw std::invalid_argument("expected one of " + allowed + ", got '" + std::string(v) + "'");
        }

        template <typename Enum, std::size_t N>
        std::string fmt_enum(Enum e, const std::pair<std::string_view, Enum> (&names)[N])
        {
            for (const auto &[name, value] : names)
                if (value == e)
                    return std::string(name);
            return "?";
        }

        const std::pair<std::string_view, EvePlacement> placement_names[] = {{"canonical", EvePlacement::canonical},
                                                                              {"random", EvePlacement::random}};
        const std::pair<std::string_view, SidelobeAngleFormula> formula_names[] = {
            {"literal", SidelobeAngleFormula::literal}, {"cos_space", SidelobeAngleFormula::cos_space}};
        const std::pair<std::string_view, TargetAngleConvention> convention_names[] = {
            {"cos_space", TargetAngleConvention::cos_space}, {"angle_space", TargetAngleConvention::angle_space}};

        struct KeySpec
        {
            std::string_view name;
            void (*set)(RunConfig &, std::string_view);
            std::string (*get)(const RunConfig &);
        };

#define FDMA_REAL_KEY(key, field)                                                                                      \
    KeySpec{key, [](RunConfig &c, std::string_view v) { c.field = parse_real(v); },                                    \
            [](const RunConfig &c) { return fmt_real(c.field); }}
#define FDMA_SIZE_KEY(key, field)                                                                                      \
    KeySpec{key, [](RunConfig &c, std::string_view v) { c.field = parse_size(v); },                                    \
            [](const RunConfig &c) { return std::to_string(c.field); }}
#define FDMA_LIST_KEY(key, field)                                                                                      \
    KeySpec{key, [](RunConfig &c, std::string_view v) { c.field = parse_size_list(v); },                               \
            [](const RunConfig &c) { return fmt_size_list(c.field); }}

        // Documentation order; the bob_* keys are handled separately because two forms exist
        const KeySpec key_table[] = {
            FDMA_REAL_KEY("tx_power_dbm", setup.link.tx_power_dbm),
            FDMA_REAL_KEY("noise_power_dbm", setup.link.noise_power_dbm),
            FDMA_REAL_KEY("ref_path_loss_db", setup.link.ref_path_loss_db),
            FDMA_REAL_KEY("path_loss_exponent_coeff", setup.link.path_loss_exponent_coeff),
            FDMA_REAL_KEY("f0_hz", setup.carrier.f0_hz),
            FDMA_REAL_KEY("speed_of_light", setup.carrier.c),
            FDMA_SIZE_KEY("M", M),
            FDMA_SIZE_KEY("K", K),
            KeySpec{"eve_placement", [](RunConfig &c, std::string_view v) { c.eve_placement = parse_enum(v, placement_names); },
                    [](const RunConfig &c) { return fmt_enum(c.eve_placement, placement_names); }},
            KeySpec{"e2_formula", [](RunConfig &c, std::string_view v) { c.setup.e2_formula = parse_enum(v, formula_names); },
                    [](const RunConfig &c) { return fmt_enum(c.setup.e2_formula, formula_names); }},
            KeySpec{"target_angle_convention",
                    [](RunConfig &c, std::string_view v) { c.setup.target_convention = parse_enum(v, convention_names); },
                    [](const RunConfig &c) { return fmt_enum(c.setup.target_convention, convention_names); }},
            FDMA_REAL_KEY("delta_f_hz", setup.geometry.freq_step_hz),
            FDMA_REAL_KEY("delta_d_over_lambda", setup.geometry.spacing_over_lambda),
            FDMA_REAL_KEY("min_spacing_over_lambda", setup.geometry.min_spacing_over_lambda),
            FDMA_REAL_KEY("aperture_per_antenna_over_lambda", setup.geometry.aperture_per_antenna_over_lambda),
            FDMA_REAL_KEY("freq_shift_min_hz", setup.geometry.freq_shift_min_hz),
            FDMA_REAL_KEY("freq_shift_max_hz", setup.geometry.freq_shift_max_hz),
            KeySpec{"seed", [](RunConfig &c, std::string_view v) { c.seed = parse_u64(v); },
                    [](const RunConfig &c) { return std::to_string(c.seed); }},
            FDMA_REAL_KEY("grid_x_min_m", grid.x_min),
            FDMA_REAL_KEY("grid_x_max_m", grid.x_max),
            FDMA_REAL_KEY("grid_y_min_m", grid.y_min),
            FDMA_REAL_KEY("grid_y_max_m", grid.y_max),
            FDMA_REAL_KEY("grid_resolution_m", grid.resolution),
            FDMA_REAL_KEY("sa_initial_temperature", setup.sa.initial_temperature),
            FDMA_REAL_KEY("sa_cooling_factor", setup.sa.cooling_factor),
            FDMA_SIZE_KEY("sa_max_iterations", setup.sa.max_iterations),
            FDMA_SIZE_KEY("alt_max_rounds", setup.alternation.max_rounds),
            FDMA_REAL_KEY("alt_relative_tolerance", setup.alternation.relative_tolerance),
            KeySpec{"perturb_ridge_position", [](RunConfig &c, std::string_view v) { c.setup.perturb.ridge_position = parse_ridge(v); },
                    [](const RunConfig &c) { return fmt_ridge(c.setup.perturb.ridge_position); }},
            KeySpec{"perturb_ridge_frequency",
                    [](RunConfig &c, std::string_view v) { c.setup.perturb.ridge_frequency = parse_ridge(v); },
                    [](const RunConfig &c) { return fmt_ridge(c.setup.perturb.ridge_frequency); }},
            FDMA_SIZE_KEY("perturb_max_rounds", setup.perturb.max_rounds),
            FDMA_REAL_KEY("perturb_relative_tolerance", setup.perturb.relative_tolerance),
            FDMA_LIST_KEY("sweep_m_values", sweep_m_values),
            FDMA_LIST_KEY("sweep_k_values", sweep_k_values),
            FDMA_LIST_KEY("sweep_k_m_values", sweep_k_m_values),
            FDMA_SIZE_KEY("trials", trials),
            FDMA_REAL_KEY("sample_range_min_m", setup.domain.range_min),
            FDMA_REAL_KEY("sample_range_max_m", setup.domain.range_max),
            KeySpec{"sample_angle_min_deg",
                    [](RunConfig &c, std::string_view v) { c.setup.domain.angle_min_rad = deg_to_rad(parse_real(v)); },
                    [](const RunConfig &c) { return fmt_real(rad_to_deg(c.setup.domain.angle_min_rad)); }},
            KeySpec{"sample_angle_max_deg",
                    [](RunConfig &c, std::string_view v) { c.setup.domain.angle_max_rad = deg_to_rad(parse_real(v)); },
                    [](const RunConfig &c) { return fmt_real(rad_to_deg(c.setup.domain.angle_max_rad)); }},
        };

#undef FDMA_REAL_KEY
#undef FDMA_SIZE_KEY
#undef FDMA_LIST_KEY

        constexpr std::string_view bob_keys[] = {"bob_x_m", "bob_y_m", "bob_range_m", "bob_angle_deg"};

        void resolve_bob(RunConfig &c)
        {
            if (c.bob_form == BobForm::cartesian)
            {
                if (!(c.bob_y_m > 0.0))
                    throw ConfigError("bob_y_m must be positive (the array serves the half plane y > 0)", "bob_y_m");
                c.setup.bob_range_m = std::hypot(c.bob_x_m, c.bob_y_m);
                c.setup.bob_angle_rad = std::atan2(c.bob_y_m, c.bob_x_m);
            }
            else
            {
                c.setup.bob_range_m = c.bob_range_m;
                c.setup.bob_angle_rad = deg_to_rad(c.bob_angle_deg);
            }
        }

        template <typename Fn>
        void as_config_error(const std::string &key, Fn &&fn)
        {
            try
            {
                fn();
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw ConfigError(e.what(), key);
            }
        }
    }

    void RunConfig::validate() const
    {
        as_config_error("", [&] { setup.link.validate(); });
        as_config_error("f0_hz", [&]
        {
            if (!(setup.carrier.f0_hz > 0.0) || !(setup.carrier.c > 0.0))
                throw std::invalid_argument("f0_hz and speed_of_light must be positive");
        });
        as_config_error("", [&] { grid.validate(); });
        as_config_error("", [&] { setup.domain.validate(); });
        as_config_error("", [&] { setup.sa.validate(); });
        as_config_error("", [&] { setup.alternation.validate(); });
        as_config_error("", [&] { setup.perturb.validate(); });
        as_config_error("", [&] { setup.params(M).validate(); });
        as_config_error("", [&] { setup.bob().validate(); });

        if (M < 1)
            throw ConfigError("M must be at least 1", "M");
        if (K >= M)
            throw ConfigError("K must be smaller than M", "K");
        if (eve_placement == EvePlacement::canonical && K > 3)
            throw ConfigError("canonical placement provides at most 3 eavesdroppers", "K");
        if (trials < 1)
            throw ConfigError("trials must be at least 1", "trials");
        for (auto m : sweep_m_values)
            if (m < 4)
                throw ConfigError("every sweep_m_values entry must be >= 4", "sweep_m_values");
        const auto k_max = *std::max_element(sweep_k_values.begin(), sweep_k_values.end());
        for (auto m : sweep_k_m_values)
            if (k_max >= m)
                throw ConfigError("every sweep_k_values entry must be smaller than every sweep_k_m_values entry",
                                  "sweep_k_values");
    }

    Scenario RunConfig::scenario() const
    {
        if (eve_placement == EvePlacement::canonical)
            return setup.canonical_scenario(M, K);
        const Placement bob = setup.bob();
        auto eves = sample_eves_outside_target(K, bob, M, setup.params(M), setup.domain, derive_seed(seed, "eves"),
                                               setup.link, setup.carrier, setup.target_convention);
        return make_scenario(bob, std::move(eves), setup.link, setup.carrier.c);
    }

    RunConfig parse_config(std::string_view text)
    {
        RunConfig cfg;
        std::vector<std::string> seen;
        bool have_cartesian = false, have_polar = false;
        int line_no = 0;

        while (!text.empty())
        {
            ++line_no;
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", "", line_no);
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": empty key", "", line_no);
            if (value.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "' has no value", key, line_no);
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
            seen.push_back(key);

            try
            {
                if (key == "bob_x_m" || key == "bob_y_m")
                {
                    (key == "bob_x_m" ? cfg.bob_x_m : cfg.bob_y_m) = parse_real(value);
                    have_cartesian = true;
                    continue;
                }
                if (key == "bob_range_m" || key == "bob_angle_deg")
                {
                    (key == "bob_range_m" ? cfg.bob_range_m : cfg.bob_angle_deg) = parse_real(value);
                    have_polar = true;
                    continue;
                }
                const auto spec = std::find_if(std::begin(key_table), std::end(key_table),
                                               [&](const KeySpec &s) { return s.name == key; });
                if (spec == std::end(key_table))
                    throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", key, line_no);
                spec->set(cfg, value);
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "': " + e.what(), key, line_no);
            }
        }

        if (std::find(seen.begin(), seen.end(), "f0_hz") == seen.end())
            throw ConfigError("missing required key 'f0_hz'", "f0_hz");

        auto has = [&](std::string_view k) { return std::find(seen.begin(), seen.end(), k) != seen.end(); };
        if (have_cartesian && have_polar)
            throw ConfigError("Bob is given both as bob_x_m/bob_y_m and as bob_range_m/bob_angle_deg", "bob_range_m");
        if (have_cartesian && !(has("bob_x_m") && has("bob_y_m")))
            throw ConfigError("bob_x_m and bob_y_m must be given together", has("bob_x_m") ? "bob_y_m" : "bob_x_m");
        if (have_polar && !(has("bob_range_m") && has("bob_angle_deg")))
            throw ConfigError("bob_range_m and bob_angle_deg must be given together",
                              has("bob_range_m") ? "bob_angle_deg" : "bob_range_m");
        cfg.bob_form = have_polar ? BobForm::polar : BobForm::cartesian;
        resolve_bob(cfg);

        cfg.validate();
        return cfg;
    }

    RunConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open configuration file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad())
            throw IoError("cannot read configuration file '" + path + "'");
        return parse_config(buf.str());
    }

    std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig &cfg)
    {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto &spec : key_table)
        {
            out.emplace_back(std::string(spec.name), spec.get(cfg));
            if (spec.name == "speed_of_light")
            {
                // Bob sits right after the carrier so the snapshot reads naturally
                if (cfg.bob_form == BobForm::cartesian)
                {
                    out.emplace_back(std::string(bob_keys[0]), fmt_real(cfg.bob_x_m));
                    out.emplace_back(std::string(bob_keys[1]), fmt_real(cfg.bob_y_m));
                }
                else
                {
                    out.emplace_back(std::string(bob_keys[2]), fmt_real(cfg.bob_range_m));
                    out.emplace_back(std::string(bob_keys[3]), fmt_real(cfg.bob_angle_deg));
                }
            }
        }
        return out;
    }

    std::string to_config_text(const RunConfig &cfg)
    {
        std::string out;
        for (const auto &[k, v] : resolved_entries(cfg))
            out += k + " = " + v + "\n";
        return out;
    }
}
