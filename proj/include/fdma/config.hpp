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

// Flat key/value run configuration.
//
//      # comment
//      f0_hz = 30e9
//      sweep_m_values = 11, 21, 31
//
// One `key = value` per line, '#' starts a comment. Unknown, duplicated or malformed keys raise
// ConfigError naming the key and line. Only f0_hz is required; every other key has a default and
// the resolved snapshot lists all of them.

#ifndef FDMA_CONFIG_HPP
#define FDMA_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdma/experiment.hpp"

namespace fdma
{
    enum class EvePlacement
    {
        canonical, // E1, E2, E3 (K <= 3)
        random     // uniform outside the target region
    };

    enum class BobForm
    {
        cartesian,
        polar
    };

    struct RunConfig
    {
        ExperimentSetup setup;
        BobForm bob_form = BobForm::cartesian;
        double bob_x_m = 30.0;
        double bob_y_m = 90.0;
        double bob_range_m = 0.0; // only read when bob_form is polar
        double bob_angle_deg = 0.0;

        std::size_t M = 21;
        std::size_t K = 3;
        EvePlacement eve_placement = EvePlacement::canonical;
        std::uint64_t seed = 20260101;
        GridSpec grid;

        std::vector<std::size_t> sweep_m_values = {11, 15, 21, 27, 31};
        std::vector<std::size_t> sweep_k_values = {1, 2, 3, 4, 5, 6};
        std::vector<std::size_t> sweep_k_m_values = {21, 31};
        std::size_t trials = 20;

        // Cross-key checks; throws ConfigError
        void validate() const;

        // Bob plus K eavesdroppers placed as configured (random draws use the "eves" seed stream)
        Scenario scenario() const;
    };

    RunConfig parse_config(std::string_view text);

    // Throws IoError when the file cannot be read
    RunConfig load_config(const std::string &path);

    // Every key with its materialized value, in documentation order. Feeding the lines back
    // through parse_config reproduces the configuration.
    std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig &cfg);
    std::string to_config_text(const RunConfig &cfg);
}

#endif
