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

// Random instances shared by the test binaries

#ifndef FDMA_TESTS_FIXTURES_HPP
#define FDMA_TESTS_FIXTURES_HPP

#include <cmath>
#include <vector>

#include "fdma/array_model.hpp"
#include "fdma/rng.hpp"
#include "fdma/scenario.hpp"

namespace fixture
{
    inline const fdma::Carrier carrier{};
    inline const fdma::LinkBudgetConfig link{};
    inline double lambda() { return carrier.wavelength(); }

    // Sorted positions with spacings in [0.5, 2] lambda (centered) and shifts in [-10, 10] MHz
    inline fdma::ArrayDesign random_design(fdma::Rng &rng, std::size_t M)
    {
        fdma::ArrayDesign d;
        d.f0_hz = carrier.f0_hz;
        double x = 0.0;
        for (std::size_t m = 0; m < M; ++m)
        {
            d.positions.push_back(x);
            x += rng.uniform(0.5, 2.0) * lambda();
        }
        const double mid = 0.5 * (d.positions.front() + d.positions.back());
        for (auto &p : d.positions)
            p -= mid;
        for (std::size_t m = 0; m < M; ++m)
            d.freq_shifts.push_back(rng.uniform(-10e6, 10e6));
        return d;
    }

    inline fdma::Placement random_placement(fdma::Rng &rng)
    {
        return fdma::make_placement(rng.uniform(10.0, 300.0), rng.uniform(0.05, fdma::pi - 0.05), link);
    }

    inline fdma::Placement default_bob() { return fdma::placement_from_cartesian(30.0, 90.0, link); }
}

#endif
