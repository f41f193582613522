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

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "fdma/errors.hpp"
#include "fdma/scenario.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace fdma;

TEST_SUITE("scenario")
{
    TEST_CASE("path loss")
    {
        const LinkBudgetConfig cfg;
        CHECK(path_loss_linear(1.0, cfg) == doctest::Approx(1e-3).epsilon(1e-14));
        CHECK(path_loss_linear(10.0, cfg) == doctest::Approx(std::pow(10.0, -5.5)).epsilon(1e-14));
        CHECK(path_loss_linear(100.0, cfg) == doctest::Approx(1e-8).epsilon(1e-14));
        CHECK_THROWS_AS(path_loss_linear(0.0, cfg), std::invalid_argument);
        CHECK_THROWS_AS(path_loss_linear(-1.0, cfg), std::invalid_argument);

        double prev = path_loss_linear(0.5, cfg);
        for (double R = 0.75; R < 1000.0; R *= 1.37)
        {
            const double cur = path_loss_linear(R, cfg);
            REQUIRE(cur < prev);
            prev = cur;
        }
    }

    TEST_CASE("link budget conversion happens once")
    {
        LinkBudgetConfig cfg;
        CHECK(cfg.tx_power_linear() == doctest::Approx(std::pow(10.0, 0.5)).epsilon(1e-15));
        CHECK(cfg.noise_power_linear() == doctest::Approx(1e-8).epsilon(1e-15));
        const auto p = make_placement(50.0, 1.0, cfg);
        CHECK(p.noise_power_linear == cfg.noise_power_linear());
        cfg.ref_path_loss_db = -1.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }

    TEST_CASE("default Bob in Cartesian form")
    {
        const auto bob = fixture::default_bob();
        CHECK(bob.range_m == doctest::Approx(94.868329805051374).epsilon(1e-15));
        CHECK(bob.angle_rad == doctest::Approx(std::atan(3.0)).epsilon(1e-15));
        CHECK(rad_to_deg(bob.angle_rad) == doctest::Approx(71.565051177077989).epsilon(1e-12));
    }

    TEST_CASE("grid spec")
    {
        GridSpec g;
        CHECK(g.nx() == 301);
        CHECK(g.ny() == 300);
        CHECK(g.cells() == 90300);
        g.resolution = 0.1;
        g.x_min = 0.0;
        g.x_max = 1.0;
        CHECK(g.nx() == 11);
        g.resolution = 0.0;
        CHECK_THROWS_AS(g.validate(), std::invalid_argument);
        g.resolution = 1.0;
        g.x_max = g.x_min;
        CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    }

    TEST_CASE("baseline params")
    {
        const auto p = BaselineParams::standard(21, fixture::carrier);
        const double lambda = fixture::lambda();
        CHECK(p.min_spacing == doctest::Approx(0.5 * lambda));
        CHECK(p.uniform_spacing == doctest::Approx(0.75 * lambda));
        CHECK(p.aperture_half_width == doctest::Approx(21 * lambda));
        CHECK(p.uniform_freq_step == -1e6);
        CHECK(p.freq_shift_min == -10e6);
        CHECK(p.freq_shift_max == 10e6);
        CHECK_NOTHROW(p.validate());

        BaselineParams bad = p;
        bad.uniform_spacing = 0.4 * lambda;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        bad = p;
        bad.min_spacing = 0.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        bad = p;
        bad.freq_shift_min = 1.0;
        bad.freq_shift_max = 0.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }

    TEST_CASE("uniform baselines")
    {
        BaselineParams p = BaselineParams::standard(3, fixture::carrier);
        const double dd = p.uniform_spacing;
        const auto cpa3 = make_cpa(3, p, 30e9);
        CHECK(cpa3.positions == std::vector<double>{-dd, 0.0, dd});

        p.uniform_freq_step = -1e6;
        const auto fda2 = make_linear_fda(2, p, 30e9);
        CHECK(fda2.freq_shifts == std::vector<double>{0.5e6, -0.5e6});

        const auto p21 = BaselineParams::standard(21, fixture::carrier);
        const auto cpa21 = make_cpa(21, p21, 30e9);
        CHECK(cpa21.positions.front() == doctest::Approx(-7.5 * fixture::lambda()).epsilon(1e-14));
        CHECK(cpa21.positions.back() == doctest::Approx(7.5 * fixture::lambda()).epsilon(1e-14));

        CHECK_THROWS_AS(make_cpa(0, p, 30e9), std::invalid_argument);

        for (std::size_t M : {1u, 2u, 7u, 20u, 21u, 64u})
        {
            const auto pm = BaselineParams::standard(M, fixture::carrier);
            const auto cpa = make_cpa(M, pm, 30e9);
            const auto fda = make_linear_fda(M, pm, 30e9);
            CHECK(cpa.positions == fda.positions);
            double sum = 0.0;
            for (std::size_t m = 0; m < M; ++m)
            {
                sum += cpa.positions[m];
                REQUIRE(std::abs(cpa.positions[m] + cpa.positions[M - 1 - m]) <= 1e-12);
                REQUIRE(std::abs(fda.freq_shifts[m] + fda.freq_shifts[M - 1 - m]) <= 1e-12);
                REQUIRE(cpa.freq_shifts[m] == 0.0);
            }
            CHECK(std::abs(sum) < 1e-12);
        }
    }

    TEST_CASE("canonical eavesdroppers")
    {
        const std::size_t M = 21;
        const auto params = BaselineParams::standard(M, fixture::carrier);
        const auto bob = fixture::default_bob();
        const auto e = place_canonical_eves(M, bob, params, fixture::link, fixture::carrier);

        // 3c / (2 M |Delta F|) with the configured c; the 3e8 approximation would give 21.43 m
        CHECK(e[0].range_m - bob.range_m == doctest::Approx(3.0 * speed_of_light / (2.0 * 21 * 1e6)).epsilon(1e-12));
        CHECK(e[0].range_m - bob.range_m == doctest::Approx(21.43).epsilon(1e-3));
        // 3 lambda / (2 M Delta D) = 2 / 21 rad inside the cosine
        CHECK(bob.angle_rad - e[1].angle_rad == doctest::Approx(2.0 / 21.0).epsilon(1e-12));

        CHECK(e[0].angle_rad == bob.angle_rad);
        CHECK(e[1].range_m == bob.range_m);
        CHECK(e[2].angle_rad == e[1].angle_rad);
        CHECK(e[2].range_m == e[0].range_m);
        for (const auto &p : e)
            CHECK(p.path_loss_linear == doctest::Approx(oracle::path_loss(p.range_m, 30.0, 25.0)).epsilon(1e-12));

        // cos-space variant lands on the standard sidelobe position
        const auto ec = place_canonical_eves(M, bob, params, fixture::link, fixture::carrier,
                                             SidelobeAngleFormula::cos_space);
        CHECK(std::cos(ec[1].angle_rad) - std::cos(bob.angle_rad) == doctest::Approx(2.0 / 21.0).epsilon(1e-12));

        // E1's range offset shrinks as M grows
        double prev = 1e300;
        for (std::size_t m = 4; m <= 64; ++m)
        {
            const auto em = place_canonical_eves(m, bob, BaselineParams::standard(m, fixture::carrier), fixture::link,
                                                 fixture::carrier);
            const double off = em[0].range_m - bob.range_m;
            REQUIRE(off > 0.0);
            REQUIRE(off < prev);
            prev = off;
        }

        BaselineParams zero_df = params;
        zero_df.uniform_freq_step = 0.0;
        CHECK_THROWS_AS(place_canonical_eves(M, bob, zero_df, fixture::link, fixture::carrier), std::invalid_argument);
        BaselineParams zero_dd = params;
        zero_dd.uniform_spacing = 0.0;
        CHECK_THROWS_AS(place_canonical_eves(M, bob, zero_dd, fixture::link, fixture::carrier), std::invalid_argument);
        CHECK_THROWS_AS(place_canonical_eves(1, bob, params, fixture::link, fixture::carrier), std::invalid_argument);
    }

    TEST_CASE("target region")
    {
        const std::size_t M = 21;
        const auto params = BaselineParams::standard(M, fixture::carrier);
        const auto bob = fixture::default_bob();
        const double band = speed_of_light / (M * 1e6);

        CHECK(in_target_region(bob, bob, M, params, fixture::carrier));
        CHECK_FALSE(in_target_region(make_placement(bob.range_m + 10.0 * band, bob.angle_rad, fixture::link), bob, M,
                                     params, fixture::carrier));

        // Exactly on the range boundary: c = 3e8, M = 3, |Delta F| = 1 MHz -> band of 100 m
        Carrier c3{30e9, 3e8};
        BaselineParams p3 = BaselineParams::standard(3, c3);
        Placement b = make_placement(64.0, 1.0, fixture::link);
        CHECK(in_target_region(make_placement(164.0, 1.0, fixture::link), b, 3, p3, c3));
        CHECK_FALSE(in_target_region(make_placement(164.0 + 1e-9, 1.0, fixture::link), b, 3, p3, c3));

        // Angular boundary, cos-space convention
        const double null_cos = fixture::lambda() / (M * params.uniform_spacing);
        const auto off_in = target_region_offsets(make_placement(bob.range_m, std::acos(std::cos(bob.angle_rad) + 0.999 * null_cos),
                                                                 fixture::link),
                                                  bob, M, params, fixture::carrier);
        CHECK(off_in.angle_ratio == doctest::Approx(0.999).epsilon(1e-9));
        CHECK(off_in.range_ratio == 0.0);
        CHECK_FALSE(in_target_region(make_placement(bob.range_m, std::acos(std::cos(bob.angle_rad) + 1.001 * null_cos),
                                                    fixture::link),
                                     bob, M, params, fixture::carrier));

        // Angle-space convention uses the arccos half-width around theta_B
        const double hw = std::abs(bob.angle_rad - std::acos(std::cos(bob.angle_rad - null_cos)));
        CHECK(in_target_region(make_placement(bob.range_m, bob.angle_rad + 0.99 * hw, fixture::link), bob, M, params,
                               fixture::carrier, TargetAngleConvention::angle_space));
        CHECK_FALSE(in_target_region(make_placement(bob.range_m, bob.angle_rad + 1.01 * hw, fixture::link), bob, M,
                                     params, fixture::carrier, TargetAngleConvention::angle_space));

        // Canonical eves lie outside
        for (const auto &e : place_canonical_eves(M, bob, params, fixture::link, fixture::carrier))
            CHECK_FALSE(in_target_region(e, bob, M, params, fixture::carrier));
    }

    TEST_CASE("random eavesdroppers outside the target region")
    {
        const std::size_t M = 21;
        const auto params = BaselineParams::standard(M, fixture::carrier);
        const auto bob = fixture::default_bob();
        const SampleDomain dom;

        const auto a = sample_eves_outside_target(5, bob, M, params, dom, 777, fixture::link, fixture::carrier);
        const auto b = sample_eves_outside_target(5, bob, M, params, dom, 777, fixture::link, fixture::carrier);
        REQUIRE(a.size() == 5);
        std::set<std::pair<double, double>> distinct;
        for (std::size_t k = 0; k < 5; ++k)
        {
            CHECK(a[k].range_m == b[k].range_m);
            CHECK(a[k].angle_rad == b[k].angle_rad);
            CHECK(a[k].path_loss_linear > 0.0);
            CHECK(a[k].range_m >= dom.range_min);
            CHECK(a[k].range_m <= dom.range_max);
            CHECK(a[k].angle_rad >= dom.angle_min_rad);
            CHECK(a[k].angle_rad <= dom.angle_max_rad);
            CHECK_FALSE(in_target_region(a[k], bob, M, params, fixture::carrier));
            distinct.insert({a[k].range_m, a[k].angle_rad});
        }
        CHECK(distinct.size() == 5);

        // Prefix nesting: a 3-draw equals the first three of the 5-draw
        const auto c = sample_eves_outside_target(3, bob, M, params, dom, 777, fixture::link, fixture::carrier);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(c[k].range_m == a[k].range_m);

        const auto d = sample_eves_outside_target(5, bob, M, params, dom, 778, fixture::link, fixture::carrier);
        CHECK(d[0].range_m != a[0].range_m);

        CHECK(sample_eves_outside_target(0, bob, M, params, dom, 1, fixture::link, fixture::carrier).empty());

        // A domain entirely inside the target region cannot be sampled
        SampleDomain inside;
        inside.range_min = bob.range_m - 0.5;
        inside.range_max = bob.range_m + 0.5;
        inside.angle_min_rad = bob.angle_rad - 1e-3;
        inside.angle_max_rad = bob.angle_rad + 1e-3;
        CHECK_THROWS_AS(sample_eves_outside_target(1, bob, M, params, inside, 1, fixture::link, fixture::carrier),
                        SamplingExhausted);

        SampleDomain bad;
        bad.range_min = -1.0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}
