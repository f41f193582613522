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

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fdma/config.hpp"
#include "fdma/errors.hpp"
#include "fdma/io.hpp"

#include "../support/fixtures.hpp"

using namespace fdma;

namespace
{
    // Line and key of the ConfigError raised by `text`
    std::pair<int, std::string> config_failure(const std::string &text)
    {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return {e.line(), e.key()};
        }
        return {-1, ""};
    }

    std::size_t count_lines(const std::string &s) { return std::size_t(std::count(s.begin(), s.end(), '\n')); }
}

TEST_SUITE("config")
{
    TEST_CASE("defaults need only the carrier")
    {
        const auto cfg = parse_config("f0_hz = 30e9\n");
        CHECK(cfg.setup.carrier.f0_hz == 30e9);
        CHECK(cfg.M == 21);
        CHECK(cfg.K == 3);
        CHECK(cfg.seed == 20260101u);
        CHECK(cfg.setup.bob_range_m == doctest::Approx(std::hypot(30.0, 90.0)).epsilon(1e-15));
        CHECK(cfg.setup.bob_angle_rad == doctest::Approx(std::atan2(90.0, 30.0)).epsilon(1e-15));
        CHECK(cfg.setup.sa.cooling_factor == 0.95);
        CHECK(cfg.setup.sa.max_iterations == 5000);
        CHECK(cfg.sweep_m_values == std::vector<std::size_t>{11, 15, 21, 27, 31});
    }

    TEST_CASE("missing carrier names the key")
    {
        try
        {
            parse_config("M = 11\n");
            FAIL("no error raised");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.key() == "f0_hz");
            CHECK(std::string(e.what()).find("f0_hz") != std::string::npos);
        }
    }

    TEST_CASE("diagnostics carry line and key")
    {
        CHECK(config_failure("f0_hz = 30e9\n# note\nfrequency = 3\n") == std::pair<int, std::string>{3, "frequency"});
        CHECK(config_failure("f0_hz = 30e9\nM = 11\nM = 13\n") == std::pair<int, std::string>{3, "M"});
        CHECK(config_failure("f0_hz = 30e9\nM = eleven\n") == std::pair<int, std::string>{2, "M"});
        CHECK(config_failure("f0_hz = 30e9\nM = 11 apples\n") == std::pair<int, std::string>{2, "M"});
        CHECK(config_failure("f0_hz = 30e9\nsa_cooling_factor =\n") == std::pair<int, std::string>{2, "sa_cooling_factor"});
        CHECK(config_failure("f0_hz = 30e9\njust words\n").first == 2);
        CHECK(config_failure("f0_hz = 30e9\nK = 5\n").second == "K");   // canonical needs K <= 3
        CHECK(config_failure("f0_hz = 30e9\nM = 3\nK = 3\n").second == "K");
        CHECK(config_failure("f0_hz = 30e9\neve_placement = nearby\n").second == "eve_placement");
        CHECK(config_failure("f0_hz = 30e9\nbob_x_m = 10\n").second == "bob_y_m");
        CHECK(config_failure("f0_hz = 30e9\nbob_x_m = 10\nbob_y_m = 5\nbob_range_m = 3\nbob_angle_deg = 40\n").first == 0);
    }

    TEST_CASE("comments, spacing and lists")
    {
        const auto cfg = parse_config("  # header\nf0_hz=28e9   # inline\n\n sweep_m_values = 5, 9,13 \n"
                                      "perturb_ridge_position = 0.5\nperturb_ridge_frequency = auto\n"
                                      "eve_placement = random\nK = 5\n");
        CHECK(cfg.setup.carrier.f0_hz == 28e9);
        CHECK(cfg.sweep_m_values == std::vector<std::size_t>{5, 9, 13});
        CHECK(cfg.setup.perturb.ridge_position == 0.5);
        CHECK(!cfg.setup.perturb.ridge_frequency.has_value());
        CHECK(cfg.eve_placement == EvePlacement::random);
    }

    TEST_CASE("polar Bob")
    {
        const auto cfg = parse_config("f0_hz = 30e9\nbob_range_m = 80\nbob_angle_deg = 60\n");
        CHECK(cfg.bob_form == BobForm::polar);
        CHECK(cfg.setup.bob_range_m == 80.0);
        CHECK(cfg.setup.bob_angle_rad == doctest::Approx(M_PI / 3.0).epsilon(1e-15));
    }

    TEST_CASE("resolved snapshot parses back to the same configuration")
    {
        for (const char *text : {"f0_hz = 30e9\n",
                                 "f0_hz = 2.8e10\nM = 15\nK = 2\nsa_cooling_factor = 0.9\nbob_range_m = 70.25\n"
                                 "bob_angle_deg = 100.125\nperturb_ridge_position = 1e-7\ngrid_resolution_m = 0.5\n"
                                 "e2_formula = cos_space\ntarget_angle_convention = angle_space\n"})
        {
            const auto a = parse_config(text);
            const auto b = parse_config(to_config_text(a));
            CHECK(resolved_entries(a) == resolved_entries(b));
            CHECK(to_config_text(b) == to_config_text(a));
        }
        // Every key shows up in the snapshot
        const auto entries = resolved_entries(parse_config("f0_hz = 30e9\n"));
        CHECK(entries.size() >= 40);
    }

    TEST_CASE("scenario from a configuration")
    {
        auto cfg = parse_config("f0_hz = 30e9\nM = 21\nK = 3\n");
        const auto sc = cfg.scenario();
        CHECK(sc.eves.size() == 3);
        const auto canonical = cfg.setup.canonical_scenario(21);
        CHECK(sc.eves[0].range_m == canonical.eves[0].range_m);

        auto rnd = parse_config("f0_hz = 30e9\nM = 21\nK = 6\neve_placement = random\nseed = 4\n");
        const auto a = rnd.scenario(), b = rnd.scenario();
        REQUIRE(a.eves.size() == 6);
        for (std::size_t k = 0; k < 6; ++k)
        {
            CHECK(a.eves[k].range_m == b.eves[k].range_m);
            CHECK(!in_target_region(a.eves[k], a.bob, 21, rnd.setup.params(21), rnd.setup.carrier));
        }
    }

    TEST_CASE("loading files")
    {
        const auto dir = std::filesystem::temp_directory_path() / "fdma_config_test";
        std::filesystem::create_directories(dir);
        const auto path = dir / "run.cfg";
        std::ofstream(path) << "f0_hz = 30e9\nM = 9\n";
        CHECK(load_config(path.string()).M == 9);
        CHECK_THROWS_AS(load_config((dir / "absent.cfg").string()), IoError);
        std::filesystem::remove_all(dir);
    }
}

TEST_SUITE("io")
{
    TEST_CASE("seventeen digits survive a round trip")
    {
        Rng rng(8);
        for (int i = 0; i < 10000; ++i)
        {
            const double v = std::ldexp(rng.uniform(-1.0, 1.0), int(rng.index(200)) - 100);
            const std::string s = format_real(v);
            double back = 0.0;
            std::from_chars(s.data(), s.data() + s.size(), back);
            CHECK(back == v);
        }
        CHECK(format_real(0.1) == "0.10000000000000001");
        CHECK(format_real(1.0) == "1");
    }

    TEST_CASE("JSON emitter")
    {
        json doc;
        doc["name"] = "x";
        doc["values"] = json::array({0.1, 2.0, -3.5});
        doc["nested"]["n"] = 3;
        doc["nested"]["bad"] = std::nan("");
        const std::string text = dump_json(doc);
        CHECK(text.find("0.10000000000000001") != std::string::npos);
        CHECK(text.find("\"bad\": null") != std::string::npos);
        const auto back = json::parse(text);
        CHECK(back["values"][0].get<double>() == 0.1);
        CHECK(back["nested"]["n"].get<int>() == 3);
        CHECK(back["name"] == "x");
        CHECK(dump_json(doc) == text);
    }

    TEST_CASE("CSV layouts")
    {
        std::vector<RasterRecord> raster = {{1.0, 2.0, -3.25}, {2.0, 2.0, 0.0}};
        const auto r = raster_csv(raster);
        CHECK(r.rfind("x_m,y_m,power_db\n", 0) == 0);
        CHECK(count_lines(r) == 3);
        CHECK(r.find("1,2,-3.25\n") != std::string::npos);

        std::vector<SweepRecord> sweep = {{21.0, ConfigurationKind::fdma_opt1, 6.25, 42, 0, 21, 7.0}};
        const auto s = sweep_csv(sweep);
        CHECK(s == "sweep_value,configuration,secrecy_rate,seed,trial\n21,FDMA_OPT1,6.25,42,0\n");

        std::vector<PerturbTraceRecord> pt = {{0, "positions", 0.5, 1, 2}};
        const auto p = perturb_trace_csv(pt, 1.0, 0.5);
        CHECK(p.find("round,subproblem,cost,clip_count,active_constraints\n0,positions,0.5,1,2\n") == 0);
        CHECK(p.find("# baseline_cost=1,final_cost=0.5") != std::string::npos);
    }

    TEST_CASE("design document")
    {
        const auto params = BaselineParams::standard(5, fixture::carrier);
        const auto d = make_linear_fda(5, params, fixture::carrier.f0_hz);
        const auto j = json::parse(dump_json(design_json(d, fixture::carrier)));
        CHECK(j["num_antennas"].get<int>() == 5);
        CHECK(j["positions_lambda"][4].get<double>() == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(j["freq_shifts_mhz"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(j["positions_m"][0].get<double>() == d.positions[0]);
        CHECK(j["freq_shifts_hz"][3].get<double>() == d.freq_shifts[3]);
    }

    TEST_CASE("file writing")
    {
        const auto dir = std::filesystem::temp_directory_path() / "fdma_io_test";
        std::filesystem::remove_all(dir);
        write_text_file(dir / "a" / "b.txt", "hello\n");
        std::ifstream in(dir / "a" / "b.txt");
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == "hello\n");
        std::ofstream(dir / "file") << "x";
        CHECK_THROWS_AS(write_text_file(dir / "file" / "c.txt", "y"), IoError);
        std::filesystem::remove_all(dir);
    }
}
