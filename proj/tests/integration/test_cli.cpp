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

// End-to-end runs of the command line tool. FDMA_CLI_PATH is set by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdma/experiment.hpp"
#include "fdma/scenario.hpp"

namespace fs = std::filesystem;

namespace
{
    const fs::path scratch = fs::temp_directory_path() / "fdma_cli_tests";

    std::string read_file(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path write_config(const std::string &name, const std::string &text)
    {
        fs::create_directories(scratch);
        const auto p = scratch / name;
        std::ofstream(p) << text;
        return p;
    }

    // Runs the tool with `args`, stderr captured to <out>.err; returns the exit status
    int run(const std::string &args, const fs::path &err_file = scratch / "last.err")
    {
        fs::create_directories(scratch);
        const std::string cmd = std::string("FDMA_LOG=quiet \"") + FDMA_CLI_PATH + "\" " + args + " 2> \"" +
                                err_file.string() + "\" > /dev/null";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::vector<std::vector<std::string>> read_csv(const fs::path &p)
    {
        std::vector<std::vector<std::string>> rows;
        std::ifstream in(p);
        std::string line;
        while (std::getline(in, line))
        {
            if (line.empty() || line[0] == '#')
                continue;
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                cells.push_back(cell);
            rows.push_back(cells);
        }
        return rows;
    }

    std::map<std::string, double> marker_power(const fs::path &dir)
    {
        std::map<std::string, double> out;
        const auto rows = read_csv(dir / "markers.csv");
        for (std::size_t i = 1; i < rows.size(); ++i)
            out[rows[i][0]] = std::stod(rows[i][5]);
        return out;
    }

    // Every .csv and .json below `dir`, keyed by relative path
    std::map<std::string, std::string> outputs(const fs::path &dir)
    {
        std::map<std::string, std::string> out;
        for (const auto &e : fs::recursive_directory_iterator(dir))
            if (e.is_regular_file() && (e.path().extension() == ".csv" || e.path().extension() == ".json"))
                out[fs::relative(e.path(), dir).string()] = read_file(e.path());
        return out;
    }

    const std::string small_sweep = "f0_hz = 30e9\nsweep_m_values = 5, 9, 13\nsweep_k_values = 1, 2\n"
                                    "sweep_k_m_values = 7\ntrials = 2\nsa_max_iterations = 400\n";
}

TEST_SUITE("cli")
{
    TEST_CASE("beampattern with defaults")
    {
        const auto out = scratch / "bp_cpa";
        fs::remove_all(out);
        REQUIRE(run("--out \"" + out.string() + "\" beampattern") == 0);
        const auto rows = read_csv(out / "raster.csv");
        REQUIRE(rows.size() == fdma::GridSpec{}.cells() + 1);
        CHECK(rows[0] == std::vector<std::string>{"x_m", "y_m", "power_db"});
        double worst = -1e300;
        for (std::size_t i = 1; i < rows.size(); ++i)
            worst = std::max(worst, std::stod(rows[i][2]));
        CHECK(worst <= 1e-6);

        const auto manifest = nlohmann::json::parse(read_file(out / "manifest.json"));
        CHECK(manifest["command"] == "beampattern");
        CHECK(manifest["master_seed"].get<std::uint64_t>() == 20260101u);
        CHECK(manifest["configuration"]["f0_hz"] == "30000000000");
        CHECK(manifest["outputs"].size() >= 2);
        CHECK(marker_power(out).at("BOB") == doctest::Approx(0.0).epsilon(1e-9));
    }

    TEST_CASE("configuration errors")
    {
        const auto err = scratch / "cfg.err";
        CHECK(run("--config \"" + write_config("nof0.cfg", "M = 11\n").string() + "\" --out \"" +
                      (scratch / "x").string() + "\" beampattern",
                  err) == 2);
        auto record = nlohmann::json::parse(read_file(err));
        CHECK(record["error"] == "config");
        CHECK(record["key"] == "f0_hz");

        CHECK(run("--config \"" + write_config("unknown.cfg", "f0_hz = 30e9\n\nwidth = 3\n").string() + "\" --out \"" +
                      (scratch / "x").string() + "\" beampattern",
                  err) == 2);
        record = nlohmann::json::parse(read_file(err));
        CHECK(record["key"] == "width");
        CHECK(record["line"] == 3);

        CHECK(run("--config \"" + (scratch / "absent.cfg").string() + "\" beampattern", err) == 3);
        CHECK(nlohmann::json::parse(read_file(err))["error"] == "io");
        CHECK(run("--kind NOPE --out \"" + (scratch / "x").string() + "\" beampattern", err) != 0);
        CHECK(run("", err) == 64);
    }

    TEST_CASE("sweep over M")
    {
        const auto out = scratch / "sweep_m";
        fs::remove_all(out);
        const auto cfg = write_config("small.cfg", small_sweep);
        REQUIRE(run("--config \"" + cfg.string() + "\" --out \"" + out.string() + "\" sweep-m") == 0);
        const auto rows = read_csv(out / "sweep.csv");
        REQUIRE(!rows.empty());
        CHECK(rows[0] == std::vector<std::string>{"sweep_value", "configuration", "secrecy_rate", "seed", "trial"});
        std::map<std::string, std::vector<double>> by_kind;
        for (std::size_t i = 1; i < rows.size(); ++i)
            by_kind[rows[i][1]].push_back(std::stod(rows[i][2]));
        CHECK(by_kind.size() == fdma::all_configurations.size());
        for (const auto &[kind, v] : by_kind)
            CHECK(v.size() == 3);
        const auto &ub = by_kind.at("UPPER_BOUND");
        CHECK(ub[0] < ub[1]);
        CHECK(ub[1] < ub[2]);
    }

    TEST_CASE("sweep over K")
    {
        const auto out = scratch / "sweep_k";
        fs::remove_all(out);
        const auto cfg = write_config("small.cfg", small_sweep);
        REQUIRE(run("--config \"" + cfg.string() + "\" --out \"" + out.string() +
                    "\" --kind FDMA_OPT1,FDMA_OPT2,UPPER_BOUND sweep-k") == 0);
        CHECK(read_csv(out / "sweep_k_M7.csv").size() == 1 + 2 * 3 * 2);
        CHECK(read_csv(out / "sweep_k_M7_mean.csv").size() == 1 + 2 * 3);
    }

    TEST_CASE("optimize with annealing")
    {
        const auto a = scratch / "opt_sa_a", b = scratch / "opt_sa_b";
        fs::remove_all(a);
        fs::remove_all(b);
        REQUIRE(run("--out \"" + a.string() + "\" optimize --method sa") == 0);
        REQUIRE(run("--threads 1 --out \"" + b.string() + "\" optimize --method sa") == 0);
        CHECK(read_file(a / "design.json") == read_file(b / "design.json"));
        CHECK(read_file(a / "trace.csv") == read_file(b / "trace.csv"));

        const auto doc = nlohmann::json::parse(read_file(a / "design.json"));
        CHECK(doc["final_cost"].get<double>() < doc["baseline_cost"].get<double>());
        const std::string trace = read_file(a / "trace.csv");
        const auto footer = trace.find("# baseline_cost=");
        REQUIRE(footer != std::string::npos);
        const double base = std::stod(trace.substr(footer + 16));
        const double fin = std::stod(trace.substr(trace.find("final_cost=", footer) + 11));
        CHECK(fin < base);
    }

    TEST_CASE("perturbation without eavesdroppers keeps the baseline")
    {
        const auto out = scratch / "opt_k0";
        fs::remove_all(out);
        const auto cfg = write_config("k0.cfg", "f0_hz = 30e9\nK = 0\n");
        REQUIRE(run("--config \"" + cfg.string() + "\" --out \"" + out.string() + "\" optimize --method perturb") == 0);
        const auto doc = nlohmann::json::parse(read_file(out / "design.json"));
        fdma::ExperimentSetup setup;
        const auto fda = fdma::make_linear_fda(21, setup.params(21), setup.carrier.f0_hz);
        const auto &design = doc.contains("design") ? doc["design"] : doc;
        REQUIRE(design["positions_m"].size() == 21);
        for (std::size_t m = 0; m < 21; ++m)
        {
            CHECK(design["positions_m"][m].get<double>() == fda.positions[m]);
            CHECK(design["freq_shifts_hz"][m].get<double>() == fda.freq_shifts[m]);
        }
    }

    TEST_CASE("compare")
    {
        const auto out = scratch / "compare";
        fs::remove_all(out);
        REQUIRE(run("--out \"" + out.string() + "\" --kind LINEAR_FDA compare --against CPA") == 0);
        const auto rows = read_csv(out / "compare.csv");
        REQUIRE(rows.size() == 22);
        for (std::size_t i = 1; i < rows.size(); ++i)
        {
            CHECK(std::stod(rows[i][3]) == 0.0);
            CHECK(std::stod(rows[i][6]) == doctest::Approx(-(double(i) - 11.0)).epsilon(1e-12));
        }
    }

    TEST_CASE("byte-identical reruns")
    {
        const auto cfg = write_config("small.cfg", small_sweep);
        const std::vector<std::string> commands = {
            "--kind FDMA_OPT2 beampattern", "sweep-m", "--kind FDMA_OPT1,FDMA_OPT2 sweep-k",
            "optimize --method perturb", "compare"};
        for (const auto &c : commands)
        {
            const auto a = scratch / "rerun_a", b = scratch / "rerun_b";
            fs::remove_all(a);
            fs::remove_all(b);
            const std::string base = "--config \"" + cfg.string() + "\" --seed 99 ";
            REQUIRE(run(base + "--out \"" + a.string() + "\" " + c) == 0);
            REQUIRE(run(base + "--threads 2 --out \"" + b.string() + "\" " + c) == 0);
            const auto oa = outputs(a), ob = outputs(b);
            CHECK(oa.size() >= 2);
            CHECK_MESSAGE(oa == ob, c);
        }
    }
}

TEST_SUITE("cli_examples")
{
    TEST_CASE("perturbed design nulls every canonical eavesdropper by 20 dB")
    {
        const auto fda = scratch / "null_fda", opt = scratch / "null_opt2";
        fs::remove_all(fda);
        fs::remove_all(opt);
        REQUIRE(run("--kind LINEAR_FDA --out \"" + fda.string() + "\" beampattern") == 0);
        REQUIRE(run("--kind FDMA_OPT2 --out \"" + opt.string() + "\" beampattern") == 0);
        const auto ref = marker_power(fda), got = marker_power(opt);
        for (const std::string e : {"E1", "E2", "E3"})
        {
            MESSAGE(e, ": linear FDA ", ref.at(e), " dB, FDMA_OPT2 ", got.at(e), " dB");
            CHECK(got.at(e) <= ref.at(e) - 20.0);
        }
    }

    TEST_CASE("annealed design approaches the upper bound at M = 21")
    {
        const auto out = scratch / "ub_gap";
        fs::remove_all(out);
        const auto cfg = write_config("m21.cfg", "f0_hz = 30e9\nsweep_m_values = 21\n");
        REQUIRE(run("--config \"" + cfg.string() + "\" --kind FDMA_OPT1,UPPER_BOUND --out \"" + out.string() +
                    "\" sweep-m") == 0);
        const auto rows = read_csv(out / "sweep.csv");
        REQUIRE(rows.size() == 3);
        const double gap = std::stod(rows[2][2]) - std::stod(rows[1][2]);
        MESSAGE("gap to the upper bound ", gap, " bit/s/Hz");
        CHECK(gap <= 0.5);
    }
}
