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

#include "fdma/io.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <fstream>

#include <fmt/format.h>

#include "fdma/errors.hpp"

namespace fdma
{
    std::string format_real(double v) { return fmt::format("{:.17g}", v); }

    namespace
    {
        void dump_into(std::string &out, const json &j, int indent)
        {
            const std::string pad(std::size_t(indent + 2), ' ');
            switch (j.type())
            {
            case json::value_t::object:
            {
                if (j.empty())
                {
                    out += "{}";
                    return;
                }
                out += "{\n";
                bool first = true;
                for (const auto &[key, value] : j.items())
                {
                    if (!first)
                        out += ",\n";
                    first = false;
                    out += pad + json(key).dump() + ": ";
                    dump_into(out, value, indent + 2);
                }
                out += "\n" + std::string(std::size_t(indent), ' ') + "}";
                return;
            }
            case json::value_t::array:
            {
                if (j.empty())
                {
                    out += "[]";
                    return;
                }
                // Arrays of scalars stay on one line
                const bool flat = std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_primitive(); });
                out += flat ? "[" : "[\n";
                bool first = true;
                for (const auto &e : j)
                {
                    if (!first)
                        out += flat ? ", " : ",\n";
                    first = false;
                    if (!flat)
                        out += pad;
                    dump_into(out, e, indent + 2);
                }
                out += flat ? "]" : "\n" + std::string(std::size_t(indent), ' ') + "]";
                return;
            }
            case json::value_t::number_float:
            {
                const double v = j.get<double>();
                out += std::isfinite(v) ? format_real(v) : "null";
                return;
            }
            default:
                out += j.dump();
            }
        }

        std::string footer(double baseline_cost, double final_cost)
        {
            return "# baseline_cost=" + format_real(baseline_cost) + ",final_cost=" + format_real(final_cost) + "\n";
        }
    }

    std::string dump_json(const json &doc)
    {
        std::string out;
        dump_into(out, doc, 0);
        out += "\n";
        return out;
    }

    std::filesystem::path ensure_directory(const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir))
            throw IoError("cannot create output directory '" + dir.string() + "'");
        return dir;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &content)
    {
        if (path.has_parent_path())
            ensure_directory(path.parent_path());
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path.string() + "' for writing");
        out.write(content.data(), std::streamsize(content.size()));
        out.close();
        if (!out)
            throw IoError("failed writing '" + path.string() + "'");
    }

    std::string raster_csv(const std::vector<RasterRecord> &records)
    {
        std::string out = "x_m,y_m,power_db\n";
        out.reserve(records.size() * 48);
        for (const auto &r : records)
            fmt::format_to(std::back_inserter(out), "{:.17g},{:.17g},{:.17g}\n", r.x_m, r.y_m, r.normalized_power_db);
        return out;
    }

    std::string sweep_csv(const std::vector<SweepRecord> &records)
    {
        std::string out = "sweep_value,configuration,secrecy_rate,seed,trial\n";
        for (const auto &r : records)
            fmt::format_to(std::back_inserter(out), "{:.17g},{},{:.17g},{},{}\n", r.sweep_value,
                           to_string(r.configuration), r.secrecy_rate, r.seed, r.trial);
        return out;
    }

    std::string compare_csv(const std::vector<DesignComparison> &records)
    {
        std::string out =
            "index,position_a_lambda,position_b_lambda,position_diff_lambda,shift_a_mhz,shift_b_mhz,shift_diff_mhz\n";
        for (const auto &r : records)
            fmt::format_to(std::back_inserter(out), "{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.index,
                           r.position_a_lambda, r.position_b_lambda, r.position_diff_lambda(), r.shift_a_mhz,
                           r.shift_b_mhz, r.shift_diff_mhz());
        return out;
    }

    std::string sa_trace_csv(const std::vector<SaTraceRecord> &trace, double baseline_cost, double final_cost)
    {
        std::string out = "round,phase,t,temperature,cost,accepted\n";
        out.reserve(trace.size() * 64);
        for (const auto &r : trace)
            fmt::format_to(std::back_inserter(out), "{},{},{},{:.17g},{:.17g},{}\n", r.round, r.phase, r.step.t,
                           r.step.temperature, r.step.cost, r.step.accepted ? 1 : 0);
        return out + footer(baseline_cost, final_cost);
    }

    std::string perturb_trace_csv(const std::vector<PerturbTraceRecord> &trace, double baseline_cost,
                                  double final_cost)
    {
        std::string out = "round,subproblem,cost,clip_count,active_constraints\n";
        for (const auto &r : trace)
            fmt::format_to(std::back_inserter(out), "{},{},{:.17g},{},{}\n", r.round, r.subproblem, r.cost,
                           r.clip_count, r.active_constraints);
        return out + footer(baseline_cost, final_cost);
    }

    json design_json(const ArrayDesign &design, const Carrier &carrier)
    {
        const double lambda = carrier.wavelength();
        json pos_m = json::array(), pos_l = json::array(), f_hz = json::array(), f_mhz = json::array();
        for (std::size_t m = 0; m < design.size(); ++m)
        {
            pos_m.push_back(design.positions[m]);
            pos_l.push_back(design.positions[m] / lambda);
            f_hz.push_back(design.freq_shifts[m]);
            f_mhz.push_back(design.freq_shifts[m] * 1e-6);
        }
        json j;
        j["num_antennas"] = design.size();
        j["f0_hz"] = design.f0_hz;
        j["wavelength_m"] = lambda;
        j["positions_m"] = std::move(pos_m);
        j["positions_lambda"] = std::move(pos_l);
        j["freq_shifts_hz"] = std::move(f_hz);
        j["freq_shifts_mhz"] = std::move(f_mhz);
        return j;
    }
}
