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

// Output files: CSV tables and JSON documents. Every double goes out with 17 significant digits
// so values survive a write/read round trip exactly.

#ifndef FDMA_IO_HPP
#define FDMA_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdma/array_model.hpp"
#include "fdma/experiment.hpp"
#include "fdma/perturb_optimizer.hpp"
#include "fdma/sa_optimizer.hpp"

namespace fdma
{
    using json = nlohmann::ordered_json;

    std::string format_real(double v); // %.17g

    // JSON text with two-space indent; floats use format_real, non-finite floats become null
    std::string dump_json(const json &doc);

    // Creates parent directories as needed; throws IoError on failure
    void write_text_file(const std::filesystem::path &path, const std::string &content);
    std::filesystem::path ensure_directory(const std::filesystem::path &dir);

    std::string raster_csv(const std::vector<RasterRecord> &records);       // x_m,y_m,power_db
    std::string sweep_csv(const std::vector<SweepRecord> &records);         // sweep_value,configuration,...
    std::string compare_csv(const std::vector<DesignComparison> &records);
    std::string sa_trace_csv(const std::vector<SaTraceRecord> &trace, double baseline_cost, double final_cost);
    std::string perturb_trace_csv(const std::vector<PerturbTraceRecord> &trace, double baseline_cost,
                                  double final_cost);

    // Positions in meters and wavelengths, shifts in Hz and MHz
    json design_json(const ArrayDesign &design, const Carrier &carrier);
}

#endif
