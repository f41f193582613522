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

// Serial reference kernels against their OpenMP counterparts. The outputs are identical by
// construction (see the experiment tests); only the wall time differs.

#include <benchmark/benchmark.h>

#include "fdma/experiment.hpp"

namespace
{
    using namespace fdma;

    const ExperimentSetup setup{};

    void raster(benchmark::State &state, bool serial)
    {
        const std::size_t M = std::size_t(state.range(0));
        const auto sc = setup.canonical_scenario(M);
        const auto design = starting_design(ConfigurationKind::fdma_opt2, M, setup); // linear FDA clamped into the box
        const GridSpec grid; // 301 x 300 cells
        for (auto _ : state)
        {
            auto r = serial ? raster_beampattern_serial(sc, design, grid) : raster_beampattern(sc, design, grid, 0);
            benchmark::DoNotOptimize(r.data());
        }
        state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(grid.cells()));
    }

    void BM_raster_serial(benchmark::State &state) { raster(state, true); }
    void BM_raster_openmp(benchmark::State &state) { raster(state, false); }

    // Default M grid with every configuration, as the sweep-m command runs it
    void sweep_m(benchmark::State &state, int threads)
    {
        const std::vector<std::size_t> Ms = {11, 15, 21, 27, 31};
        const std::vector<ConfigurationKind> kinds(all_configurations.begin(), all_configurations.end());
        for (auto _ : state)
        {
            auto r = sweep_vs_M(setup, Ms, kinds, 20260101, {threads});
            benchmark::DoNotOptimize(r.data());
        }
    }

    void BM_sweep_m_serial(benchmark::State &state) { sweep_m(state, 1); }
    void BM_sweep_m_openmp(benchmark::State &state) { sweep_m(state, 0); }

    void sweep_k(benchmark::State &state, int threads)
    {
        const std::vector<ConfigurationKind> kinds = {ConfigurationKind::fdma_opt2, ConfigurationKind::linear_fda};
        for (auto _ : state)
        {
            auto r = sweep_vs_K(setup, {1, 3, 6}, {21}, kinds, 20260101, 20, {threads});
            benchmark::DoNotOptimize(r.data());
        }
    }

    void BM_sweep_k_serial(benchmark::State &state) { sweep_k(state, 1); }
    void BM_sweep_k_openmp(benchmark::State &state) { sweep_k(state, 0); }
}

BENCHMARK(BM_raster_serial)->Arg(21)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_raster_openmp)->Arg(21)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_m_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_m_openmp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_k_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_k_openmp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
