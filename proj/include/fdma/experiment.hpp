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

// Batch experiments: beampattern rasters, secrecy-rate sweeps over M and K, design comparisons.
//
// Work items (raster cells, (M, configuration) pairs, (M, trial, K) triples) are independent.
// Every seed is fixed before dispatch and results land in preallocated slots, so the OpenMP
// kernels return exactly the same records as the serial reference kernels.

#ifndef FDMA_EXPERIMENT_HPP
#define FDMA_EXPERIMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fdma/array_model.hpp"
#include "fdma/perturb_optimizer.hpp"
#include "fdma/sa_optimizer.hpp"
#include "fdma/scenario.hpp"

namespace fdma
{
    // OPT1 = simulated annealing, OPT2 = closed-form perturbation.
    // MA kinds keep all shifts at zero, FDA kinds keep the uniform positions.
    enum class ConfigurationKind
    {
        cpa,
        linear_fda,
        ma_opt1,
        ma_opt2,
        fda_opt1,
        fda_opt2,
        fdma_opt1,
        fdma_opt2,
        upper_bound
    };

    inline constexpr std::array<ConfigurationKind, 9> all_configurations = {
        ConfigurationKind::cpa, ConfigurationKind::linear_fda, ConfigurationKind::ma_opt1,
        ConfigurationKind::ma_opt2, ConfigurationKind::fda_opt1, ConfigurationKind::fda_opt2,
        ConfigurationKind::fdma_opt1, ConfigurationKind::fdma_opt2, ConfigurationKind::upper_bound};

    std::string_view to_string(ConfigurationKind kind);                // "CPA", "FDMA_OPT1", ...
    ConfigurationKind parse_configuration_kind(std::string_view name); // case-insensitive

    // Array geometry in wavelength units, resolved per M
    struct ArrayGeometry
    {
        double spacing_over_lambda = 0.75;
        double min_spacing_over_lambda = 0.5;
        double aperture_per_antenna_over_lambda = 1.0; // D = value * M * lambda
        double freq_step_hz = -1e6;
        double freq_shift_min_hz = -10e6;
        double freq_shift_max_hz = 10e6;

        BaselineParams for_antennas(std::size_t M, const Carrier &carrier) const;
    };

    // Everything an experiment needs besides the swept variable
    struct ExperimentSetup
    {
        LinkBudgetConfig link;
        Carrier carrier;
        double bob_range_m = 94.86832980505137; // (30 m, 90 m) Cartesian
        double bob_angle_rad = 1.2490457723982544;
        ArrayGeometry geometry;
        SidelobeAngleFormula e2_formula = SidelobeAngleFormula::literal;
        TargetAngleConvention target_convention = TargetAngleConvention::cos_space;
        SampleDomain domain;
        AnnealerConfig sa;
        AlternationConfig alternation;
        PerturbConfig perturb;

        Placement bob() const;
        BaselineParams params(std::size_t M) const { return geometry.for_antennas(M, carrier); }

        // Bob plus the first `count` (<= 3) canonical eavesdroppers for M antennas
        Scenario canonical_scenario(std::size_t M, std::size_t count = 3) const;
    };

    struct ConfiguredDesign
    {
        ConfigurationKind kind;
        ArrayDesign design;
        double baseline_cost = 0.0; // J of the un-optimized baseline design
        double start_cost = 0.0;    // J of the feasible point the optimizer starts from (<= 21 antennas: the baseline)
        double cost = 0.0;          // J of `design`, never above start_cost
    };

    // Un-optimized reference design of `kind`: CPA for MA kinds, linear FDA otherwise
    ArrayDesign baseline_design(ConfigurationKind kind, std::size_t M, const ExperimentSetup &setup);

    // Point an optimizer of `kind` starts from: the baseline with its shifts clamped into
    // [dF_min, dF_max]. The linear FDA steps (m - (M+1)/2) Delta F leave the box once
    // (M-1)/2 |Delta F| exceeds it (M > 21 with the defaults).
    ArrayDesign starting_design(ConfigurationKind kind, std::size_t M, const ExperimentSetup &setup);

    // Builds (and, for OPT kinds, optimizes) the design of `kind`. `seed` drives simulated annealing.
    // UPPER_BOUND has no design and throws std::invalid_argument.
    ConfiguredDesign design_for(ConfigurationKind kind, const Scenario &scenario, std::size_t M,
                                const ExperimentSetup &setup, std::uint64_t seed);

    // Secrecy rate of `kind`; UPPER_BOUND returns log2(1 + gamma_B)
    double secrecy_rate_for(ConfigurationKind kind, const Scenario &scenario, std::size_t M,
                            const ExperimentSetup &setup, std::uint64_t seed);

    struct RasterRecord
    {
        double x_m;
        double y_m;
        double normalized_power_db; // 10 log10(|eta|^2 / M^2), floored at -300 dB
    };

    // Row-major over y then x; the grid must lie in y > 0
    std::vector<RasterRecord> raster_beampattern(const Scenario &scenario, const ArrayDesign &design,
                                                 const GridSpec &grid, int threads = 0);
    std::vector<RasterRecord> raster_beampattern_serial(const Scenario &scenario, const ArrayDesign &design,
                                                        const GridSpec &grid);

    struct SweepRecord
    {
        double sweep_value; // M or K
        ConfigurationKind configuration;
        double secrecy_rate;
        std::uint64_t seed;
        std::size_t trial;
        std::size_t num_antennas;
        double upper_bound;
    };

    // threads == 1 runs the serial reference loop, 0 uses the OpenMP default
    struct ExecutionConfig
    {
        int threads = 0;
    };

    // K = 3 canonical eavesdroppers re-placed for every M. Records ordered by M, then by the
    // order of `configurations`.
    std::vector<SweepRecord> sweep_vs_M(const ExperimentSetup &setup, const std::vector<std::size_t> &M_values,
                                        const std::vector<ConfigurationKind> &configurations,
                                        std::uint64_t master_seed, ExecutionConfig exec = {});

    // Random eavesdroppers outside the target region; per-trial records ordered by M, K,
    // configuration and trial. Trial t of a given M draws its eavesdroppers from one stream, so the
    // K-sets of a trial are nested.
    std::vector<SweepRecord> sweep_vs_K(const ExperimentSetup &setup, const std::vector<std::size_t> &K_values,
                                        const std::vector<std::size_t> &M_values,
                                        const std::vector<ConfigurationKind> &configurations,
                                        std::uint64_t master_seed, std::size_t trials, ExecutionConfig exec = {});

    // Seed of trial t for M antennas in sweep_vs_K
    std::uint64_t sweep_k_trial_seed(std::uint64_t master_seed, std::size_t M, std::size_t trial);

    // Arithmetic mean over trials per (M, K, configuration); the result's trial field holds the
    // number of trials averaged and seed is zero
    std::vector<SweepRecord> mean_over_trials(const std::vector<SweepRecord> &records);

    struct DesignComparison
    {
        std::size_t index;
        double position_a_lambda;
        double position_b_lambda;
        double shift_a_mhz;
        double shift_b_mhz;

        double position_diff_lambda() const { return position_a_lambda - position_b_lambda; }
        double shift_diff_mhz() const { return shift_a_mhz - shift_b_mhz; }
    };

    // Per-antenna table; throws DimensionMismatch when the array sizes differ
    std::vector<DesignComparison> compare_designs(const ArrayDesign &a, const ArrayDesign &b, const Carrier &carrier);
}

#endif
