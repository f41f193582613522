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

#include "fdma/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fdma/errors.hpp"
#include "fdma/rng.hpp"

namespace fdma
{
    std::string_view to_string(ConfigurationKind kind)
    {
        switch (kind)
        {
        case ConfigurationKind::cpa: return "CPA";
        case ConfigurationKind::linear_fda: return "LINEAR_FDA";
        case ConfigurationKind::ma_opt1: return "MA_OPT1";
        case ConfigurationKind::ma_opt2: return "MA_OPT2";
        case ConfigurationKind::fda_opt1: return "FDA_OPT1";
        case ConfigurationKind::fda_opt2: return "FDA_OPT2";
        case ConfigurationKind::fdma_opt1: return "FDMA_OPT1";
        case ConfigurationKind::fdma_opt2: return "FDMA_OPT2";
        case ConfigurationKind::upper_bound: return "UPPER_BOUND";
        }
        return "UNKNOWN";
    }

    ConfigurationKind parse_configuration_kind(std::string_view name)
    {
        std::string upper(name);
        for (auto &ch : upper)
            ch = char(std::toupper(static_cast<unsigned char>(ch)));
        for (auto kind : all_configurations)
            if (to_string(kind) == upper)
                return kind;
        throw std::invalid_argument("unknown configuration kind '" + std::string(name) + "'");
    }

    BaselineParams ArrayGeometry::for_antennas(std::size_t M, const Carrier &carrier) const
    {
        const double lambda = carrier.wavelength();
        BaselineParams p;
        p.uniform_spacing = spacing_over_lambda * lambda;
        p.min_spacing = min_spacing_over_lambda * lambda;
        p.aperture_half_width = aperture_per_antenna_over_lambda * double(M) * lambda;
        p.uniform_freq_step = freq_step_hz;
        p.freq_shift_min = freq_shift_min_hz;
        p.freq_shift_max = freq_shift_max_hz;
        p.validate();
        return p;
    }

    Placement ExperimentSetup::bob() const { return make_placement(bob_range_m, bob_angle_rad, link); }

    Scenario ExperimentSetup::canonical_scenario(std::size_t M, std::size_t count) const
    {
        if (count > 3)
            throw std::invalid_argument("canonical_scenario: at most 3 canonical eavesdroppers");
        const Placement b = bob();
        const auto eves = place_canonical_eves(M, b, params(M), link, carrier, e2_formula);
        return make_scenario(b, std::vector<Placement>(eves.begin(), eves.begin() + std::ptrdiff_t(count)), link,
                             carrier.c);
    }

    ArrayDesign baseline_design(ConfigurationKind kind, std::size_t M, const ExperimentSetup &setup)
    {
        const BaselineParams params = setup.params(M);
        switch (kind)
        {
        case ConfigurationKind::cpa:
        case ConfigurationKind::ma_opt1:
        case ConfigurationKind::ma_opt2:
            return make_cpa(M, params, setup.carrier.f0_hz);
        case ConfigurationKind::upper_bound:
            throw std::invalid_argument("baseline_design: UPPER_BOUND has no array design");
        default:
            return make_linear_fda(M, params, setup.carrier.f0_hz);
        }
    }

    ArrayDesign starting_design(ConfigurationKind kind, std::size_t M, const ExperimentSetup &setup)
    {
        const BaselineParams params = setup.params(M);
        ArrayDesign d = baseline_design(kind, M, setup);
        for (auto &f : d.freq_shifts)
            f = std::clamp(f, params.freq_shift_min, params.freq_shift_max);
        return d;
    }

    ConfiguredDesign design_for(ConfigurationKind kind, const Scenario &scenario, std::size_t M,
                                const ExperimentSetup &setup, std::uint64_t seed)
    {
        if (kind == ConfigurationKind::upper_bound)
            throw std::invalid_argument("design_for: UPPER_BOUND has no array design");

        const BaselineParams params = setup.params(M);
        const ArrayDesign baseline = baseline_design(kind, M, setup);
        ConfiguredDesign out{kind, baseline, cost(scenario, baseline), 0.0, 0.0};
        out.start_cost = kind == ConfigurationKind::cpa || kind == ConfigurationKind::linear_fda
                             ? out.baseline_cost
                             : cost(scenario, starting_design(kind, M, setup));

        switch (kind)
        {
        case ConfigurationKind::ma_opt1:
        case ConfigurationKind::fda_opt1:
        case ConfigurationKind::fdma_opt1:
        {
            AnnealerConfig sa = setup.sa;
            sa.seed = seed;
            const SaVariables vars = kind == ConfigurationKind::ma_opt1    ? SaVariables::positions
                                     : kind == ConfigurationKind::fda_opt1 ? SaVariables::freq_shifts
                                                                           : SaVariables::both;
            auto r = alternate_sa(scenario, starting_design(kind, M, setup), params, sa, setup.alternation, vars);
            out.design = std::move(r.design);
            out.cost = r.final_cost;
            return out;
        }
        case ConfigurationKind::ma_opt2:
        case ConfigurationKind::fda_opt2:
        case ConfigurationKind::fdma_opt2:
        {
            // Perturbation around the CPA for MA_OPT2: the reference frequency step is zero
            BaselineParams p = params;
            if (kind == ConfigurationKind::ma_opt2)
                p.uniform_freq_step = 0.0;
            PerturbConfig cfg = setup.perturb;
            cfg.optimize_positions = kind != ConfigurationKind::fda_opt2;
            cfg.optimize_freq_shifts = kind != ConfigurationKind::ma_opt2;
            auto r = alternate_perturb(scenario, baseline, p, cfg);
            out.design = std::move(r.design);
            out.cost = r.final_cost;
            return out;
        }
        default:
            out.cost = out.baseline_cost;
            out.start_cost = out.baseline_cost;
            return out;
        }
    }

    double secrecy_rate_for(ConfigurationKind kind, const Scenario &scenario, std::size_t M,
                            const ExperimentSetup &setup, std::uint64_t seed)
    {
        if (kind == ConfigurationKind::upper_bound)
            return secrecy_upper_bound(scenario, M);
        const auto cd = design_for(kind, scenario, M, setup, seed);
        return worst_case_secrecy_rate(scenario, cd.design);
    }

    // ---------------------------------------------------------------------------------------
    // Rasters

    namespace
    {
        constexpr double power_floor_db = -300.0;

        void check_raster_grid(const Scenario &scenario, const ArrayDesign &design, const GridSpec &grid)
        {
            grid.validate();
            design.validate();
            scenario.bob.validate();
            if (!(grid.y_min > 0.0))
                throw std::invalid_argument("raster_beampattern: grid must lie in the half plane y > 0");
        }

        RasterRecord raster_cell(const Scenario &scenario, const ArrayDesign &design, const GridSpec &grid,
                                 std::size_t cell)
        {
            const std::size_t nx = grid.nx();
            const double x = grid.x_min + double(cell % nx) * grid.resolution;
            const double y = grid.y_min + double(cell / nx) * grid.resolution;
            Placement probe;
            probe.range_m = std::hypot(x, y);
            probe.angle_rad = std::atan2(y, x);
            const double p = normalized_beampattern_power(design, probe, scenario.bob, scenario.c);
            return {x, y, p > 0.0 ? std::max(linear_to_db(p), power_floor_db) : power_floor_db};
        }
    }

    std::vector<RasterRecord> raster_beampattern_serial(const Scenario &scenario, const ArrayDesign &design,
                                                        const GridSpec &grid)
    {
        check_raster_grid(scenario, design, grid);
        std::vector<RasterRecord> out(grid.cells());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = raster_cell(scenario, design, grid, i);
        return out;
    }

    std::vector<RasterRecord> raster_beampattern(const Scenario &scenario, const ArrayDesign &design,
                                                 const GridSpec &grid, int threads)
    {
        if (threads == 1)
            return raster_beampattern_serial(scenario, design, grid);
        check_raster_grid(scenario, design, grid);
        std::vector<RasterRecord> out(grid.cells());
        const std::ptrdiff_t n = std::ptrdiff_t(out.size());
#ifdef _OPENMP
        const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team)
#endif
        for (std::ptrdiff_t i = 0; i < n; ++i)
            out[std::size_t(i)] = raster_cell(scenario, design, grid, std::size_t(i));
        return out;
    }

    // ---------------------------------------------------------------------------------------
    // Sweeps

    namespace
    {
        // Runs fn(i) for i in [0, n) and rethrows the first failure (by index) after the loop
        template <typename Fn>
        void for_each_item(std::size_t n, ExecutionConfig exec, Fn &&fn)
        {
            std::vector<std::exception_ptr> errors(n);
            if (exec.threads == 1)
            {
                for (std::size_t i = 0; i < n; ++i)
                    fn(i);
                return;
            }
#ifdef _OPENMP
            const int team = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
#endif
            for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
            {
                try
                {
                    fn(std::size_t(i));
                }
                catch (...)
                {
                    errors[std::size_t(i)] = std::current_exception();
                }
            }
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        std::string item_id(std::string_view prefix, std::size_t M, std::size_t K, ConfigurationKind kind)
        {
            return std::string(prefix) + "/M=" + std::to_string(M) + "/K=" + std::to_string(K) + "/" +
                   std::string(to_string(kind));
        }
    }

    std::vector<SweepRecord> sweep_vs_M(const ExperimentSetup &setup, const std::vector<std::size_t> &M_values,
                                        const std::vector<ConfigurationKind> &configurations,
                                        std::uint64_t master_seed, ExecutionConfig exec)
    {
        for (auto M : M_values)
            if (M < 4)
                throw std::invalid_argument("sweep_vs_M: every M must be >= 4");

        std::vector<Scenario> scenarios;
        for (auto M : M_values)
            scenarios.push_back(setup.canonical_scenario(M, 3));

        const std::size_t C = configurations.size();
        std::vector<SweepRecord> out(M_values.size() * C);
        for_each_item(out.size(), exec, [&](std::size_t i)
        {
            const std::size_t M = M_values[i / C];
            const auto kind = configurations[i % C];
            const auto &sc = scenarios[i / C];
            const std::uint64_t seed = derive_seed(master_seed, item_id("sweep-m", M, 3, kind));
            out[i] = {double(M), kind, secrecy_rate_for(kind, sc, M, setup, seed), seed, 0, M,
                      secrecy_upper_bound(sc, M)};
        });
        return out;
    }

    std::uint64_t sweep_k_trial_seed(std::uint64_t master_seed, std::size_t M, std::size_t trial)
    {
        return stream_seed(derive_seed(master_seed, "sweep-k/M=" + std::to_string(M)), trial);
    }

    std::vector<SweepRecord> sweep_vs_K(const ExperimentSetup &setup, const std::vector<std::size_t> &K_values,
                                        const std::vector<std::size_t> &M_values,
                                        const std::vector<ConfigurationKind> &configurations,
                                        std::uint64_t master_seed, std::size_t trials, ExecutionConfig exec)
    {
        if (trials == 0)
            throw std::invalid_argument("sweep_vs_K: trials must be >= 1");
        if (K_values.empty() || M_values.empty())
            return {};
        const std::size_t K_max = *std::max_element(K_values.begin(), K_values.end());
        for (auto M : M_values)
            if (K_max >= M)
                throw std::invalid_argument("sweep_vs_K: every K must be smaller than every M");

        // Eavesdroppers are drawn before dispatch: one K_max-draw per (M, trial), sliced per K
        const Placement bob = setup.bob();
        std::vector<std::vector<Placement>> draws(M_values.size() * trials);
        for (std::size_t im = 0; im < M_values.size(); ++im)
            for (std::size_t t = 0; t < trials; ++t)
                draws[im * trials + t] = sample_eves_outside_target(
                    K_max, bob, M_values[im], setup.params(M_values[im]), setup.domain,
                    sweep_k_trial_seed(master_seed, M_values[im], t), setup.link, setup.carrier,
                    setup.target_convention);

        const std::size_t nK = K_values.size(), nC = configurations.size();
        std::vector<SweepRecord> out(M_values.size() * nK * nC * trials);
        for_each_item(out.size(), exec, [&](std::size_t i)
        {
            const std::size_t t = i % trials;
            const std::size_t ic = (i / trials) % nC;
            const std::size_t ik = (i / (trials * nC)) % nK;
            const std::size_t im = i / (trials * nC * nK);
            const std::size_t M = M_values[im], K = K_values[ik];
            const auto kind = configurations[ic];
            const auto &all = draws[im * trials + t];

            const Scenario sc = make_scenario(bob, std::vector<Placement>(all.begin(), all.begin() + std::ptrdiff_t(K)),
                                              setup.link, setup.carrier.c);
            const std::uint64_t trial_seed = sweep_k_trial_seed(master_seed, M, t);
            const std::uint64_t seed = derive_seed(trial_seed, item_id("sweep-k", M, K, kind));
            out[i] = {double(K), kind, secrecy_rate_for(kind, sc, M, setup, seed), trial_seed, t, M,
                      secrecy_upper_bound(sc, M)};
        });
        return out;
    }

    std::vector<SweepRecord> mean_over_trials(const std::vector<SweepRecord> &records)
    {
        // Key order: M, sweep value, first appearance of the configuration
        std::vector<ConfigurationKind> kind_order;
        for (const auto &r : records)
            if (std::find(kind_order.begin(), kind_order.end(), r.configuration) == kind_order.end())
                kind_order.push_back(r.configuration);
        auto kind_rank = [&](ConfigurationKind k)
        { return std::size_t(std::find(kind_order.begin(), kind_order.end(), k) - kind_order.begin()); };

        struct Acc
        {
            double sum = 0.0;
            double upper = 0.0;
            std::size_t n = 0;
            ConfigurationKind kind{};
        };
        std::map<std::tuple<std::size_t, double, std::size_t>, Acc> acc;
        for (const auto &r : records)
        {
            auto &a = acc[{r.num_antennas, r.sweep_value, kind_rank(r.configuration)}];
            a.sum += r.secrecy_rate;
            a.upper = r.upper_bound;
            a.kind = r.configuration;
            ++a.n;
        }
        std::vector<SweepRecord> out;
        out.reserve(acc.size());
        for (const auto &[key, a] : acc)
            out.push_back({std::get<1>(key), a.kind, a.sum / double(a.n), 0, a.n, std::get<0>(key), a.upper});
        return out;
    }

    std::vector<DesignComparison> compare_designs(const ArrayDesign &a, const ArrayDesign &b, const Carrier &carrier)
    {
        if (a.size() != b.size() || a.freq_shifts.size() != b.freq_shifts.size())
            throw DimensionMismatch("compare_designs: designs have different array sizes");
        const double lambda = carrier.wavelength();
        std::vector<DesignComparison> out;
        out.reserve(a.size());
        for (std::size_t m = 0; m < a.size(); ++m)
            out.push_back({m + 1, a.positions[m] / lambda, b.positions[m] / lambda, a.freq_shifts[m] * 1e-6,
                           b.freq_shifts[m] * 1e-6});
        return out;
    }
}
