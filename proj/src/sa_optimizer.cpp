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

#include "fdma/sa_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fdma/errors.hpp"
#include "fdma/rng.hpp"

namespace fdma
{
    namespace
    {
        // Relative slack absorbed when re-summing spacings that were built to hit 2D exactly
        constexpr double rounding_slack = 1e-12;

        double start_temperature(const AnnealerConfig &cfg, double start_cost)
        {
            return cfg.initial_temperature > 0.0 ? cfg.initial_temperature : std::max(start_cost, 1e-12);
        }

        void check_spacings(std::span<const double> d, const BaselineParams &params)
        {
            const double floor = params.min_spacing * (1.0 - rounding_slack);
            for (double v : d)
                if (v < floor)
                    throw InfeasibleInitialization("anneal_positions: initial spacing below Delta D_min");
            const double total = std::accumulate(d.begin(), d.end(), 0.0);
            if (total > 2.0 * params.aperture_half_width * (1.0 + rounding_slack))
                throw InfeasibleInitialization("anneal_positions: initial array exceeds the aperture [-D, D]");
        }
    }

    void AnnealerConfig::validate() const
    {
        if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
            throw std::invalid_argument("AnnealerConfig: cooling factor must lie in (0, 1)");
        if (max_iterations == 0)
            throw std::invalid_argument("AnnealerConfig: max_iterations must be positive");
        if (!std::isfinite(initial_temperature))
            throw std::invalid_argument("AnnealerConfig: initial temperature must be finite");
    }

    void AlternationConfig::validate() const
    {
        if (!(relative_tolerance > 0.0))
            throw std::invalid_argument("AlternationConfig: relative tolerance must be positive");
    }

    double cost(const Scenario &scenario, const ArrayDesign &design)
    {
        double j = 0.0;
        for (std::size_t k = 0; k < scenario.eves.size(); ++k)
            j += snr_eve(scenario, design, k);
        return j;
    }

    std::vector<double> spacings_of(std::span<const double> positions)
    {
        std::vector<double> d;
        if (positions.size() < 2)
            return d;
        d.reserve(positions.size() - 1);
        for (std::size_t m = 0; m + 1 < positions.size(); ++m)
            d.push_back(positions[m + 1] - positions[m]);
        return d;
    }

    std::vector<double> reconstruct_positions(std::span<const double> spacings, double aperture_half_width)
    {
        const double total = std::accumulate(spacings.begin(), spacings.end(), 0.0);
        if (total > 2.0 * aperture_half_width * (1.0 + rounding_slack))
            throw InfeasibleSpacing("reconstruct_positions: total span exceeds 2D");
        std::vector<double> x(spacings.size() + 1);
        x[0] = -0.5 * total;
        for (std::size_t m = 0; m < spacings.size(); ++m)
            x[m + 1] = x[m] + spacings[m];
        return x;
    }

    double adaptive_max_spacing(std::span<const double> spacings, std::size_t m, double aperture_half_width)
    {
        if (m >= spacings.size())
            throw std::out_of_range("adaptive_max_spacing: spacing index out of range");
        double others = 0.0;
        for (std::size_t i = 0; i < spacings.size(); ++i)
            if (i != m)
                others += spacings[i];
        return 2.0 * aperture_half_width - others;
    }

    bool metropolis_accept(double delta_cost, double temperature, double u)
    {
        if (delta_cost < 0.0)
            return true;
        return std::exp(-delta_cost / temperature) >= u;
    }

    AnnealResult anneal_positions(const Scenario &scenario, const ArrayDesign &design, const BaselineParams &params,
                                  const AnnealerConfig &cfg, const CandidateObserver &observer)
    {
        cfg.validate();
        params.validate();
        design.validate();
        scenario.validate(design.size());

        const std::size_t M = design.size();
        const double D = params.aperture_half_width;
        std::vector<double> d = spacings_of(design.positions);
        check_spacings(d, params);

        ArrayDesign current = design;
        current.positions = reconstruct_positions(d, D);
        double current_cost = cost(scenario, current);

        AnnealResult out;
        out.design = current;
        out.initial_cost = current_cost;
        out.best_cost = current_cost;
        if (M < 2)
            return out;

        const double t0 = start_temperature(cfg, current_cost);
        Rng rng(cfg.seed);
        out.trace.reserve(cfg.max_iterations);

        ArrayDesign candidate = current;
        std::vector<double> d_candidate = d;
        for (std::size_t t = 1; t <= cfg.max_iterations; ++t)
        {
            const double temperature = temperature_at(t0, cfg.cooling_factor, t);

            // Neighbor: redraw one spacing inside its adaptive bounds
            const std::size_t m = std::size_t(rng.index(M - 1));
            const double d_max = adaptive_max_spacing(d, m, D);
            d_candidate = d;
            d_candidate[m] = rng.uniform(params.min_spacing, d_max);
            candidate.positions = reconstruct_positions(d_candidate, D);
            if (observer)
                observer(t, candidate);

            const double candidate_cost = cost(scenario, candidate);
            const double delta = candidate_cost - current_cost;
            const bool accepted = delta < 0.0 || metropolis_accept(delta, temperature, rng.uniform());
            if (accepted)
            {
                d.swap(d_candidate);
                current.positions = candidate.positions;
                current_cost = candidate_cost;
                if (current_cost < out.best_cost)
                {
                    out.best_cost = current_cost;
                    out.design = current;
                }
            }
            out.trace.push_back({t, temperature, current_cost, accepted});
        }
        return out;
    }

    AnnealResult anneal_freq_shifts(const Scenario &scenario, const ArrayDesign &design, const BaselineParams &params,
                                    const AnnealerConfig &cfg, const CandidateObserver &observer)
    {
        cfg.validate();
        params.validate();
        design.validate();
        scenario.validate(design.size());
        if (!(std::max(std::abs(params.freq_shift_min), std::abs(params.freq_shift_max)) < 1e-3 * design.f0_hz))
            throw std::invalid_argument("anneal_freq_shifts: shift bounds must stay below 1e-3 f0");
        for (double f : design.freq_shifts)
            if (f < params.freq_shift_min || f > params.freq_shift_max)
                throw InfeasibleInitialization("anneal_freq_shifts: initial shift outside [dF_min, dF_max]");

        const std::size_t M = design.size();
        ArrayDesign current = design;
        double current_cost = cost(scenario, current);

        AnnealResult out;
        out.design = current;
        out.initial_cost = current_cost;
        out.best_cost = current_cost;

        const double t0 = start_temperature(cfg, current_cost);
        Rng rng(cfg.seed);
        out.trace.reserve(cfg.max_iterations);

        ArrayDesign candidate = current;
        for (std::size_t t = 1; t <= cfg.max_iterations; ++t)
        {
            const double temperature = temperature_at(t0, cfg.cooling_factor, t);

            const std::size_t m = std::size_t(rng.index(M));
            candidate.freq_shifts = current.freq_shifts;
            candidate.freq_shifts[m] = rng.uniform(params.freq_shift_min, params.freq_shift_max);
            if (observer)
                observer(t, candidate);

            const double candidate_cost = cost(scenario, candidate);
            const double delta = candidate_cost - current_cost;
            const bool accepted = delta < 0.0 || metropolis_accept(delta, temperature, rng.uniform());
            if (accepted)
            {
                current.freq_shifts = candidate.freq_shifts;
                current_cost = candidate_cost;
                if (current_cost < out.best_cost)
                {
                    out.best_cost = current_cost;
                    out.design = current;
                }
            }
            out.trace.push_back({t, temperature, current_cost, accepted});
        }
        return out;
    }

    AlternationResult alternate_sa(const Scenario &scenario, const ArrayDesign &init, const BaselineParams &params,
                                   const AnnealerConfig &sa_cfg, const AlternationConfig &alt_cfg,
                                   SaVariables variables, bool keep_trace)
    {
        sa_cfg.validate();
        alt_cfg.validate();
        init.validate();
        scenario.validate(init.size());

        AlternationResult out;
        out.design = init;
        out.initial_cost = cost(scenario, init);
        out.final_cost = out.initial_cost;

        ArrayDesign current = init;
        double current_cost = out.initial_cost;
        const bool do_positions = variables != SaVariables::freq_shifts;
        const bool do_shifts = variables != SaVariables::positions;

        for (std::size_t round = 0; round < alt_cfg.max_rounds; ++round)
        {
            const double round_start = current_cost;

            auto run_phase = [&](int phase)
            {
                AnnealerConfig cfg = sa_cfg;
                cfg.seed = stream_seed(sa_cfg.seed, 2 * round + std::size_t(phase));
                AnnealResult r = phase == 0 ? anneal_positions(scenario, current, params, cfg)
                                            : anneal_freq_shifts(scenario, current, params, cfg);
                current = std::move(r.design);
                current_cost = r.best_cost;
                if (keep_trace)
                    for (const auto &s : r.trace)
                        out.trace.push_back({round, phase == 0 ? "positions" : "freq_shifts", s});
            };
            if (do_positions)
                run_phase(0);
            if (do_shifts)
                run_phase(1);
            out.rounds = round + 1;

            if (current_cost < out.final_cost)
            {
                out.final_cost = current_cost;
                out.design = current;
            }
            const double improvement = round_start - current_cost;
            if (improvement <= alt_cfg.relative_tolerance * std::max(round_start, 1e-300))
                break;
        }
        return out;
    }
}
