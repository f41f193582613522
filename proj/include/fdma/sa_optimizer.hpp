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

// Simulated annealing under the general constraints
//
//      -D <= x_1 < ... < x_M <= D,   x_m - x_{m-1} >= Delta D_min,   dF_min <= dF_m <= dF_max
//
// Positions are searched through the spacing vector d (d_m = x_{m+1} - x_m), which turns the
// ordering constraint into per-element bounds Delta D_min <= d_m <= 2D - sum_{i != m} d_i.
// Each iteration redraws one coordinate uniformly over its admissible interval and applies the
// Metropolis rule at temperature T_t = alpha^t T_0. The best visited state is returned.

#ifndef FDMA_SA_OPTIMIZER_HPP
#define FDMA_SA_OPTIMIZER_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fdma/array_model.hpp"
#include "fdma/scenario.hpp"

namespace fdma
{
    struct AnnealerConfig
    {
        double initial_temperature = 0.0; // <= 0 selects max(J(start), 1e-12)
        double cooling_factor = 0.95;     // alpha in (0, 1)
        std::size_t max_iterations = 5000;
        std::uint64_t seed = 0;

        void validate() const;
    };

    struct AlternationConfig
    {
        std::size_t max_rounds = 10;
        double relative_tolerance = 1e-3;

        void validate() const;
    };

    // One SA iteration
    struct AnnealStep
    {
        std::size_t t;
        double temperature;
        double cost; // cost of the current (accepted) state after iteration t
        bool accepted;
    };

    struct AnnealResult
    {
        ArrayDesign design; // best visited
        double initial_cost = 0.0;
        double best_cost = 0.0;
        std::vector<AnnealStep> trace;
    };

    // J = sum_k (P / sigma_k^2) (L_k / M) |eta(psi_E_k)|^2, the colluding eavesdropper SNR
    double cost(const Scenario &scenario, const ArrayDesign &design);

    std::vector<double> spacings_of(std::span<const double> positions);

    // Span centered at the origin: x_1 = -sum(d)/2, x_{m+1} = x_m + d_m.
    // Throws InfeasibleSpacing if sum(d) > 2D.
    std::vector<double> reconstruct_positions(std::span<const double> spacings, double aperture_half_width);

    // 2D - sum_{i != m} d_i
    double adaptive_max_spacing(std::span<const double> spacings, std::size_t m, double aperture_half_width);

    // Metropolis rule: downhill always, uphill iff exp(-delta / T) >= u
    bool metropolis_accept(double delta_cost, double temperature, double u);

    // Sees every candidate right before its cost is evaluated (iteration t, candidate design)
    using CandidateObserver = std::function<void(std::size_t, const ArrayDesign &)>;

    AnnealResult anneal_positions(const Scenario &scenario, const ArrayDesign &design, const BaselineParams &params,
                                  const AnnealerConfig &cfg, const CandidateObserver &observer = {});

    AnnealResult anneal_freq_shifts(const Scenario &scenario, const ArrayDesign &design, const BaselineParams &params,
                                    const AnnealerConfig &cfg, const CandidateObserver &observer = {});

    enum class SaVariables
    {
        positions,
        freq_shifts,
        both
    };

    // Trace row of the alternating loop
    struct SaTraceRecord
    {
        std::size_t round;
        std::string phase; // "positions" or "freq_shifts"
        AnnealStep step;
    };

    struct AlternationResult
    {
        ArrayDesign design;
        double initial_cost = 0.0;
        double final_cost = 0.0;
        std::size_t rounds = 0;
        std::vector<SaTraceRecord> trace;
    };

    // Alternates position and frequency annealing until a full round improves J by less than
    // relative_tolerance or max_rounds is hit. Round r, phase p uses stream 2r + p of cfg.seed and
    // starts from T_0 = max(J(current), 1e-12) unless an explicit temperature is configured.
    AlternationResult alternate_sa(const Scenario &scenario, const ArrayDesign &init, const BaselineParams &params,
                                   const AnnealerConfig &sa_cfg, const AlternationConfig &alt_cfg,
                                   SaVariables variables = SaVariables::both, bool keep_trace = false);

    // T_0 alpha^t
    inline double temperature_at(double t0, double alpha, std::size_t t)
    {
        return t0 * std::pow(alpha, double(t));
    }
}

#endif
