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

#ifndef FDMA_SCENARIO_HPP
#define FDMA_SCENARIO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fdma/array_model.hpp"
#include "fdma/units.hpp"

namespace fdma
{
    // Link budget in logarithmic units, converted once when placements are built
    struct LinkBudgetConfig
    {
        double tx_power_dbm = 5.0;
        double noise_power_dbm = -80.0;
        double ref_path_loss_db = 30.0;         // L0
        double path_loss_exponent_coeff = 25.0; // L(R) = L0 + coeff * log10(R) [dB]

        void validate() const;
        double tx_power_linear() const { return db_to_linear(tx_power_dbm); }
        double noise_power_linear() const { return db_to_linear(noise_power_dbm); }
    };

    // Cartesian raster domain, samples at x_min + i * resolution (i = 0 .. nx-1), same for y
    struct GridSpec
    {
        double x_min = -150.0;
        double x_max = 150.0;
        double y_min = 1.0;
        double y_max = 300.0;
        double resolution = 1.0;

        void validate() const;
        std::size_t nx() const;
        std::size_t ny() const;
        std::size_t cells() const { return nx() * ny(); }
    };

    // Geometry and frequency plan of the uniform baselines and the optimizer constraints
    struct BaselineParams
    {
        double uniform_spacing = 0.0;     // Delta D [m]
        double uniform_freq_step = 0.0;   // Delta F [Hz]
        double aperture_half_width = 0.0; // D [m], positions are confined to [-D, D]
        double min_spacing = 0.0;         // Delta D_min [m]
        double freq_shift_min = -10e6;    // [Hz]
        double freq_shift_max = 10e6;     // [Hz]

        void validate() const;

        // Defaults for M antennas: Delta D_min = lambda/2, Delta D = 1.5 Delta D_min,
        // Delta F = -1 MHz, D = M lambda, shifts in [-10, 10] MHz
        static BaselineParams standard(std::size_t M, const Carrier &carrier);
    };

    // 10^(-(L0 + coeff log10 R) / 10)
    double path_loss_linear(double range_m, const LinkBudgetConfig &cfg);

    Placement make_placement(double range_m, double angle_rad, const LinkBudgetConfig &cfg);
    Placement placement_from_cartesian(double x_m, double y_m, const LinkBudgetConfig &cfg);
    Scenario make_scenario(const Placement &bob, std::vector<Placement> eves, const LinkBudgetConfig &cfg, double c);

    // (m - (M+1)/2) for the zero-based antenna index
    inline double centered_index(std::size_t m, std::size_t M) { return double(m + 1) - 0.5 * double(M + 1); }

    // Uniform positions (m - (M+1)/2) Delta D, all shifts zero
    ArrayDesign make_cpa(std::size_t M, const BaselineParams &params, double f0_hz);

    // Same positions as the CPA, shifts (m - (M+1)/2) Delta F
    ArrayDesign make_linear_fda(std::size_t M, const BaselineParams &params, double f0_hz);

    // How the second canonical eavesdropper's angle is formed from theta_B and 3 lambda / (2 M Delta D)
    enum class SidelobeAngleFormula
    {
        literal,  // arccos(cos(theta_B - offset))
        cos_space // arccos(cos(theta_B) + offset)
    };

    // E1: Bob's angle at R_B + 3c / (2 M |Delta F|); E2: Bob's range at the CPA sidelobe angle;
    // E3: E2's angle at E1's range
    std::array<Placement, 3> place_canonical_eves(std::size_t M, const Placement &bob, const BaselineParams &params,
                                                  const LinkBudgetConfig &cfg, const Carrier &carrier,
                                                  SidelobeAngleFormula formula = SidelobeAngleFormula::literal);

    // Angular half-width of the target region
    enum class TargetAngleConvention
    {
        cos_space,  // |cos theta - cos theta_B| <= lambda / (M Delta D)
        angle_space // |theta - theta_B| <= |theta_B - arccos(cos(theta_B - lambda / (M Delta D)))|
    };

    // Offsets of a placement from Bob normalized by the first-null half-widths; the point is in
    // the target region when both are <= 1. Exposed so any inequality convention can be applied.
    struct TargetOffsets
    {
        double range_ratio;
        double angle_ratio;
    };

    TargetOffsets target_region_offsets(const Placement &place, const Placement &bob, std::size_t M,
                                        const BaselineParams &params, const Carrier &carrier,
                                        TargetAngleConvention convention = TargetAngleConvention::cos_space);

    // Closed neighborhood of Bob bounded by the first nulls of the CPA (angle) and the linear FDA (range)
    bool in_target_region(const Placement &place, const Placement &bob, std::size_t M, const BaselineParams &params,
                          const Carrier &carrier,
                          TargetAngleConvention convention = TargetAngleConvention::cos_space);

    // Polar sampling box for random eavesdroppers
    struct SampleDomain
    {
        double range_min = 20.0;
        double range_max = 200.0;
        double angle_min_rad = deg_to_rad(10.0);
        double angle_max_rad = deg_to_rad(170.0);

        void validate() const;
    };

    // K placements uniform over the domain and outside the target region. Placements are drawn
    // one after another from a single stream, so the first k of a K-draw equal a k-draw with the
    // same seed. Throws SamplingExhausted after 1e5 consecutive rejections.
    std::vector<Placement> sample_eves_outside_target(std::size_t K, const Placement &bob, std::size_t M,
                                                      const BaselineParams &params, const SampleDomain &domain,
                                                      std::uint64_t seed, const LinkBudgetConfig &cfg,
                                                      const Carrier &carrier,
                                                      TargetAngleConvention convention = TargetAngleConvention::cos_space);
}

#endif
