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

#include "fdma/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "fdma/errors.hpp"
#include "fdma/rng.hpp"

namespace fdma
{
    void LinkBudgetConfig::validate() const
    {
        if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_power_dbm))
            throw std::invalid_argument("LinkBudgetConfig: powers must be finite");
        if (!(ref_path_loss_db >= 0.0) || !std::isfinite(ref_path_loss_db))
            throw std::invalid_argument("LinkBudgetConfig: reference path loss must be >= 0 dB");
        if (!std::isfinite(path_loss_exponent_coeff))
            throw std::invalid_argument("LinkBudgetConfig: path loss coefficient must be finite");
    }

    void GridSpec::validate() const
    {
        if (!(x_min < x_max) || !(y_min < y_max))
            throw std::invalid_argument("GridSpec: bounds must satisfy min < max");
        if (!(resolution > 0.0))
            throw std::invalid_argument("GridSpec: resolution must be positive");
    }

    std::size_t GridSpec::nx() const { return std::size_t(std::floor((x_max - x_min) / resolution + 1e-9)) + 1; }
    std::size_t GridSpec::ny() const { return std::size_t(std::floor((y_max - y_min) / resolution + 1e-9)) + 1; }

    void BaselineParams::validate() const
    {
        if (!(min_spacing > 0.0))
            throw std::invalid_argument("BaselineParams: min_spacing must be positive");
        if (!(uniform_spacing >= min_spacing))
            throw std::invalid_argument("BaselineParams: uniform_spacing must be >= min_spacing");
        if (!(freq_shift_min <= freq_shift_max))
            throw std::invalid_argument("BaselineParams: freq_shift_min must be <= freq_shift_max");
        if (!(aperture_half_width > 0.0))
            throw std::invalid_argument("BaselineParams: aperture half width must be positive");
    }

    BaselineParams BaselineParams::standard(std::size_t M, const Carrier &carrier)
    {
        const double lambda = carrier.wavelength();
        BaselineParams p;
        p.min_spacing = 0.5 * lambda;
        p.uniform_spacing = 1.5 * p.min_spacing;
        p.uniform_freq_step = -1e6;
        p.aperture_half_width = double(M) * lambda;
        p.freq_shift_min = -10e6;
        p.freq_shift_max = 10e6;
        return p;
    }

    double path_loss_linear(double range_m, const LinkBudgetConfig &cfg)
    {
        if (!(range_m > 0.0))
            throw std::invalid_argument("path_loss_linear: range must be positive");
        return std::pow(10.0, -(cfg.ref_path_loss_db + cfg.path_loss_exponent_coeff * std::log10(range_m)) / 10.0);
    }

    Placement make_placement(double range_m, double angle_rad, const LinkBudgetConfig &cfg)
    {
        Placement p;
        p.range_m = range_m;
        p.angle_rad = angle_rad;
        p.path_loss_linear = path_loss_linear(range_m, cfg);
        p.noise_power_linear = cfg.noise_power_linear();
        p.validate();
        return p;
    }

    Placement placement_from_cartesian(double x_m, double y_m, const LinkBudgetConfig &cfg)
    {
        return make_placement(std::hypot(x_m, y_m), std::atan2(y_m, x_m), cfg);
    }

    Scenario make_scenario(const Placement &bob, std::vector<Placement> eves, const LinkBudgetConfig &cfg, double c)
    {
        Scenario s;
        s.bob = bob;
        s.eves = std::move(eves);
        s.tx_power_linear = cfg.tx_power_linear();
        s.c = c;
        return s;
    }

    namespace
    {
        ArrayDesign uniform_design(std::size_t M, double spacing, double freq_step, double f0_hz)
        {
            if (M == 0)
                throw std::invalid_argument("baseline design: M must be >= 1");
            ArrayDesign d;
            d.f0_hz = f0_hz;
            d.positions.resize(M);
            d.freq_shifts.resize(M);
            for (std::size_t m = 0; m < M; ++m)
            {
                d.positions[m] = centered_index(m, M) * spacing;
                d.freq_shifts[m] = centered_index(m, M) * freq_step;
            }
            return d;
        }
    }

    ArrayDesign make_cpa(std::size_t M, const BaselineParams &params, double f0_hz)
    {
        return uniform_design(M, params.uniform_spacing, 0.0, f0_hz);
    }

    ArrayDesign make_linear_fda(std::size_t M, const BaselineParams &params, double f0_hz)
    {
        return uniform_design(M, params.uniform_spacing, params.uniform_freq_step, f0_hz);
    }

    std::array<Placement, 3> place_canonical_eves(std::size_t M, const Placement &bob, const BaselineParams &params,
                                                  const LinkBudgetConfig &cfg, const Carrier &carrier,
                                                  SidelobeAngleFormula formula)
    {
        if (M < 2)
            throw std::invalid_argument("place_canonical_eves: M must be >= 2");
        if (params.uniform_freq_step == 0.0 || params.uniform_spacing == 0.0)
            throw std::invalid_argument("place_canonical_eves: Delta F and Delta D must be nonzero");
        bob.validate();

        const double Md = double(M);
        const double range_e1 = bob.range_m + 3.0 * carrier.c / (2.0 * Md * std::abs(params.uniform_freq_step));
        const double offset = 3.0 * carrier.wavelength() / (2.0 * Md * params.uniform_spacing);

        double angle_e2 = 0.0;
        if (formula == SidelobeAngleFormula::literal)
            angle_e2 = std::acos(std::cos(bob.angle_rad - offset));
        else
        {
            const double arg = std::cos(bob.angle_rad) + offset;
            if (arg >= 1.0)
                throw std::invalid_argument("place_canonical_eves: sidelobe angle outside visible region");
            angle_e2 = std::acos(arg);
        }

        return {make_placement(range_e1, bob.angle_rad, cfg),
                make_placement(bob.range_m, angle_e2, cfg),
                make_placement(range_e1, angle_e2, cfg)};
    }

    TargetOffsets target_region_offsets(const Placement &place, const Placement &bob, std::size_t M,
                                        const BaselineParams &params, const Carrier &carrier,
                                        TargetAngleConvention convention)
    {
        const double Md = double(M);
        const double range_half_width = carrier.c / (Md * std::abs(params.uniform_freq_step));
        const double null_offset = carrier.wavelength() / (Md * params.uniform_spacing);

        TargetOffsets out{};
        out.range_ratio = std::abs(place.range_m - bob.range_m) / range_half_width;
        if (convention == TargetAngleConvention::cos_space)
            out.angle_ratio = std::abs(std::cos(place.angle_rad) - std::cos(bob.angle_rad)) / null_offset;
        else
        {
            const double half_width = std::abs(bob.angle_rad - std::acos(std::cos(bob.angle_rad - null_offset)));
            out.angle_ratio = std::abs(place.angle_rad - bob.angle_rad) / half_width;
        }
        return out;
    }

    bool in_target_region(const Placement &place, const Placement &bob, std::size_t M, const BaselineParams &params,
                          const Carrier &carrier, TargetAngleConvention convention)
    {
        const auto off = target_region_offsets(place, bob, M, params, carrier, convention);
        return off.range_ratio <= 1.0 && off.angle_ratio <= 1.0;
    }

    void SampleDomain::validate() const
    {
        if (!(range_min > 0.0 && range_min < range_max))
            throw std::invalid_argument("SampleDomain: need 0 < range_min < range_max");
        if (!(angle_min_rad > 0.0 && angle_min_rad < angle_max_rad && angle_max_rad < pi))
            throw std::invalid_argument("SampleDomain: need 0 < angle_min < angle_max < pi");
    }

    std::vector<Placement> sample_eves_outside_target(std::size_t K, const Placement &bob, std::size_t M,
                                                      const BaselineParams &params, const SampleDomain &domain,
                                                      std::uint64_t seed, const LinkBudgetConfig &cfg,
                                                      const Carrier &carrier, TargetAngleConvention convention)
    {
        domain.validate();
        constexpr int max_rejections = 100000;

        Rng rng(seed);
        std::vector<Placement> eves;
        eves.reserve(K);
        while (eves.size() < K)
        {
            int rejected = 0;
            for (;;)
            {
                const double r = rng.uniform(domain.range_min, domain.range_max);
                const double theta = rng.uniform(domain.angle_min_rad, domain.angle_max_rad);
                Placement p = make_placement(r, theta, cfg);
                if (!in_target_region(p, bob, M, params, carrier, convention))
                {
                    eves.push_back(p);
                    break;
                }
                if (++rejected >= max_rejections)
                    throw SamplingExhausted("sample_eves_outside_target: no admissible point after 1e5 draws");
            }
        }
        return eves;
    }
}
