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

#include "fdma/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fdma
{
    void ArrayDesign::validate() const
    {
        const std::size_t M = positions.size();
        if (M == 0)
            throw std::invalid_argument("ArrayDesign: at least one antenna is required");
        if (freq_shifts.size() != M)
            throw std::invalid_argument("ArrayDesign: positions and freq_shifts differ in length");
        if (!(f0_hz > 0.0) || !std::isfinite(f0_hz))
            throw std::invalid_argument("ArrayDesign: f0 must be positive");
        for (std::size_t m = 0; m < M; ++m)
        {
            if (!std::isfinite(positions[m]) || !std::isfinite(freq_shifts[m]))
                throw std::invalid_argument("ArrayDesign: non-finite entry at antenna " + std::to_string(m));
            if (m > 0 && !(positions[m] > positions[m - 1]))
                throw std::invalid_argument("ArrayDesign: positions must be strictly increasing");
            if (!(std::abs(freq_shifts[m]) < 1e-3 * f0_hz))
                throw std::invalid_argument("ArrayDesign: |freq_shift| must stay below 1e-3 f0");
        }
    }

    void Placement::validate() const
    {
        if (!(range_m > 0.0) || !std::isfinite(range_m))
            throw std::invalid_argument("Placement: range must be positive");
        if (!(angle_rad > 0.0 && angle_rad < pi))
            throw std::invalid_argument("Placement: angle must lie in (0, pi)");
        if (!(path_loss_linear > 0.0 && path_loss_linear <= 1.0))
            throw std::invalid_argument("Placement: path loss must lie in (0, 1]");
        if (!(noise_power_linear > 0.0) || !std::isfinite(noise_power_linear))
            throw std::invalid_argument("Placement: noise power must be positive");
    }

    void Scenario::validate(std::size_t num_antennas) const
    {
        if (!(tx_power_linear > 0.0))
            throw std::invalid_argument("Scenario: transmit power must be positive");
        if (!(c > 0.0))
            throw std::invalid_argument("Scenario: propagation speed must be positive");
        if (eves.size() >= num_antennas)
            throw std::invalid_argument("Scenario: need fewer eavesdroppers than antennas (K < M)");
        bob.validate();
        for (const auto &e : eves)
            e.validate();
    }

    cvec steering_vector(const ArrayDesign &design, const Placement &place, double c)
    {
        design.validate();
        place.validate();
        const double cos_t = std::cos(place.angle_rad);
        cvec a(design.size());
        for (std::size_t m = 0; m < a.size(); ++m)
        {
            const double phase = -two_pi * design.frequency(m) / c * (place.range_m - design.positions[m] * cos_t);
            a[m] = std::polar(1.0, phase);
        }
        return a;
    }

    cvec channel(const ArrayDesign &design, const Placement &place, double c)
    {
        if (!(place.path_loss_linear > 0.0))
            throw std::invalid_argument("channel: path loss must be positive");
        cvec h = steering_vector(design, place, c);
        const double g = std::sqrt(place.path_loss_linear);
        for (auto &v : h)
            v *= g;
        return h;
    }

    cvec mrt_beamformer(const ArrayDesign &design, const Placement &bob, double c)
    {
        cvec w = steering_vector(design, bob, c);
        const double s = 1.0 / std::sqrt(double(w.size()));
        for (auto &v : w)
            v *= s;
        return w;
    }

    complex_t inner_product(const cvec &a, const cvec &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("inner_product: length mismatch");
        complex_t acc(0.0, 0.0);
        for (std::size_t m = 0; m < a.size(); ++m)
            acc += std::conj(a[m]) * b[m];
        return acc;
    }

    complex_t beampattern(const ArrayDesign &design, const Placement &probe, const Placement &bob, double c)
    {
        design.validate();
        probe.validate();
        bob.validate();
        const double d_range = bob.range_m - probe.range_m;
        const double d_cos = std::cos(bob.angle_rad) - std::cos(probe.angle_rad);
        complex_t acc(0.0, 0.0);
        for (std::size_t m = 0; m < design.size(); ++m)
        {
            const double phase = -two_pi * design.frequency(m) / c * (d_range - design.positions[m] * d_cos);
            acc += std::polar(1.0, phase);
        }
        return acc;
    }

    double normalized_beampattern_power(const ArrayDesign &design, const Placement &probe, const Placement &bob, double c)
    {
        const double M = double(design.size());
        return std::norm(beampattern(design, probe, bob, c)) / (M * M);
    }

    double snr_bob(const Scenario &scenario, const ArrayDesign &design)
    {
        const auto &b = scenario.bob;
        return scenario.tx_power_linear / b.noise_power_linear * b.path_loss_linear * double(design.size());
    }

    double snr_eve(const Scenario &scenario, const ArrayDesign &design, std::size_t k)
    {
        if (k >= scenario.eves.size())
            throw std::out_of_range("snr_eve: eavesdropper index " + std::to_string(k) + " out of range");
        const auto &e = scenario.eves[k];
        const double eta2 = std::norm(beampattern(design, e, scenario.bob, scenario.c));
        return scenario.tx_power_linear / e.noise_power_linear * e.path_loss_linear / double(design.size()) * eta2;
    }

    double secrecy_upper_bound(const Scenario &scenario, std::size_t num_antennas)
    {
        const auto &b = scenario.bob;
        return std::log2(1.0 + scenario.tx_power_linear / b.noise_power_linear * b.path_loss_linear * double(num_antennas));
    }

    double worst_case_secrecy_rate(const Scenario &scenario, const ArrayDesign &design)
    {
        double eve_sum = 0.0;
        for (std::size_t k = 0; k < scenario.eves.size(); ++k)
            eve_sum += snr_eve(scenario, design, k);
        const double rate = std::log2(1.0 + snr_bob(scenario, design)) - std::log2(1.0 + eve_sum);
        return std::max(0.0, rate);
    }
}
