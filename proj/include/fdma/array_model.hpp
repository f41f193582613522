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

// Forward physics of a frequency-diverse movable-antenna array on the X axis.
//
// Element m sits at x_m and radiates at f_m = f0 + dF_m. A receiver at polar position (R, theta),
// theta measured from the +X axis, sees the steering entry
//
//      a_m = exp(-j 2 pi f_m / c * (R - x_m cos(theta)))
//
// The transmitter uses maximum ratio transmission towards Bob, so every SNR reduces to the
// beampattern eta(probe) = a(probe)^H a(bob). All functions are pure.

#ifndef FDMA_ARRAY_MODEL_HPP
#define FDMA_ARRAY_MODEL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "fdma/units.hpp"

namespace fdma
{
    using complex_t = std::complex<double>;
    using cvec = std::vector<complex_t>;

    // Decision variables of the transmitter
    struct ArrayDesign
    {
        std::vector<double> positions;   // x_1 ... x_M in [m], strictly increasing
        double f0_hz = 30e9;             // Reference carrier in [Hz]
        std::vector<double> freq_shifts; // dF_1 ... dF_M in [Hz], |dF_m| < 1e-3 f0

        std::size_t size() const { return positions.size(); }
        double frequency(std::size_t m) const { return f0_hz + freq_shifts[m]; }

        // Throws std::invalid_argument if any invariant is broken
        void validate() const;
    };

    // Receiver location with its link budget
    struct Placement
    {
        double range_m = 1.0;            // R_u, distance to the array center
        double angle_rad = pi / 2.0;     // theta_u in (0, pi)
        double path_loss_linear = 1.0;   // L_u in (0, 1]
        double noise_power_linear = 1.0; // sigma_u^2 in [mW]

        void validate() const;
    };

    struct Scenario
    {
        Placement bob;
        std::vector<Placement> eves;
        double tx_power_linear = 1.0; // P in [mW]
        double c = speed_of_light;

        std::size_t num_eves() const { return eves.size(); }

        // Checks K < M and all placements
        void validate(std::size_t num_antennas) const;
    };

    cvec steering_vector(const ArrayDesign &design, const Placement &place, double c);

    // sqrt(L_u) * a(x, f, psi_u)
    cvec channel(const ArrayDesign &design, const Placement &place, double c);

    // w* = a(x, f, psi_B) / sqrt(M), unit norm
    cvec mrt_beamformer(const ArrayDesign &design, const Placement &bob, double c);

    // a^H b
    complex_t inner_product(const cvec &a, const cvec &b);

    // eta = a(psi_probe)^H a(psi_B). Evaluated from the per-element phase difference so that the
    // large common propagation phase f_m R / c cancels exactly; |eta| <= M and eta(bob) = M.
    complex_t beampattern(const ArrayDesign &design, const Placement &probe, const Placement &bob, double c);

    // |eta|^2 / M^2 in [0, 1]
    double normalized_beampattern_power(const ArrayDesign &design, const Placement &probe, const Placement &bob, double c);

    // gamma_B = P L_B M / sigma_B^2; depends only on M
    double snr_bob(const Scenario &scenario, const ArrayDesign &design);

    // gamma_E_k = (P / sigma^2) (L / M) |eta(psi_E_k)|^2, k is zero-based
    double snr_eve(const Scenario &scenario, const ArrayDesign &design, std::size_t k);

    // log2(1 + gamma_B), the rate without eavesdroppers
    double secrecy_upper_bound(const Scenario &scenario, std::size_t num_antennas);

    // [log2(1 + gamma_B) - log2(1 + sum_k gamma_E_k)]^+ for colluding eavesdroppers
    double worst_case_secrecy_rate(const Scenario &scenario, const ArrayDesign &design);
}

#endif
