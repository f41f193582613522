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

// Closed-form nulling around the linear frequency-diverse array.
//
// With x_m = n_m Delta D + dx_m and dF_m = n_m Delta F + df_m, n_m = m - (M+1)/2, and writing
// dcos_k = cos(theta_E_k) - cos(theta_B), dR_k = R_B - R_E_k, the beampattern at eavesdropper k
// is linearized in dx (first-order Taylor, cross term dF_m x_m dcos_k dropped) as
//
//      eta_k ~ sum_m exp(-j phi_mk) - j (2 pi f0 / c) dcos_k sum_m dx_m exp(-j phi_mk)
//      phi_mk = (2 pi / c) (f0 n_m Delta D dcos_k + dF_m dR_k)
//
// At the odd-symmetric baseline sum_m sin(phi_mk) = 0, so forcing Re(eta_k) = 0 nulls the whole
// term and yields K linear equations A1 dx = b1:
//
//      A1(k, m) = (2 pi f0 / c) dcos_k sin(phi_mk),   b1(k) = sum_m cos(phi_mk)
//
// solved in the weighted ridge sense dx = (A1^T Q A1 + a1 I)^-1 A1^T Q b1 with
// Q = diag(P L_k / (M sigma_k^2)). The frequency system is the same construction with
//
//      A2(k, m) = (2 pi / c) dR_k sin(vphi_mk),   b2(k) = sum_m cos(vphi_mk)
//      vphi_mk = (2 pi / c) (f0 x_m dcos_k + n_m Delta F dR_k)
//
// Both solves are taken relative to the linear baseline; the two are applied alternately.

#ifndef FDMA_PERTURB_OPTIMIZER_HPP
#define FDMA_PERTURB_OPTIMIZER_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdma/array_model.hpp"
#include "fdma/scenario.hpp"

namespace fdma
{
    struct PerturbConfig
    {
        std::optional<double> ridge_position;  // alpha_1; unset selects default_ridge()
        std::optional<double> ridge_frequency; // alpha_2; unset selects default_ridge()
        std::size_t max_rounds = 20;
        double relative_tolerance = 1e-6;
        bool optimize_positions = true;
        bool optimize_freq_shifts = true;

        void validate() const;
    };

    struct NullingSystem
    {
        Eigen::MatrixXd A; // K x M
        Eigen::VectorXd b; // K
        Eigen::VectorXd q; // diagonal of Q, K entries, all > 0

        Eigen::MatrixXd normal_matrix() const; // A^T Q A
        Eigen::VectorXd normal_rhs() const;    // A^T Q b
    };

    // phi_{m,k} with the current shift of antenna m; m and k are zero-based
    double phase_phi(std::size_t m, std::size_t k, const Scenario &scenario, const BaselineParams &params,
                     std::span<const double> freq_shifts, double f0_hz);

    // varphi_{m,k} with the current position of antenna m
    double phase_varphi(std::size_t m, std::size_t k, const Scenario &scenario, const BaselineParams &params,
                        std::span<const double> positions, double f0_hz);

    NullingSystem build_position_system(const Scenario &scenario, const BaselineParams &params,
                                        std::span<const double> freq_shifts, double f0_hz);

    NullingSystem build_frequency_system(const Scenario &scenario, const BaselineParams &params,
                                         std::span<const double> positions, double f0_hz);

    // 1e-3 trace(A^T Q A) / M
    double default_ridge(const NullingSystem &system);

    // (A^T Q A + ridge I)^-1 A^T Q b through a Cholesky factorization.
    // Throws SingularSystem when ridge = 0 and the normal matrix is rank deficient.
    Eigen::VectorXd solve_ridge(const NullingSystem &system, double ridge);

    // Same objective subject to C delta = e (rows of C linearly independent), via the Schur
    // complement of the KKT system. With an empty C this equals solve_ridge.
    Eigen::VectorXd solve_ridge_constrained(const NullingSystem &system, double ridge, const Eigen::MatrixXd &C,
                                            const Eigen::VectorXd &e);

    // Ridge solution made feasible by an active set: every violated bound (spacing below
    // Delta D_min, element outside [-D, D], shift outside [dF_min, dF_max]) is pinned to its
    // limit and the system is re-solved until no new violation appears.
    struct ConstrainedSolution
    {
        Eigen::VectorXd delta;
        std::size_t active_constraints = 0;
    };

    ConstrainedSolution solve_position_perturbation(const NullingSystem &system, double ridge, std::size_t M,
                                                    const BaselineParams &params);

    ConstrainedSolution solve_frequency_perturbation(const NullingSystem &system, double ridge, std::size_t M,
                                                     const BaselineParams &params);

    struct PerturbedDesign
    {
        ArrayDesign design;
        std::size_t clip_count = 0;
    };

    // x_m = n_m Delta D + dx_m. Spacings below Delta D_min are pushed apart symmetrically, each
    // repaired pair counting once; an array wider than 2D is then shrunk and recentered.
    // Shifts of `baseline` are kept.
    PerturbedDesign apply_position_perturbation(const ArrayDesign &baseline, std::span<const double> dx,
                                                const BaselineParams &params);

    // dF_m = n_m Delta F + df_m, clamped to [dF_min, dF_max]. Positions of `baseline` are kept.
    PerturbedDesign apply_frequency_perturbation(const ArrayDesign &baseline, std::span<const double> df,
                                                 const BaselineParams &params);

    // First-order model of eta_k for position deviations dx on top of the current shifts, with
    // the common phase exp(-j 2 pi f0 dR_k / c) removed
    complex_t linearized_beampattern(const Scenario &scenario, const BaselineParams &params,
                                     std::span<const double> freq_shifts, std::span<const double> dx, std::size_t k,
                                     double f0_hz);

    struct PerturbTraceRecord
    {
        std::size_t round;
        std::string subproblem; // "positions" or "freq_shifts"
        double cost;
        std::size_t clip_count;         // clips applied after the solve
        std::size_t active_constraints; // bounds pinned inside the solve
    };

    struct PerturbResult
    {
        ArrayDesign design;
        double baseline_cost = 0.0; // J of `baseline` as given
        double start_cost = 0.0;    // J of `baseline` with its shifts clamped into the box
        double final_cost = 0.0;
        std::vector<PerturbTraceRecord> trace;
    };

    // Alternates the position solve (with the current shifts) and the frequency solve (with the
    // current positions) starting from `baseline`. Stops once a full round changes J by less than
    // relative_tolerance or after max_rounds; returns the lowest-cost feasible design visited. The
    // baseline competes with its shifts clamped into the box, so final_cost <= start_cost.
    PerturbResult alternate_perturb(const Scenario &scenario, const ArrayDesign &baseline, const BaselineParams &params,
                                    const PerturbConfig &cfg);
}

#endif
