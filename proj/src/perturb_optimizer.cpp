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

#include "fdma/perturb_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdma/errors.hpp"
#include "fdma/sa_optimizer.hpp"

namespace fdma
{
    namespace
    {
        constexpr double feasibility_slack = 1e-12;

        struct EveGeometry
        {
            double d_cos;   // cos(theta_E) - cos(theta_B)
            double d_range; // R_B - R_E
        };

        EveGeometry geometry(const Scenario &scenario, std::size_t k)
        {
            if (k >= scenario.eves.size())
                throw std::out_of_range("eavesdropper index out of range");
            const auto &e = scenario.eves[k];
            return {std::cos(e.angle_rad) - std::cos(scenario.bob.angle_rad), scenario.bob.range_m - e.range_m};
        }

        Eigen::VectorXd q_diagonal(const Scenario &scenario, std::size_t M)
        {
            Eigen::VectorXd q(Eigen::Index(scenario.eves.size()));
            for (std::size_t k = 0; k < scenario.eves.size(); ++k)
            {
                const auto &e = scenario.eves[k];
                q[Eigen::Index(k)] = scenario.tx_power_linear * e.path_loss_linear / (double(M) * e.noise_power_linear);
            }
            return q;
        }

        // Pinned equality rows accumulated by the active-set loops
        struct PinnedRows
        {
            std::vector<Eigen::VectorXd> rows;
            std::vector<double> values;

            // Rows already implied by the pinned set (every spacing plus both ends) are skipped;
            // returns whether the row was taken
            bool add(Eigen::VectorXd row, double value)
            {
                if (!rows.empty())
                {
                    Eigen::MatrixXd C = matrix(row.size());
                    C.conservativeResize(C.rows() + 1, Eigen::NoChange);
                    C.row(C.rows() - 1) = row.transpose();
                    if (Eigen::FullPivLU<Eigen::MatrixXd>(C).rank() < C.rows())
                        return false;
                }
                rows.push_back(std::move(row));
                values.push_back(value);
                return true;
            }

            Eigen::MatrixXd matrix(Eigen::Index n) const
            {
                Eigen::MatrixXd C(Eigen::Index(rows.size()), n);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    C.row(Eigen::Index(i)) = rows[i].transpose();
                return C;
            }

            Eigen::VectorXd rhs() const
            {
                return Eigen::Map<const Eigen::VectorXd>(values.data(), Eigen::Index(values.size()));
            }
        };
    }

    void PerturbConfig::validate() const
    {
        if (ridge_position && !(*ridge_position >= 0.0))
            throw std::invalid_argument("PerturbConfig: ridge_position must be >= 0");
        if (ridge_frequency && !(*ridge_frequency >= 0.0))
            throw std::invalid_argument("PerturbConfig: ridge_frequency must be >= 0");
        if (max_rounds == 0)
            throw std::invalid_argument("PerturbConfig: max_rounds must be positive");
        if (!(relative_tolerance > 0.0))
            throw std::invalid_argument("PerturbConfig: relative_tolerance must be positive");
    }

    Eigen::MatrixXd NullingSystem::normal_matrix() const { return A.transpose() * q.asDiagonal() * A; }
    Eigen::VectorXd NullingSystem::normal_rhs() const { return A.transpose() * (q.asDiagonal() * b); }

    double phase_phi(std::size_t m, std::size_t k, const Scenario &scenario, const BaselineParams &params,
                     std::span<const double> freq_shifts, double f0_hz)
    {
        const std::size_t M = freq_shifts.size();
        if (m >= M)
            throw std::out_of_range("phase_phi: antenna index out of range");
        const auto g = geometry(scenario, k);
        const double n = centered_index(m, M);
        return two_pi / scenario.c * (f0_hz * n * params.uniform_spacing * g.d_cos + freq_shifts[m] * g.d_range);
    }

    double phase_varphi(std::size_t m, std::size_t k, const Scenario &scenario, const BaselineParams &params,
                        std::span<const double> positions, double f0_hz)
    {
        const std::size_t M = positions.size();
        if (m >= M)
            throw std::out_of_range("phase_varphi: antenna index out of range");
        const auto g = geometry(scenario, k);
        const double n = centered_index(m, M);
        return two_pi / scenario.c * (f0_hz * positions[m] * g.d_cos + n * params.uniform_freq_step * g.d_range);
    }

    NullingSystem build_position_system(const Scenario &scenario, const BaselineParams &params,
                                        std::span<const double> freq_shifts, double f0_hz)
    {
        const std::size_t M = freq_shifts.size();
        const std::size_t K = scenario.eves.size();
        NullingSystem sys;
        sys.A.resize(Eigen::Index(K), Eigen::Index(M));
        sys.b.resize(Eigen::Index(K));
        for (std::size_t k = 0; k < K; ++k)
        {
            const double gain = two_pi * f0_hz / scenario.c * geometry(scenario, k).d_cos;
            double b = 0.0;
            for (std::size_t m = 0; m < M; ++m)
            {
                const double phi = phase_phi(m, k, scenario, params, freq_shifts, f0_hz);
                sys.A(Eigen::Index(k), Eigen::Index(m)) = gain * std::sin(phi);
                b += std::cos(phi);
            }
            sys.b[Eigen::Index(k)] = b;
        }
        sys.q = q_diagonal(scenario, M);
        return sys;
    }

    NullingSystem build_frequency_system(const Scenario &scenario, const BaselineParams &params,
                                         std::span<const double> positions, double f0_hz)
    {
        const std::size_t M = positions.size();
        const std::size_t K = scenario.eves.size();
        NullingSystem sys;
        sys.A.resize(Eigen::Index(K), Eigen::Index(M));
        sys.b.resize(Eigen::Index(K));
        for (std::size_t k = 0; k < K; ++k)
        {
            const double gain = two_pi / scenario.c * geometry(scenario, k).d_range;
            double b = 0.0;
            for (std::size_t m = 0; m < M; ++m)
            {
                const double vphi = phase_varphi(m, k, scenario, params, positions, f0_hz);
                sys.A(Eigen::Index(k), Eigen::Index(m)) = gain * std::sin(vphi);
                b += std::cos(vphi);
            }
            sys.b[Eigen::Index(k)] = b;
        }
        sys.q = q_diagonal(scenario, M);
        return sys;
    }

    double default_ridge(const NullingSystem &system)
    {
        const double tr = system.normal_matrix().trace();
        // All-zero rows leave nothing to regularize; any positive ridge then returns zero
        return tr > 0.0 ? 1e-3 * tr / double(system.A.cols()) : 1.0;
    }

    Eigen::VectorXd solve_ridge(const NullingSystem &system, double ridge)
    {
        if (!(ridge >= 0.0))
            throw std::invalid_argument("solve_ridge: ridge must be >= 0");
        if ((system.q.array() <= 0.0).any())
            throw std::invalid_argument("solve_ridge: Q must be positive");
        const Eigen::Index n = system.A.cols();
        Eigen::MatrixXd N = system.normal_matrix();
        if (ridge == 0.0)
        {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(N);
            if (qr.rank() < n)
                throw SingularSystem("solve_ridge: normal matrix is rank deficient and ridge is zero");
        }
        N.diagonal().array() += ridge;
        Eigen::LLT<Eigen::MatrixXd> llt(N);
        if (llt.info() == Eigen::Success)
            return llt.solve(system.normal_rhs());
        // A ridge far below the rounding level of A^T Q A can leave LLT a negative pivot
        Eigen::LDLT<Eigen::MatrixXd> ldlt(N);
        if (ldlt.info() != Eigen::Success || ridge == 0.0)
            throw SingularSystem("solve_ridge: normal matrix is not positive definite");
        return ldlt.solve(system.normal_rhs());
    }

    Eigen::VectorXd solve_ridge_constrained(const NullingSystem &system, double ridge, const Eigen::MatrixXd &C,
                                            const Eigen::VectorXd &e)
    {
        if (C.rows() == 0)
            return solve_ridge(system, ridge);
        if (C.cols() != system.A.cols() || C.rows() != e.size())
            throw DimensionMismatch("solve_ridge_constrained: constraint shape mismatch");
        if (!(ridge > 0.0))
            throw std::invalid_argument("solve_ridge_constrained: ridge must be positive");

        // Null-space method: C^T = [Y Z] R, delta = Y R^-T e + Z w. The reduced matrix
        // Z^T (A^T Q A + ridge I) Z keeps every eigenvalue >= ridge, unlike the Schur complement
        const Eigen::Index n = C.cols(), p = C.rows();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(C.transpose());
        const Eigen::MatrixXd Qf = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
        const double rmax = R.diagonal().cwiseAbs().maxCoeff();
        if (!(R.diagonal().cwiseAbs().minCoeff() > 1e-12 * rmax))
            throw SingularSystem("solve_ridge_constrained: constraints are linearly dependent");
        const Eigen::VectorXd y = R.transpose().triangularView<Eigen::Lower>().solve(e);
        const Eigen::VectorXd particular = Qf.leftCols(p) * y;
        if (p == n)
            return particular;

        const Eigen::MatrixXd Z = Qf.rightCols(n - p);
        Eigen::MatrixXd N = system.normal_matrix();
        N.diagonal().array() += ridge;
        const Eigen::MatrixXd reduced = Z.transpose() * N * Z;
        Eigen::LDLT<Eigen::MatrixXd> fact(reduced);
        if (fact.info() != Eigen::Success)
            throw SingularSystem("solve_ridge_constrained: reduced system is not positive definite");
        const Eigen::VectorXd w = fact.solve(Z.transpose() * (system.normal_rhs() - N * particular));
        return particular + Z * w;
    }

    ConstrainedSolution solve_position_perturbation(const NullingSystem &system, double ridge, std::size_t M,
                                                    const BaselineParams &params)
    {
        const Eigen::Index n = Eigen::Index(M);
        const double D = params.aperture_half_width;
        auto base = [&](Eigen::Index m) { return centered_index(std::size_t(m), M) * params.uniform_spacing; };

        PinnedRows pinned;
        std::vector<bool> spacing_pinned(M, false);
        bool left_pinned = false, right_pinned = false;

        ConstrainedSolution out;
        out.delta = solve_ridge(system, ridge);
        for (std::size_t pass = 0; pass <= M + 1; ++pass)
        {
            bool added = false;
            for (Eigen::Index i = 0; i + 1 < n; ++i)
            {
                const double gap = base(i + 1) + out.delta[i + 1] - base(i) - out.delta[i];
                if (!spacing_pinned[std::size_t(i)] && gap < params.min_spacing * (1.0 - feasibility_slack))
                {
                    Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
                    row[i] = -1.0;
                    row[i + 1] = 1.0;
                    spacing_pinned[std::size_t(i)] = true;
                    added |= pinned.add(std::move(row), params.min_spacing - params.uniform_spacing);
                }
            }
            if (!left_pinned && base(0) + out.delta[0] < -D * (1.0 + feasibility_slack))
            {
                Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
                row[0] = 1.0;
                left_pinned = true;
                added |= pinned.add(std::move(row), -D - base(0));
            }
            if (!right_pinned && base(n - 1) + out.delta[n - 1] > D * (1.0 + feasibility_slack))
            {
                Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
                row[n - 1] = 1.0;
                right_pinned = true;
                added |= pinned.add(std::move(row), D - base(n - 1));
            }
            if (!added)
                break;
            out.delta = solve_ridge_constrained(system, std::max(ridge, 1e-300), pinned.matrix(n), pinned.rhs());
        }
        out.active_constraints = pinned.rows.size();
        return out;
    }

    ConstrainedSolution solve_frequency_perturbation(const NullingSystem &system, double ridge, std::size_t M,
                                                     const BaselineParams &params)
    {
        const Eigen::Index n = Eigen::Index(M);
        auto base = [&](Eigen::Index m) { return centered_index(std::size_t(m), M) * params.uniform_freq_step; };
        const double span = std::max(params.freq_shift_max - params.freq_shift_min, 1.0);

        PinnedRows pinned;
        std::vector<bool> is_pinned(M, false);

        ConstrainedSolution out;
        out.delta = solve_ridge(system, ridge);
        for (std::size_t pass = 0; pass <= M; ++pass)
        {
            bool added = false;
            for (Eigen::Index m = 0; m < n; ++m)
            {
                if (is_pinned[std::size_t(m)])
                    continue;
                const double f = base(m) + out.delta[m];
                double limit = 0.0;
                if (f > params.freq_shift_max + feasibility_slack * span)
                    limit = params.freq_shift_max;
                else if (f < params.freq_shift_min - feasibility_slack * span)
                    limit = params.freq_shift_min;
                else
                    continue;
                Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
                row[m] = 1.0;
                is_pinned[std::size_t(m)] = true;
                added |= pinned.add(std::move(row), limit - base(m));
            }
            if (!added)
                break;
            out.delta = solve_ridge_constrained(system, std::max(ridge, 1e-300), pinned.matrix(n), pinned.rhs());
        }
        out.active_constraints = pinned.rows.size();
        return out;
    }

    PerturbedDesign apply_position_perturbation(const ArrayDesign &baseline, std::span<const double> dx,
                                                const BaselineParams &params)
    {
        const std::size_t M = baseline.size();
        if (dx.size() != M)
            throw DimensionMismatch("apply_position_perturbation: dx length differs from M");
        params.validate();

        PerturbedDesign out;
        out.design = baseline;
        auto &x = out.design.positions;
        for (std::size_t m = 0; m < M; ++m)
            x[m] = centered_index(m, M) * params.uniform_spacing + dx[m];

        const double dmin = params.min_spacing;
        std::vector<bool> repaired(M, false);
        for (std::size_t pass = 0; pass < 4 * M + 4; ++pass)
        {
            bool any = false;
            for (std::size_t i = 0; i + 1 < M; ++i)
            {
                const double gap = x[i + 1] - x[i];
                if (gap < dmin * (1.0 - feasibility_slack))
                {
                    const double half = 0.5 * (dmin - gap);
                    x[i] -= half;
                    x[i + 1] += half;
                    repaired[i] = any = true;
                }
            }
            if (!any)
                break;
        }
        out.clip_count = std::size_t(std::count(repaired.begin(), repaired.end(), true));

        const double D = params.aperture_half_width;
        if (M > 1)
        {
            const double span = x.back() - x.front();
            const double floor_span = double(M - 1) * dmin;
            if (span > 2.0 * D * (1.0 + feasibility_slack) && span > floor_span)
            {
                // Shrink the excess over Delta D_min of every gap by a common factor
                const double s = std::max(0.0, (2.0 * D - floor_span) / (span - floor_span));
                std::vector<double> d = spacings_of(x);
                for (auto &v : d)
                    v = dmin + s * (v - dmin);
                x = reconstruct_positions(d, D);
                ++out.clip_count;
            }
        }
        if (x.front() < -D * (1.0 + feasibility_slack) || x.back() > D * (1.0 + feasibility_slack))
        {
            const double shift = x.front() < -D ? -D - x.front() : D - x.back();
            for (auto &v : x)
                v += shift;
            ++out.clip_count;
        }
        return out;
    }

    PerturbedDesign apply_frequency_perturbation(const ArrayDesign &baseline, std::span<const double> df,
                                                 const BaselineParams &params)
    {
        const std::size_t M = baseline.size();
        if (df.size() != M)
            throw DimensionMismatch("apply_frequency_perturbation: df length differs from M");
        params.validate();

        PerturbedDesign out;
        out.design = baseline;
        for (std::size_t m = 0; m < M; ++m)
        {
            const double f = centered_index(m, M) * params.uniform_freq_step + df[m];
            const double clamped = std::clamp(f, params.freq_shift_min, params.freq_shift_max);
            if (clamped != f)
                ++out.clip_count;
            out.design.freq_shifts[m] = clamped;
        }
        return out;
    }

    complex_t linearized_beampattern(const Scenario &scenario, const BaselineParams &params,
                                     std::span<const double> freq_shifts, std::span<const double> dx, std::size_t k,
                                     double f0_hz)
    {
        const std::size_t M = freq_shifts.size();
        if (dx.size() != M)
            throw DimensionMismatch("linearized_beampattern: dx length differs from M");
        const double gain = two_pi * f0_hz / scenario.c * geometry(scenario, k).d_cos;
        complex_t zeroth(0.0, 0.0), first(0.0, 0.0);
        for (std::size_t m = 0; m < M; ++m)
        {
            const complex_t e = std::polar(1.0, -phase_phi(m, k, scenario, params, freq_shifts, f0_hz));
            zeroth += e;
            first += dx[m] * e;
        }
        return zeroth - complex_t(0.0, gain) * first;
    }

    PerturbResult alternate_perturb(const Scenario &scenario, const ArrayDesign &baseline, const BaselineParams &params,
                                    const PerturbConfig &cfg)
    {
        cfg.validate();
        params.validate();
        baseline.validate();
        scenario.validate(baseline.size());

        const std::size_t M = baseline.size();
        const double f0 = baseline.f0_hz;

        PerturbResult out;
        out.design = baseline;
        for (auto &f : out.design.freq_shifts)
            f = std::clamp(f, params.freq_shift_min, params.freq_shift_max);
        out.baseline_cost = cost(scenario, baseline);
        out.start_cost = cost(scenario, out.design);
        out.final_cost = out.start_cost;
        if (scenario.eves.empty() || (!cfg.optimize_positions && !cfg.optimize_freq_shifts))
            return out;

        ArrayDesign current = baseline;
        double previous = out.baseline_cost;
        for (std::size_t round = 0; round < cfg.max_rounds; ++round)
        {
            double current_cost = previous;
            auto record = [&](const char *what, const PerturbedDesign &pd, std::size_t active)
            {
                current = pd.design;
                current_cost = cost(scenario, current);
                out.trace.push_back({round, what, current_cost, pd.clip_count, active});
                if (current_cost < out.final_cost)
                {
                    out.final_cost = current_cost;
                    out.design = current;
                }
            };

            if (cfg.optimize_positions)
            {
                const NullingSystem sys = build_position_system(scenario, params, current.freq_shifts, f0);
                const double ridge = cfg.ridge_position.value_or(default_ridge(sys));
                const auto sol = solve_position_perturbation(sys, ridge, M, params);
                const std::vector<double> dx(sol.delta.data(), sol.delta.data() + sol.delta.size());
                record("positions", apply_position_perturbation(current, dx, params), sol.active_constraints);
            }
            if (cfg.optimize_freq_shifts)
            {
                const NullingSystem sys = build_frequency_system(scenario, params, current.positions, f0);
                const double ridge = cfg.ridge_frequency.value_or(default_ridge(sys));
                const auto sol = solve_frequency_perturbation(sys, ridge, M, params);
                const std::vector<double> df(sol.delta.data(), sol.delta.data() + sol.delta.size());
                record("freq_shifts", apply_frequency_perturbation(current, df, params), sol.active_constraints);
            }

            if (std::abs(previous - current_cost) <= cfg.relative_tolerance * std::max(previous, 1e-300))
                break;
            previous = current_cost;
        }
        return out;
    }
}
