// SPDX-License-Identifier: Apache-2.0
//
// wiptlib - numerical toolkit for wireless information and power transfer
// Copyright (C) 2026 the wiptlib authors
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
//
// Independent cross-checks for the solvers, deliberately built on different
// machinery than the implementations they validate: the KL worst case is
// re-solved as a finite convex program on a discretized energy grid, and
// capacity points are re-derived by exhaustive search over a probability
// lattice. The `validate` CLI subcommand and the test suite both run these.

#ifndef WIPT_ORACLES_HPP
#define WIPT_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "capacity.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "robust.hpp"

namespace wipt::oracles
{
    namespace detail
    {
        // Cell masses of the nominal exponential on a uniform grid over
        // [0, X] with X covering all but 1e-10 of the mass, renormalized so
        // the discrete program is exactly a probability problem. Midpoints
        // represent the cells.
        struct DiscreteNominal
        {
            std::vector<double> x; // cell midpoints
            std::vector<double> q; // cell masses, sum = 1
        };

        inline DiscreteNominal discretize_exponential(double rate, std::size_t cells)
        {
            DiscreteNominal g;
            g.x.resize(cells);
            g.q.resize(cells);
            double x_max = 23.025850929940457 / rate;
            double width = x_max / static_cast<double>(cells);
            double total = 0.0;
            for (std::size_t i = 0; i < cells; ++i)
            {
                double a = width * static_cast<double>(i);
                g.x[i] = a + 0.5 * width;
                g.q[i] = std::exp(-rate * a) - std::exp(-rate * (a + width));
                total += g.q[i];
            }
            for (double &qi : g.q)
                qi /= total;
            return g;
        }
    } // namespace detail

    // Worst-case mean of the discretized convex program
    //   min sum p_i x_i  s.t.  KL(p, q) <= d  (direction-dependent),
    // solved through its stationarity family with one bisection on the
    // binding constraint. ForwardKL: p_i = q_i exp(-t x_i) / Z. ReverseKL:
    // p_i = s q_i / (x_i + m), s = 1 / sum q_j/(x_j + m).
    inline double discretized_worst_case_mean(double rate, double d, KlDirection direction,
                                              std::size_t cells = 20000)
    {
        if (!(rate > 0.0) || !(d >= 0.0))
            throw domain_error("discretized_worst_case_mean: need rate > 0 and d >= 0");
        detail::DiscreteNominal g = detail::discretize_exponential(rate, cells);
        const std::size_t n = g.x.size();

        if (d == 0.0)
        {
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                mean += g.q[i] * g.x[i];
            return mean;
        }

        std::vector<double> p(n);

        if (direction == KlDirection::ForwardKL)
        {
            auto kl_of_tilt = [&](double t)
            {
                double z = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                {
                    p[i] = g.q[i] * std::exp(-t * g.x[i]);
                    z += p[i];
                }
                double kl = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                {
                    p[i] /= z;
                    if (p[i] > 0.0)
                        kl += p[i] * std::log(p[i] / g.q[i]);
                }
                return kl;
            };
            double lo = 0.0;
            double hi = 1.0;
            int grow = 0;
            while (kl_of_tilt(hi) < d)
            {
                lo = hi;
                hi *= 2.0;
                if (++grow > 60)
                    throw convergence_error("discretized_worst_case_mean: tilt bracket failed",
                                            d - kl_of_tilt(lo), grow);
            }
            double t = find_root([&](double u) { return kl_of_tilt(u) - d; }, lo, hi,
                                 RootOptions{1e-12, 1e-11, 300},
                                 "discretized_worst_case_mean(forward)");
            kl_of_tilt(t);
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                mean += p[i] * g.x[i];
            return mean;
        }

        // ReverseKL: constraint value of the stationary family at shift m.
        auto constraint_of_shift = [&](double m)
        {
            double inv_sum = 0.0;
            double log_sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                inv_sum += g.q[i] / (g.x[i] + m);
                log_sum += g.q[i] * std::log(g.x[i] + m);
            }
            return log_sum + std::log(inv_sum);
        };
        double lo = 1.0;
        double hi = 1.0;
        int grow = 0;
        if (constraint_of_shift(1.0) > d)
        {
            while (constraint_of_shift(hi) > d)
            {
                lo = hi;
                hi *= 4.0;
                if (++grow > 60)
                    throw convergence_error("discretized_worst_case_mean: shift bracket failed",
                                            constraint_of_shift(hi) - d, grow);
            }
        }
        else
        {
            while (constraint_of_shift(lo) < d)
            {
                hi = lo;
                lo /= 8.0;
                if (lo < 1e-12)
                    throw convergence_error("discretized_worst_case_mean: shift bracket failed",
                                            d - constraint_of_shift(hi), grow);
            }
        }
        double m = find_root([&](double u) { return constraint_of_shift(u) - d; }, lo, hi,
                             RootOptions{1e-12, 1e-11, 300},
                             "discretized_worst_case_mean(reverse)");
        double inv_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            inv_sum += g.q[i] / (g.x[i] + m);
        double s = 1.0 / inv_sum;
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            mean += s * g.q[i] / (g.x[i] + m) * g.x[i];
        return mean;
    }

    // Exhaustive Bernoulli search for the binary noiseless channel: the best
    // H2(p1) over the lattice p1 = k*step with expected energy >= b. The
    // feasibility test carries a 1e-9 slack so lattice-aligned b values are
    // not excluded by rounding.
    inline double bernoulli_grid_capacity(double b, double step = 1e-4)
    {
        if (!(b >= 0.0 && b <= 1.0))
            throw infeasible_energy_error("bernoulli_grid_capacity: b must lie in [0, 1]");
        if (!(step > 0.0 && step < 1.0))
            throw domain_error("bernoulli_grid_capacity: bad step");
        std::size_t n = static_cast<std::size_t>(std::llround(1.0 / step));
        double best = 0.0;
        for (std::size_t k = 0; k <= n; ++k)
        {
            double p1 = static_cast<double>(k) / static_cast<double>(n);
            if (p1 < b - 1e-9)
                continue;
            best = std::max(best, binary_entropy(p1));
        }
        return best;
    }

    // Exhaustive lattice search over the probability simplex for alphabets
    // of up to four symbols: maximize entropy subject to expected energy
    // >= b with all p_i on the lattice k/steps. Entropy terms come from a
    // precomputed xlog2x table.
    inline double simplex_grid_capacity(const EnergyAlphabet &alphabet, double b,
                                        std::size_t steps = 1000)
    {
        validate(alphabet);
        const std::vector<double> &e = alphabet.symbol_energies;
        const std::size_t k = e.size();
        if (k > 4)
            throw domain_error("simplex_grid_capacity: exhaustive search capped at 4 symbols");

        std::vector<double> table(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i)
            table[i] = xlog2x(static_cast<double>(i) / static_cast<double>(steps));

        const double need = (b - 1e-9) * static_cast<double>(steps);
        double best = -1.0;

        if (k == 2)
        {
            for (std::size_t i = 0; i <= steps; ++i)
            {
                std::size_t j = steps - i;
                double energy = static_cast<double>(i) * e[0] + static_cast<double>(j) * e[1];
                if (energy < need)
                    continue;
                best = std::max(best, -table[i] - table[j]);
            }
        }
        else if (k == 3)
        {
            for (std::size_t i = 0; i <= steps; ++i)
                for (std::size_t j = 0; j <= steps - i; ++j)
                {
                    std::size_t l = steps - i - j;
                    double energy = static_cast<double>(i) * e[0] +
                                    static_cast<double>(j) * e[1] +
                                    static_cast<double>(l) * e[2];
                    if (energy < need)
                        continue;
                    best = std::max(best, -table[i] - table[j] - table[l]);
                }
        }
        else
        {
            for (std::size_t i = 0; i <= steps; ++i)
                for (std::size_t j = 0; j <= steps - i; ++j)
                {
                    double partial_e = static_cast<double>(i) * e[0] +
                                       static_cast<double>(j) * e[1];
                    double partial_h = -table[i] - table[j];
                    for (std::size_t l = 0; l <= steps - i - j; ++l)
                    {
                        std::size_t m = steps - i - j - l;
                        double energy = partial_e + static_cast<double>(l) * e[2] +
                                        static_cast<double>(m) * e[3];
                        if (energy < need)
                            continue;
                        best = std::max(best, partial_h - table[l] - table[m]);
                    }
                }
        }

        if (best < 0.0)
            throw infeasible_energy_error("simplex_grid_capacity: no lattice point is feasible");
        return best;
    }

} // namespace wipt::oracles

#endif
