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
// Worst-case harvested-energy distributions under KL-divergence
// uncertainty. The true distribution f is only known to lie within KL
// radius d of a nominal exponential f0; minimizing the mean over that ball
// is a convex problem whose solution is parametric in each direction:
//
//   ForwardKL  (D(f||f0) <= d): worst case is Exponential(lambda) with
//     lambda/rate = s > 1 solving ln s + 1/s - 1 = d; mean = 1/lambda.
//   ReverseKL  (D(f0||f) <= d): worst case is f*(x) = scale*f0(x)/(x+shift)
//     with scale = 1/I(shift), I(m) = Int f0/(x+m) dx, and shift solving
//     E0[ln(x+shift)] + ln I(shift) = d.
//
// The reverse direction has no closed form; moments and CDFs come from
// adaptive quadrature on [0, X] where the nominal tail mass beyond X is
// below 1e-10.

#ifndef WIPT_ROBUST_HPP
#define WIPT_ROBUST_HPP

#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"

namespace wipt
{
    enum class KlDirection
    {
        ForwardKL, // constraint D(f || f0) <= d
        ReverseKL  // constraint D(f0 || f) <= d
    };

    // Nominal harvested-energy distribution. Only the exponential family is
    // implemented; "normalized" means unit mean (rate 1).
    struct NominalDistribution
    {
        double rate = 1.0;
    };

    inline void validate(const NominalDistribution &n)
    {
        if (!(n.rate > 0.0) || !std::isfinite(n.rate))
            throw domain_error("NominalDistribution: rate must be positive and finite");
    }

    struct SolverTolerances
    {
        double normalization = 1e-8; // allowed defect of the density integral
        double divergence = 1e-6;    // allowed defect of the KL constraint
        int max_iter = 250;
    };

    // Solved worst-case distribution. For ForwardKL (and for d = 0 in either
    // direction) the distribution is Exponential(tilted_rate); for ReverseKL
    // it is scale * f0(x) / (x + shift).
    struct TiltedDistribution
    {
        KlDirection direction = KlDirection::ForwardKL;
        double divergence_radius = 0.0;
        NominalDistribution nominal;
        bool at_nominal = true;          // d == 0: worst case equals nominal
        double tilted_rate = 1.0;        // ForwardKL parameter
        double scale = 0.0;              // ReverseKL parameters
        double shift = 0.0;
        double worst_case_mean = 1.0;
        double achieved_divergence = 0.0;
    };

    namespace detail
    {
        // Truncation point X with nominal tail mass exp(-rate*X) = 1e-10.
        inline double quadrature_upper_limit(double rate)
        {
            return 23.025850929940457 / rate;
        }

        inline double nominal_pdf(double rate, double x)
        {
            return rate * std::exp(-rate * x);
        }

        // Exponential-vs-exponential divergence D(Exp(s*r) || Exp(r)) as a
        // function of the rate ratio s.
        inline double forward_divergence(double s)
        {
            return std::log(s) + 1.0 / s - 1.0;
        }
    } // namespace detail

    inline TiltedDistribution worst_case_distribution(const NominalDistribution &nominal,
                                                      double d, KlDirection direction,
                                                      const SolverTolerances &tol = {})
    {
        validate(nominal);
        if (!(d >= 0.0) || !std::isfinite(d))
            throw domain_error("worst_case_distribution: divergence radius must be >= 0");

        TiltedDistribution out;
        out.direction = direction;
        out.divergence_radius = d;
        out.nominal = nominal;
        out.tilted_rate = nominal.rate;
        out.worst_case_mean = 1.0 / nominal.rate;

        if (d == 0.0)
            return out; // zero-radius ball: the nominal itself
        out.at_nominal = false;

        if (direction == KlDirection::ForwardKL)
        {
            // ln s + 1/s - 1 is 0 at s = 1 and strictly increasing beyond, so
            // geometric growth always brackets the root.
            double lo = 1.0;
            double hi = 2.0;
            int grow = 0;
            while (detail::forward_divergence(hi) < d)
            {
                lo = hi;
                hi *= 2.0;
                if (++grow > 100)
                    throw convergence_error("worst_case_distribution: forward bracket failed",
                                            d - detail::forward_divergence(lo), grow);
            }
            double s = find_root([d](double t) { return detail::forward_divergence(t) - d; },
                                 lo, hi, RootOptions{1e-14, 1e-13, tol.max_iter},
                                 "worst_case_distribution(forward)");
            out.tilted_rate = nominal.rate * s;
            out.worst_case_mean = 1.0 / out.tilted_rate;
            out.achieved_divergence = detail::forward_divergence(s);
            return out;
        }

        // ReverseKL. Solve h(m) = E0[ln(x+m)] + ln I(m) = d for the shift m;
        // h is strictly decreasing in m and spans d > 0 for small enough m.
        const double rate = nominal.rate;
        const double x_max = detail::quadrature_upper_limit(rate);

        auto mass_integral = [&](double m)
        {
            return integrate([&](double x)
                             { return detail::nominal_pdf(rate, x) / (x + m); },
                             0.0, x_max, 1e-13);
        };
        auto h = [&](double m)
        {
            double log_term = integrate([&](double x)
                                        { return detail::nominal_pdf(rate, x) * std::log(x + m); },
                                        0.0, x_max, 1e-13);
            return log_term + std::log(mass_integral(m));
        };

        double lo = 1.0;
        double hi = 1.0;
        int grow = 0;
        if (h(1.0) > d)
        {
            while (h(hi) > d)
            {
                lo = hi;
                hi *= 4.0;
                if (++grow > 100)
                    throw convergence_error("worst_case_distribution: reverse bracket failed",
                                            h(hi) - d, grow);
            }
        }
        else
        {
            while (h(lo) < d)
            {
                hi = lo;
                lo /= 8.0;
                if (lo < 1e-300)
                    throw convergence_error("worst_case_distribution: reverse bracket failed",
                                            d - h(hi), grow);
            }
        }
        double shift = find_root([&](double m) { return h(m) - d; }, lo, hi,
                                 RootOptions{1e-13, 1e-10, tol.max_iter},
                                 "worst_case_distribution(reverse)");

        double mass = mass_integral(shift);
        out.shift = shift;
        out.scale = 1.0 / mass;
        // Mean via the identity Int x*f0/(x+m) = F0(X) - m*I(m); avoids a
        // third quadrature.
        double f0_mass = 1.0 - std::exp(-rate * x_max);
        out.worst_case_mean = f0_mass / mass - shift;
        out.achieved_divergence = h(shift);

        if (std::fabs(out.achieved_divergence - d) > tol.divergence)
            throw convergence_error("worst_case_distribution: divergence constraint not met",
                                    std::fabs(out.achieved_divergence - d), tol.max_iter);
        return out;
    }

    // CDF of the solved worst-case distribution on a nonnegative ascending
    // grid. Closed form for exponential solutions, quadrature otherwise.
    inline std::vector<double> worst_case_cdf(const TiltedDistribution &dist,
                                              std::span<const double> x_grid)
    {
        double prev_x = 0.0;
        for (double x : x_grid)
        {
            if (!(x >= 0.0) || !std::isfinite(x))
                throw domain_error("worst_case_cdf: grid must be nonnegative and finite");
            if (x < prev_x)
                throw domain_error("worst_case_cdf: grid must be sorted ascending");
            prev_x = x;
        }

        std::vector<double> cdf;
        cdf.reserve(x_grid.size());

        if (dist.at_nominal || dist.direction == KlDirection::ForwardKL)
        {
            for (double x : x_grid)
                cdf.push_back(-std::expm1(-dist.tilted_rate * x));
            return cdf;
        }

        const double rate = dist.nominal.rate;
        double acc = 0.0;
        double from = 0.0;
        for (double x : x_grid)
        {
            acc += integrate([&](double t)
                             { return dist.scale * detail::nominal_pdf(rate, t) / (t + dist.shift); },
                             from, x, 1e-13);
            from = x;
            double v = std::min(acc, 1.0);
            if (!cdf.empty())
                v = std::max(v, cdf.back());
            cdf.push_back(v);
        }
        return cdf;
    }

} // namespace wipt

#endif
