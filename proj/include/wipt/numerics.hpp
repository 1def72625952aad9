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

#ifndef WIPT_NUMERICS_HPP
#define WIPT_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wipt
{
    // Two-sided 95% normal quantile used for confidence half-widths.
    constexpr double z95 = 1.959963984540054;

    // x * log2(x), continuously extended to 0 at x = 0.
    inline double xlog2x(double x)
    {
        if (x < 0.0 || !std::isfinite(x))
            throw domain_error("xlog2x: argument must be finite and nonnegative");
        if (x == 0.0)
            return 0.0;
        return x * std::log2(x);
    }

    // Binary entropy in bits, H2(p) = -p log2 p - (1-p) log2(1-p).
    inline double binary_entropy(double p)
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw domain_error("binary_entropy: probability must lie in [0,1]");
        return -xlog2x(p) - xlog2x(1.0 - p);
    }

    // Shannon entropy in bits of a probability vector (entries assumed >= 0).
    inline double entropy_bits(std::span<const double> p)
    {
        double h = 0.0;
        for (double v : p)
            h -= xlog2x(v);
        return h;
    }

    struct RootOptions
    {
        double x_tol = 1e-13;  // relative interval width at which to stop
        double f_tol = 0.0;    // absolute residual at which to stop early
        int max_iter = 250;
    };

    // Bisection on a bracketing interval [lo, hi] with f(lo) and f(hi) of
    // opposite sign (or zero). Deterministic and robust for the monotone
    // residual functions used throughout this library.
    template <class F>
    double find_root(F &&f, double lo, double hi, RootOptions opt = {},
                     const char *what = "find_root")
    {
        double flo = f(lo);
        double fhi = f(hi);
        if (flo == 0.0)
            return lo;
        if (fhi == 0.0)
            return hi;
        if (std::isnan(flo) || std::isnan(fhi) || flo * fhi > 0.0)
            throw convergence_error(std::string(what) + ": root not bracketed",
                                    std::min(std::fabs(flo), std::fabs(fhi)), 0);

        double mid = 0.5 * (lo + hi);
        double fmid = flo;
        for (int it = 0; it < opt.max_iter; ++it)
        {
            mid = 0.5 * (lo + hi);
            fmid = f(mid);
            if (std::fabs(fmid) <= opt.f_tol)
                return mid;
            if ((fmid < 0.0) == (flo < 0.0))
            {
                lo = mid;
                flo = fmid;
            }
            else
            {
                hi = mid;
            }
            if (hi - lo <= opt.x_tol * std::max(1.0, std::fabs(mid)))
                return 0.5 * (lo + hi);
        }
        if (hi - lo <= 1e-9 * std::max(1.0, std::fabs(mid)))
            return 0.5 * (lo + hi);
        throw convergence_error(std::string(what) + ": iteration cap reached",
                                std::fabs(fmid), opt.max_iter);
    }

    namespace detail
    {
        template <class F>
        double simpson_recurse(F &f, double a, double b, double fa, double fm, double fb,
                               double whole, double tol, int depth)
        {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m);
            double rm = 0.5 * (m + b);
            double flm = f(lm);
            double frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            // Terminal estimate includes the standard Richardson correction.
            if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    } // namespace detail

    // Adaptive Simpson quadrature on [a, b] with absolute tolerance abs_tol.
    template <class F>
    double integrate(F &&f, double a, double b, double abs_tol = 1e-12, int max_depth = 52)
    {
        if (!(std::isfinite(a) && std::isfinite(b)))
            throw domain_error("integrate: endpoints must be finite");
        if (a == b)
            return 0.0;
        double m = 0.5 * (a + b);
        double fa = f(a);
        double fm = f(m);
        double fb = f(b);
        double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
    }

    // Evenly spaced inclusive grid with n >= 2 points.
    inline std::vector<double> linspace(double start, double stop, std::size_t n)
    {
        if (n < 2)
            throw domain_error("linspace: need at least two points");
        std::vector<double> g(n);
        double step = (stop - start) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = start + step * static_cast<double>(i);
        g.back() = stop;
        return g;
    }

    // Sample mean and 95% confidence half-width from streaming sums.
    struct MeanAccumulator
    {
        double sum = 0.0;
        double sum_sq = 0.0;
        std::size_t n = 0;

        void add(double x)
        {
            sum += x;
            sum_sq += x * x;
            ++n;
        }

        double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }

        double ci_halfwidth() const
        {
            if (n < 2)
                return std::numeric_limits<double>::infinity();
            double nn = static_cast<double>(n);
            double var = (sum_sq - sum * sum / nn) / (nn - 1.0);
            if (var < 0.0)
                var = 0.0;
            return z95 * std::sqrt(var / nn);
        }
    };

} // namespace wipt

#endif
