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
// RF-to-DC harvesting models. Four families cover the usual operating
// regimes: proportional conversion, a thresholded linear segment with
// saturation, a normalized sigmoid, and a diode polynomial driven by
// waveform moments. All powers are in Watts; dB conversions belong to
// front ends, not to this header.

#ifndef WIPT_RECTENNA_HPP
#define WIPT_RECTENNA_HPP

#include <cmath>
#include <span>
#include <variant>

#include "errors.hpp"

namespace wipt
{
    // DC output proportional to RF input: eta * p_rf.
    struct LinearModel
    {
        double eta = 1.0;
    };

    // Zero below p_sens, linear with slope eta above it, clipped at p_sat.
    struct PiecewiseLinearModel
    {
        double eta = 0.5;
        double p_sens = 0.1;
        double p_sat = 0.2;
    };

    // Normalized logistic transfer: exactly 0 at zero input, saturating at
    // p_sat. a is the steepness (1/W), b the inflection input power (W).
    struct SigmoidModel
    {
        double p_sat = 1.0;
        double a = 1.0;
        double b = 1.0;
    };

    // Truncated diode expansion: DC = k2 * M2 + k4 * M4 where M2, M4 are the
    // 2nd and 4th time-average moments of the received signal. Requires a
    // waveform, not just an average power.
    struct DiodePolynomialModel
    {
        double k2 = 1.0;
        double k4 = 1.0;
    };

    using RectennaModel =
        std::variant<LinearModel, PiecewiseLinearModel, SigmoidModel, DiodePolynomialModel>;

    inline void validate(const LinearModel &m)
    {
        if (!(m.eta > 0.0 && m.eta <= 1.0))
            throw domain_error("LinearModel: eta must lie in (0, 1]");
    }

    inline void validate(const PiecewiseLinearModel &m)
    {
        if (!(m.eta > 0.0 && m.eta <= 1.0))
            throw domain_error("PiecewiseLinearModel: eta must lie in (0, 1]");
        if (!(m.p_sens > 0.0) || !(m.p_sat > 0.0))
            throw domain_error("PiecewiseLinearModel: p_sens and p_sat must be positive");
        // Nondegenerate linear segment: saturation is reached strictly after
        // the sensitivity threshold.
        if (!(m.p_sens < m.p_sat / m.eta))
            throw domain_error("PiecewiseLinearModel: requires p_sens < p_sat/eta");
    }

    inline void validate(const SigmoidModel &m)
    {
        if (!(m.p_sat > 0.0) || !(m.a > 0.0) || !(m.b > 0.0))
            throw domain_error("SigmoidModel: p_sat, a, b must be positive");
    }

    inline void validate(const DiodePolynomialModel &m)
    {
        if (!(m.k2 >= 0.0) || !(m.k4 >= 0.0))
            throw domain_error("DiodePolynomialModel: k2 and k4 must be nonnegative");
    }

    inline void validate(const RectennaModel &model)
    {
        std::visit([](const auto &m) { validate(m); }, model);
    }

    inline double harvest_dc(const LinearModel &m, double p_rf)
    {
        validate(m);
        if (!(p_rf >= 0.0) || !std::isfinite(p_rf))
            throw domain_error("harvest_dc: p_rf must be finite and nonnegative");
        return m.eta * p_rf;
    }

    inline double harvest_dc(const PiecewiseLinearModel &m, double p_rf)
    {
        validate(m);
        if (!(p_rf >= 0.0) || !std::isfinite(p_rf))
            throw domain_error("harvest_dc: p_rf must be finite and nonnegative");
        double lin = m.eta * std::max(p_rf - m.p_sens, 0.0);
        return std::min(lin, m.p_sat);
    }

    inline double harvest_dc(const SigmoidModel &m, double p_rf)
    {
        validate(m);
        if (!(p_rf >= 0.0) || !std::isfinite(p_rf))
            throw domain_error("harvest_dc: p_rf must be finite and nonnegative");
        // Normalized logistic: [Psi(p) - p_sat*Omega] / (1 - Omega) with
        // Psi(p) = p_sat / (1 + exp(-a(p - b))) and Omega = 1/(1 + exp(a*b)).
        // Both exponentials saturate gracefully: overflow yields inf and a
        // zero quotient, never NaN, and the p = 0 terms cancel exactly.
        double omega = 1.0 / (1.0 + std::exp(m.a * m.b));
        double psi = m.p_sat / (1.0 + std::exp(-m.a * (p_rf - m.b)));
        return (psi - m.p_sat * omega) / (1.0 - omega);
    }

    inline double harvest_dc(const DiodePolynomialModel &, double)
    {
        throw unsupported_error(
            "harvest_dc: DiodePolynomial needs a waveform; use harvest_dc_waveform");
    }

    // Average-power transfer function. The diode variant is rejected because
    // its output depends on the waveform shape, not only its power.
    inline double harvest_dc(const RectennaModel &model, double p_rf)
    {
        return std::visit([p_rf](const auto &m) { return harvest_dc(m, p_rf); }, model);
    }

    // Diode DC output from time-domain samples (unit sqrt(W)) spanning an
    // integer number of signal periods: k2*M2 + k4*M4.
    inline double harvest_dc_waveform(const DiodePolynomialModel &m,
                                      std::span<const double> samples)
    {
        validate(m);
        if (samples.size() < 2)
            throw domain_error("harvest_dc_waveform: need at least two samples");
        double m2 = 0.0;
        double m4 = 0.0;
        for (double y : samples)
        {
            double y2 = y * y;
            m2 += y2;
            m4 += y2 * y2;
        }
        double n = static_cast<double>(samples.size());
        return m.k2 * (m2 / n) + m.k4 * (m4 / n);
    }

    inline double harvest_dc_waveform(const RectennaModel &model,
                                      std::span<const double> samples)
    {
        if (const auto *diode = std::get_if<DiodePolynomialModel>(&model))
            return harvest_dc_waveform(*diode, samples);
        throw unsupported_error("harvest_dc_waveform: only the DiodePolynomial variant "
                                "consumes waveforms");
    }

} // namespace wipt

#endif
