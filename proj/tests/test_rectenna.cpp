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
// Harvesting model tests: worked transfer values, waveform moments for the
// diode family, and the monotonicity/saturation properties every family
// must satisfy.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <wipt/rectenna.hpp>
#include <wipt/rng.hpp>

using namespace wipt;

TEST_CASE("linear model is proportional", "[rectenna]")
{
    LinearModel m{0.6};
    CHECK(harvest_dc(m, 0.0) == 0.0);
    CHECK(harvest_dc(m, 0.7) == Catch::Approx(0.42).epsilon(1e-14));
    CHECK(harvest_dc(m, 2.0) == Catch::Approx(1.2).epsilon(1e-14));

    // Scaling property harvest(a*p) = a*harvest(p), checked on random draws.
    SubstreamRng rng(42, 0);
    for (int i = 0; i < 100; ++i)
    {
        double p = 4.0 * rng.uniform();
        double a = 3.0 * rng.uniform();
        CHECK(harvest_dc(m, a * p) == Catch::Approx(a * harvest_dc(m, p)).margin(1e-13));
    }
}

TEST_CASE("piecewise linear model thresholds and saturates", "[rectenna]")
{
    PiecewiseLinearModel m; // eta 0.5, p_sens 0.1, p_sat 0.2
    CHECK(harvest_dc(m, 0.0) == 0.0);
    CHECK(harvest_dc(m, 0.05) == 0.0);          // below sensitivity
    CHECK(harvest_dc(m, 0.1) == 0.0);           // exactly at threshold
    CHECK(harvest_dc(m, 0.3) == Catch::Approx(0.1).epsilon(1e-14));
    CHECK(harvest_dc(m, 0.5) == Catch::Approx(0.2).epsilon(1e-14)); // saturated
    CHECK(harvest_dc(m, 100.0) == 0.2);

    // Output never exceeds the saturation level.
    for (double p = 0.0; p <= 5.0; p += 0.01)
        CHECK(harvest_dc(m, p) <= m.p_sat + 1e-15);
}

TEST_CASE("sigmoid model is normalized and saturates", "[rectenna]")
{
    SigmoidModel m{1.0, 1.0, 1.0};
    // Exactly zero at zero input: the normalization subtracts the logistic
    // offset with the same expression that produced it.
    CHECK(harvest_dc(m, 0.0) == 0.0);
    // Worked value at the inflection point, frozen from the closed form
    // (Psi(1) - p_sat*Omega) / (1 - Omega) with Omega = 1/(1+e).
    CHECK(harvest_dc(m, 1.0) == Catch::Approx(0.31606027941427883).epsilon(1e-14));
    // Saturation from above and monotone approach.
    CHECK(harvest_dc(m, 40.0) == Catch::Approx(1.0).margin(1e-12));
    CHECK(harvest_dc(m, 1e6) <= m.p_sat + 1e-12);

    // Strictly increasing on a fine grid.
    double prev = harvest_dc(m, 0.0);
    for (double p = 0.01; p <= 10.0; p += 0.01)
    {
        double cur = harvest_dc(m, p);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("all average-power models are nondecreasing in input power", "[rectenna]")
{
    std::vector<RectennaModel> models = {
        LinearModel{0.8},
        PiecewiseLinearModel{0.7, 0.05, 0.3},
        SigmoidModel{2.0, 3.0, 0.5},
    };
    SubstreamRng rng(7, 1);
    for (const RectennaModel &m : models)
    {
        for (int i = 0; i < 200; ++i)
        {
            double p1 = 5.0 * rng.uniform();
            double p2 = p1 + 5.0 * rng.uniform();
            CHECK(harvest_dc(m, p2) >= harvest_dc(m, p1) - 1e-15);
        }
        CHECK(harvest_dc(m, 0.0) == 0.0);
    }
}

TEST_CASE("diode polynomial needs a waveform", "[rectenna]")
{
    DiodePolynomialModel diode{1.0, 1.0};
    CHECK_THROWS_AS(harvest_dc(diode, 1.0), unsupported_error);
    CHECK_THROWS_AS(harvest_dc(RectennaModel{diode}, 1.0), unsupported_error);
    // And the waveform path rejects every other family.
    std::vector<double> y(16, 0.5);
    CHECK_THROWS_AS(harvest_dc_waveform(RectennaModel{LinearModel{}}, y), unsupported_error);
    CHECK_THROWS_AS(harvest_dc_waveform(RectennaModel{SigmoidModel{}}, y), unsupported_error);
}

TEST_CASE("diode moments on a single tone", "[rectenna]")
{
    // y(t) = sqrt(2) cos(t) has average power 1 and fourth moment 3/2, so
    // k2 = k4 = 1 gives DC output 2.5.
    DiodePolynomialModel diode{1.0, 1.0};
    const std::size_t n = 64;
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j)
        y[j] = std::numbers::sqrt2 * std::cos(2.0 * std::numbers::pi * double(j) / double(n));
    CHECK(harvest_dc_waveform(diode, y) == Catch::Approx(2.5).epsilon(1e-12));

    // k4 = 0 reduces to k2 times the average power.
    DiodePolynomialModel sq{0.7, 0.0};
    CHECK(harvest_dc_waveform(sq, y) == Catch::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("diode output scales as amplitude moments", "[rectenna]")
{
    // Scaling samples by c scales M2 by c^2 and M4 by c^4.
    DiodePolynomialModel diode{0.9, 1.3};
    SubstreamRng rng(11, 2);
    std::vector<double> y(128);
    for (double &v : y)
        v = 2.0 * rng.uniform() - 1.0;
    double base2 = 0.0, base4 = 0.0;
    for (double v : y)
    {
        base2 += v * v;
        base4 += v * v * v * v;
    }
    base2 /= double(y.size());
    base4 /= double(y.size());
    for (double c : {0.5, 1.0, 2.0, 3.0})
    {
        std::vector<double> z = y;
        for (double &v : z)
            v *= c;
        double expect = diode.k2 * c * c * base2 + diode.k4 * c * c * c * c * base4;
        CHECK(harvest_dc_waveform(diode, z) == Catch::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation rejects bad models", "[rectenna]")
{
    CHECK_THROWS_AS(validate(LinearModel{0.0}), domain_error);
    CHECK_THROWS_AS(validate(LinearModel{1.5}), domain_error);
    CHECK_THROWS_AS(validate(LinearModel{-0.2}), domain_error);
    // Sensitivity threshold must leave room below saturation.
    CHECK_THROWS_AS(validate(PiecewiseLinearModel{0.5, 0.5, 0.2}), domain_error);
    CHECK_THROWS_AS(validate(PiecewiseLinearModel{0.5, -0.1, 0.2}), domain_error);
    CHECK_THROWS_AS(validate(PiecewiseLinearModel{1.2, 0.1, 0.2}), domain_error);
    CHECK_THROWS_AS(validate(SigmoidModel{0.0, 1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(validate(SigmoidModel{1.0, -1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(validate(SigmoidModel{1.0, 1.0, 0.0}), domain_error);
    CHECK_THROWS_AS(validate(DiodePolynomialModel{-1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(validate(DiodePolynomialModel{1.0, -1.0}), domain_error);
    CHECK_THROWS_AS(validate(PiecewiseLinearModel{1.0, 0.0, 0.2}), domain_error);
    CHECK_NOTHROW(validate(PiecewiseLinearModel{1.0, 0.01, 0.2}));
    CHECK_NOTHROW(validate(DiodePolynomialModel{0.0, 0.0})); // degenerate but legal
}

TEST_CASE("negative or non-finite input power is rejected", "[rectenna]")
{
    CHECK_THROWS_AS(harvest_dc(LinearModel{}, -0.1), domain_error);
    CHECK_THROWS_AS(harvest_dc(PiecewiseLinearModel{}, -1.0), domain_error);
    CHECK_THROWS_AS(harvest_dc(SigmoidModel{}, -1e-9), domain_error);
    CHECK_THROWS_AS(harvest_dc(LinearModel{}, std::nan("")), domain_error);
    CHECK_THROWS_AS(harvest_dc(SigmoidModel{}, std::numeric_limits<double>::infinity()),
                    domain_error);
}

TEST_CASE("waveform path needs at least two samples", "[rectenna]")
{
    DiodePolynomialModel diode;
    std::vector<double> empty;
    std::vector<double> one{1.0};
    CHECK_THROWS_AS(harvest_dc_waveform(diode, empty), domain_error);
    CHECK_THROWS_AS(harvest_dc_waveform(diode, one), domain_error);
}
