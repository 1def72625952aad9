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
// Multitone waveform tests: synthesis invariants, PAPR of coherent tones,
// diode harvest as the tone count grows, and integrity of information
// subcarriers multiplexed next to energy tones.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <wipt/rectenna.hpp>
#include <wipt/waveform.hpp>

using namespace wipt;

namespace
{
    double avg_power(const std::vector<double> &y)
    {
        double p = 0.0;
        for (double v : y)
            p += v * v;
        return p / double(y.size());
    }
}

TEST_CASE("multitone construction and validation", "[waveform]")
{
    auto w = make_multitone(4, 2.0);
    REQUIRE(w.tone_indices == std::vector<std::size_t>{1, 2, 3, 4});
    for (double a : w.amplitudes)
        CHECK(a == Catch::Approx(1.0).epsilon(1e-14)); // sqrt(2*2/4)
    for (double ph : w.phases)
        CHECK(ph == 0.0);

    CHECK_THROWS_AS(make_multitone(0, 1.0), domain_error);
    CHECK_THROWS_AS(make_multitone(2, 0.0), domain_error);
    std::vector<std::size_t> dc{0, 1};
    CHECK_THROWS_AS(make_multitone(2, 1.0, dc), domain_error);
    std::vector<std::size_t> dup{3, 3};
    CHECK_THROWS_AS(make_multitone(2, 1.0, dup), domain_error);

    MultitoneWaveform broken = w;
    broken.total_power = 1.0; // amplitudes no longer consistent
    CHECK_THROWS_AS(validate(broken), domain_error);
}

TEST_CASE("synthesis conserves power and periodicity", "[waveform]")
{
    auto w = make_multitone(4, 1.7);
    auto one = synthesize(w, 64, 64);
    CHECK(avg_power(one) == Catch::Approx(1.7).epsilon(1e-12));

    // Two rendered periods are bitwise copies of each other.
    auto two = synthesize(w, 128, 64);
    for (std::size_t j = 0; j < 64; ++j)
        CHECK(two[j] == two[j + 64]);

    // Random phases keep the power (orthogonality on the grid).
    std::vector<double> phases{0.3, -1.2, 2.7, 0.9};
    auto wp = make_multitone(4, 1.7, {}, phases);
    CHECK(avg_power(synthesize(wp, 64, 64)) == Catch::Approx(1.7).epsilon(1e-12));

    CHECK_THROWS_AS(synthesize(w, 100, 64), domain_error); // fractional period
    CHECK_THROWS_AS(synthesize(w, 16, 16), domain_error);  // below 8x highest tone
    CHECK_THROWS_AS(synthesize(w, 0, 0), domain_error);
}

TEST_CASE("coherent PAPR is twice the tone count", "[waveform]")
{
    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(4), std::size_t(8)})
    {
        auto w = make_multitone(n, 1.0);
        CHECK(papr(w) == Catch::Approx(2.0 * double(n)).margin(1e-9));

        // The numeric scan agrees: the coherent peak sits exactly on the
        // sampling grid at t = 0.
        auto y = synthesize(w, 64 * n, 64 * n);
        double peak = 0.0;
        for (double v : y)
            peak = std::max(peak, v * v);
        CHECK(peak / avg_power(y) == Catch::Approx(2.0 * double(n)).margin(1e-9));
    }
}

TEST_CASE("phase scrambling cannot exceed the coherent PAPR", "[waveform]")
{
    std::vector<double> phases{1.0, 2.2, -0.7, 0.4};
    auto w = make_multitone(4, 1.0, {}, phases);
    double v = papr(w);
    CHECK(v > 1.0);
    CHECK(v < 8.0); // strictly below the coherent maximum for these phases
}

TEST_CASE("diode harvest grows with coherent tone count", "[waveform]")
{
    // Frozen moment values for equal-amplitude zero-phase tones at unit
    // power: M2 = 1, M4 = 3/2, 9/4, 37/8, 157/16 for N = 1, 2, 4, 8.
    DiodePolynomialModel diode{1.0, 1.0};
    const double expect[] = {2.5, 3.25, 5.625, 10.8125};
    const std::size_t ns[] = {1, 2, 4, 8};
    double prev = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        auto w = make_multitone(ns[i], 1.0);
        double h = harvest_multitone(w, diode);
        CHECK(h == Catch::Approx(expect[i]).margin(1e-9));
        CHECK(h > prev);
        prev = h;
    }

    // k4 = 0 removes the waveform dependence entirely.
    DiodePolynomialModel sq{1.0, 0.0};
    for (std::size_t n : {std::size_t(1), std::size_t(4), std::size_t(8)})
        CHECK(harvest_multitone(make_multitone(n, 1.0), sq) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("harvest is sample-rate independent once alias-free", "[waveform]")
{
    DiodePolynomialModel diode{1.0, 1.0};
    auto w = make_multitone(8, 1.0);
    auto coarse = synthesize(w, 64, 64);   // 8x the highest tone
    auto fine = synthesize(w, 512, 512);
    CHECK(harvest_dc_waveform(diode, coarse) ==
          Catch::Approx(harvest_dc_waveform(diode, fine)).margin(1e-9));
}

TEST_CASE("composite carries clean symbols next to energy tones", "[waveform]")
{
    std::vector<std::size_t> info{1, 2, 3, 4};
    std::vector<std::size_t> energy{5, 6, 7, 8};
    auto tones = make_multitone(4, 1.0, energy);
    auto c = make_composite(info, 4, tones, 64, 123);

    // Demodulating the composite returns the transmitted symbols exactly
    // (up to roundoff): the energy tones are orthogonal on the grid.
    auto y = synthesize(c);
    auto symbols = demodulate(y, c.info_bins, c.samples_per_symbol, c.symbol_count);
    REQUIRE(symbols.size() == c.info_symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        CHECK(std::abs(symbols[i] - c.info_symbols[i]) < 1e-12);

    auto rep = info_integrity_check(c);
    CHECK(rep.max_symbol_error < 1e-9);
    CHECK(rep.harvested > 0.0);

    // The energy tones raise the harvest above the information-only signal.
    CompositeSignal info_only = c;
    info_only.energy_tones = MultitoneWaveform{};
    DiodePolynomialModel diode{1.0, 1.0};
    double base = harvest_dc_waveform(diode, synthesize(info_only));
    CHECK(rep.harvested > base);
}

TEST_CASE("composite symbols are unit-energy quaternary and seeded", "[waveform]")
{
    std::vector<std::size_t> info{1, 2};
    auto tones = make_multitone(2, 0.5, std::vector<std::size_t>{3, 4});
    auto a = make_composite(info, 8, tones, 64, 9);
    auto b = make_composite(info, 8, tones, 64, 9);
    auto other = make_composite(info, 8, tones, 64, 10);

    REQUIRE(a.info_symbols.size() == 16);
    bool any_diff = false;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t i = 0; i < a.info_symbols.size(); ++i)
    {
        CHECK(std::abs(a.info_symbols[i]) == Catch::Approx(1.0).epsilon(1e-14));
        CHECK(std::fabs(std::fabs(a.info_symbols[i].real()) - r) < 1e-15);
        CHECK(a.info_symbols[i] == b.info_symbols[i]);
        if (a.info_symbols[i] != other.info_symbols[i])
            any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("composite validation rejects collisions and undersampling", "[waveform]")
{
    std::vector<std::size_t> info{1, 2, 3};
    auto tones = make_multitone(2, 1.0, std::vector<std::size_t>{3, 5});
    CHECK_THROWS_AS(make_composite(info, 2, tones, 64, 1), domain_error); // bin 3 collides

    auto ok_tones = make_multitone(2, 1.0, std::vector<std::size_t>{4, 5});
    CHECK_NOTHROW(make_composite(info, 2, ok_tones, 64, 1));
    CHECK_THROWS_AS(make_composite(info, 2, ok_tones, 32, 1), domain_error); // 32 < 8*5
    std::vector<std::size_t> with_dc{0, 1};
    CHECK_THROWS_AS(make_composite(with_dc, 2, ok_tones, 64, 1), domain_error);
}

TEST_CASE("demodulation validates its framing", "[waveform]")
{
    std::vector<double> samples(128, 0.0);
    std::vector<std::size_t> bins{1};
    CHECK_THROWS_AS(demodulate(samples, bins, 100, 2), domain_error);
    CHECK_THROWS_AS(demodulate(samples, bins, 0, 2), domain_error);
    CHECK_NOTHROW(demodulate(samples, bins, 64, 2));
}
