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
// Multitone waveforms on a uniform subcarrier grid, with optional
// information subcarriers sharing the same grid on disjoint indices.
// Sampling is always an integer number of fundamental periods at a rate
// of at least 8x the highest tone, which keeps subcarrier orthogonality
// and the 2nd/4th moment averages exact on the discrete grid.

#ifndef WIPT_WAVEFORM_HPP
#define WIPT_WAVEFORM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rectenna.hpp"
#include "rng.hpp"

namespace wipt
{
    // N-tone real signal: y(t) = sum_k a_k cos(2*pi*idx_k*t/T + phi_k) with
    // distinct indices on the subcarrier grid. Average power is
    // sum a_k^2 / 2 and must equal total_power.
    struct MultitoneWaveform
    {
        std::vector<std::size_t> tone_indices;
        std::vector<double> amplitudes; // sqrt(W)
        std::vector<double> phases;     // radians
        double total_power = 0.0;       // W
    };

    inline void validate(const MultitoneWaveform &w)
    {
        if (w.tone_indices.empty())
            throw domain_error("MultitoneWaveform: need at least one tone");
        if (w.amplitudes.size() != w.tone_indices.size() ||
            w.phases.size() != w.tone_indices.size())
            throw domain_error("MultitoneWaveform: indices, amplitudes, phases must align");
        for (std::size_t i = 0; i < w.tone_indices.size(); ++i)
        {
            if (w.tone_indices[i] == 0)
                throw domain_error("MultitoneWaveform: tone index 0 (DC) not allowed");
            for (std::size_t j = i + 1; j < w.tone_indices.size(); ++j)
                if (w.tone_indices[i] == w.tone_indices[j])
                    throw domain_error("MultitoneWaveform: tone indices must be distinct");
            if (!(w.amplitudes[i] >= 0.0) || !std::isfinite(w.amplitudes[i]))
                throw domain_error("MultitoneWaveform: amplitudes must be finite and >= 0");
            if (!std::isfinite(w.phases[i]))
                throw domain_error("MultitoneWaveform: phases must be finite");
        }
        double p = 0.0;
        for (double a : w.amplitudes)
            p += 0.5 * a * a;
        if (std::fabs(p - w.total_power) > 1e-12 * std::max(1.0, std::fabs(w.total_power)))
            throw domain_error("MultitoneWaveform: per-tone powers do not sum to total_power");
    }

    // Equal-amplitude multitone of total power p on the given indices
    // (defaults to 1..n) with the given phases (defaults to all-zero, the
    // coherent maximum-PAPR choice).
    inline MultitoneWaveform make_multitone(std::size_t n_tones, double p,
                                            std::span<const std::size_t> indices = {},
                                            std::span<const double> phases = {})
    {
        if (n_tones == 0)
            throw domain_error("make_multitone: need at least one tone");
        if (!(p > 0.0) || !std::isfinite(p))
            throw domain_error("make_multitone: total power must be positive");
        if (!indices.empty() && indices.size() != n_tones)
            throw domain_error("make_multitone: index list length must equal n_tones");
        if (!phases.empty() && phases.size() != n_tones)
            throw domain_error("make_multitone: phase list length must equal n_tones");

        MultitoneWaveform w;
        w.total_power = p;
        w.tone_indices.resize(n_tones);
        w.amplitudes.assign(n_tones, std::sqrt(2.0 * p / static_cast<double>(n_tones)));
        w.phases.assign(n_tones, 0.0);
        for (std::size_t i = 0; i < n_tones; ++i)
            w.tone_indices[i] = indices.empty() ? i + 1 : indices[i];
        if (!phases.empty())
            w.phases.assign(phases.begin(), phases.end());
        validate(w);
        return w;
    }

    namespace detail
    {
        inline std::size_t max_tone_index(const MultitoneWaveform &w)
        {
            return *std::max_element(w.tone_indices.begin(), w.tone_indices.end());
        }

        // Smallest power of two >= 8 * highest index: alias-free up to the
        // 4th moment and exactly orthogonal on the grid.
        inline std::size_t default_samples_per_period(std::size_t max_index)
        {
            std::size_t need = 8 * max_index;
            std::size_t s = 16;
            while (s < need)
                s *= 2;
            return s;
        }
    } // namespace detail

    // Render n_samples covering n_samples/samples_per_period fundamental
    // periods. samples_per_period = 0 treats the whole buffer as a single
    // period. Sampling below 8x the highest tone or a non-integer period
    // count is rejected rather than silently aliasing.
    inline std::vector<double> synthesize(const MultitoneWaveform &w, std::size_t n_samples,
                                          std::size_t samples_per_period = 0)
    {
        validate(w);
        std::size_t spp = samples_per_period == 0 ? n_samples : samples_per_period;
        if (spp == 0 || n_samples == 0)
            throw domain_error("synthesize: need a positive sample count");
        if (n_samples % spp != 0)
            throw domain_error("synthesize: sample count must cover an integer number of periods");
        if (spp < 8 * detail::max_tone_index(w))
            throw domain_error("synthesize: sample rate below 8x the highest tone");

        std::vector<double> y(n_samples, 0.0);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(spp);
        for (std::size_t j = 0; j < n_samples; ++j)
        {
            // j reduced modulo the period keeps the phase argument small and
            // the rendered periods bitwise identical.
            double t = step * static_cast<double>(j % spp);
            double v = 0.0;
            for (std::size_t k = 0; k < w.tone_indices.size(); ++k)
                v += w.amplitudes[k] *
                     std::cos(static_cast<double>(w.tone_indices[k]) * t + w.phases[k]);
            y[j] = v;
        }
        return y;
    }

    // Peak-to-average power ratio. Equal-amplitude zero-phase multisines hit
    // the coherent maximum 2N, returned analytically; any other
    // configuration is scanned numerically over one period.
    inline double papr(const MultitoneWaveform &w)
    {
        validate(w);
        bool coherent_equal = true;
        for (std::size_t k = 0; k < w.tone_indices.size(); ++k)
            if (w.phases[k] != 0.0 || w.amplitudes[k] != w.amplitudes[0])
                coherent_equal = false;
        if (coherent_equal)
            return 2.0 * static_cast<double>(w.tone_indices.size());

        std::size_t spp = 1024 * detail::max_tone_index(w);
        std::vector<double> y = synthesize(w, spp, spp);
        double peak = 0.0;
        double avg = 0.0;
        for (double v : y)
        {
            peak = std::max(peak, v * v);
            avg += v * v;
        }
        avg /= static_cast<double>(y.size());
        return peak / avg;
    }

    // Diode DC output of the waveform, evaluated on one exactly sampled
    // period so the moment averages carry no leakage error.
    inline double harvest_multitone(const MultitoneWaveform &w, const DiodePolynomialModel &diode)
    {
        validate(w);
        validate(diode);
        std::size_t spp = detail::default_samples_per_period(detail::max_tone_index(w));
        std::vector<double> y = synthesize(w, spp, spp);
        return harvest_dc_waveform(diode, y);
    }

    // Information subcarriers plus energy tones on one subcarrier grid.
    // info_symbols is symbol-major: symbol s of subcarrier k sits at
    // [s * info_bins.size() + k]. Unit-energy symbols give unit average
    // power per information subcarrier.
    struct CompositeSignal
    {
        std::vector<std::size_t> info_bins;
        std::vector<std::complex<double>> info_symbols;
        MultitoneWaveform energy_tones;
        std::size_t samples_per_symbol = 0;
        std::size_t symbol_count = 0;
    };

    inline void validate(const CompositeSignal &c)
    {
        if (c.info_bins.empty())
            throw domain_error("CompositeSignal: need at least one information subcarrier");
        if (c.symbol_count == 0)
            throw domain_error("CompositeSignal: need at least one symbol");
        if (c.info_symbols.size() != c.info_bins.size() * c.symbol_count)
            throw domain_error("CompositeSignal: symbol buffer must be bins x symbols");
        std::size_t max_idx = 0;
        for (std::size_t i = 0; i < c.info_bins.size(); ++i)
        {
            if (c.info_bins[i] == 0)
                throw domain_error("CompositeSignal: subcarrier index 0 (DC) not allowed");
            max_idx = std::max(max_idx, c.info_bins[i]);
            for (std::size_t j = i + 1; j < c.info_bins.size(); ++j)
                if (c.info_bins[i] == c.info_bins[j])
                    throw domain_error("CompositeSignal: information subcarriers must be distinct");
        }
        if (!c.energy_tones.tone_indices.empty())
        {
            validate(c.energy_tones);
            for (std::size_t e : c.energy_tones.tone_indices)
            {
                max_idx = std::max(max_idx, e);
                for (std::size_t b : c.info_bins)
                    if (e == b)
                        throw domain_error("CompositeSignal: information and energy subcarriers overlap");
            }
        }
        if (c.samples_per_symbol < 8 * max_idx)
            throw domain_error("CompositeSignal: samples_per_symbol below 8x the highest subcarrier");
    }

    // Random unit-energy quaternary symbols on the information subcarriers,
    // deterministic in the seed.
    inline CompositeSignal make_composite(std::span<const std::size_t> info_bins,
                                          std::size_t symbol_count,
                                          const MultitoneWaveform &energy_tones,
                                          std::size_t samples_per_symbol,
                                          std::uint64_t seed)
    {
        CompositeSignal c;
        c.info_bins.assign(info_bins.begin(), info_bins.end());
        c.energy_tones = energy_tones;
        c.samples_per_symbol = samples_per_symbol;
        c.symbol_count = symbol_count;
        c.info_symbols.resize(info_bins.size() * symbol_count);
        const double r = std::numbers::sqrt2 / 2.0;
        SubstreamRng rng(seed, 0);
        for (auto &s : c.info_symbols)
        {
            std::uint64_t q = rng.next_u64() & 3u;
            s = {q & 1u ? -r : r, q & 2u ? -r : r};
        }
        validate(c);
        return c;
    }

    // Render the composite: one fundamental period per information symbol,
    // energy tones continuing coherently across symbol boundaries.
    inline std::vector<double> synthesize(const CompositeSignal &c)
    {
        validate(c);
        const std::size_t spp = c.samples_per_symbol;
        const std::size_t nbins = c.info_bins.size();
        std::vector<double> y(spp * c.symbol_count, 0.0);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(spp);
        const bool has_energy = !c.energy_tones.tone_indices.empty();
        for (std::size_t s = 0; s < c.symbol_count; ++s)
        {
            for (std::size_t j = 0; j < spp; ++j)
            {
                double t = step * static_cast<double>(j);
                double v = 0.0;
                for (std::size_t k = 0; k < nbins; ++k)
                {
                    std::complex<double> sym = c.info_symbols[s * nbins + k];
                    double arg = static_cast<double>(c.info_bins[k]) * t;
                    v += std::numbers::sqrt2 *
                         (sym.real() * std::cos(arg) - sym.imag() * std::sin(arg));
                }
                if (has_energy)
                    for (std::size_t k = 0; k < c.energy_tones.tone_indices.size(); ++k)
                        v += c.energy_tones.amplitudes[k] *
                             std::cos(static_cast<double>(c.energy_tones.tone_indices[k]) * t +
                                      c.energy_tones.phases[k]);
                y[s * spp + j] = v;
            }
        }
        return y;
    }

    // Matched-filter demodulation of the listed subcarriers, one complex
    // symbol per subcarrier per symbol period. Exact on the sampling grid.
    inline std::vector<std::complex<double>> demodulate(std::span<const double> samples,
                                                        std::span<const std::size_t> bins,
                                                        std::size_t samples_per_symbol,
                                                        std::size_t symbol_count)
    {
        if (samples_per_symbol == 0 || symbol_count == 0 ||
            samples.size() != samples_per_symbol * symbol_count)
            throw domain_error("demodulate: sample count must equal symbols x samples_per_symbol");
        std::vector<std::complex<double>> out(bins.size() * symbol_count);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(samples_per_symbol);
        const double norm = 2.0 / static_cast<double>(samples_per_symbol);
        for (std::size_t s = 0; s < symbol_count; ++s)
        {
            for (std::size_t k = 0; k < bins.size(); ++k)
            {
                double re = 0.0;
                double im = 0.0;
                for (std::size_t j = 0; j < samples_per_symbol; ++j)
                {
                    double arg = static_cast<double>(bins[k]) * step * static_cast<double>(j);
                    double v = samples[s * samples_per_symbol + j];
                    re += v * std::cos(arg);
                    im += v * std::sin(arg);
                }
                out[s * bins.size() + k] = {norm * re / std::numbers::sqrt2,
                                            -norm * im / std::numbers::sqrt2};
            }
        }
        return out;
    }

    struct IntegrityReport
    {
        double max_symbol_error = 0.0; // complex magnitude
        double harvested = 0.0;        // W, diode output on the composite
    };

    // Demodulates the information subcarriers from the composite signal and
    // from an information-only copy; grid orthogonality makes the difference
    // vanish to numerical precision. Also reports diode harvest on the
    // composite.
    inline IntegrityReport info_integrity_check(const CompositeSignal &c,
                                                const DiodePolynomialModel &diode = {1.0, 1.0})
    {
        validate(c);
        std::vector<double> with_energy = synthesize(c);

        CompositeSignal info_only = c;
        info_only.energy_tones = MultitoneWaveform{};
        std::vector<double> without_energy = synthesize(info_only);

        auto sym_full = demodulate(with_energy, c.info_bins, c.samples_per_symbol, c.symbol_count);
        auto sym_info = demodulate(without_energy, c.info_bins, c.samples_per_symbol, c.symbol_count);

        IntegrityReport rep;
        for (std::size_t i = 0; i < sym_full.size(); ++i)
            rep.max_symbol_error = std::max(rep.max_symbol_error,
                                            std::abs(sym_full[i] - sym_info[i]));
        rep.harvested = harvest_dc_waveform(diode, with_energy);
        return rep;
    }

} // namespace wipt

#endif
