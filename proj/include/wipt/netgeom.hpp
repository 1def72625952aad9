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
// Bipolar Poisson network engine. Transmitters form a PPP of density
// lambda; the typical receiver sits at the origin with its serving
// transmitter at distance d (Slivnyak conditioning), interferers fall on
// the annulus [r0, sim_radius], and every link fades independently with a
// unit-mean exponential power gain. Receivers split power: fraction rho
// feeds the decoder, 1-rho the harvester. SIC removes the strongest
// interferer in the digital domain only, so harvested power never changes.
//
// Determinism contract: realization i is generated from substream i of the
// master seed and reductions run in index order, so results are bit-equal
// for any worker count. Link statistics are stored per unit transmit
// power, which lets one simulation serve a whole transmit-power sweep
// under common random numbers.

#ifndef WIPT_NETGEOM_HPP
#define WIPT_NETGEOM_HPP

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"
#include "rng.hpp"

namespace wipt
{
    struct NetworkConfig
    {
        double lambda = 1e-3;      // transmitter density, 1/m^2
        double d = 10.0;           // serving-link distance, m
        double P = 1.0;            // transmit power, W
        double alpha = 4.0;        // path-loss exponent, > 2
        double rho = 0.5;          // information fraction in [0, 1]
        double theta = 1.0;        // SINR decoding threshold
        double sigma_n2 = 1e-8;    // antenna noise variance, W
        double sigma_c2 = 1e-3;    // conversion noise variance, W
        double eta = 1.0;          // harvest efficiency in (0, 1]
        bool sic_enabled = false;
        double sim_radius = 200.0; // interferer disc truncation, m
        double r0 = 1.0;           // interferer exclusion radius, m
        std::size_t n_realizations = 100000;
        std::uint64_t master_seed = 1;
        unsigned n_workers = 0;            // 0 = hardware concurrency
        std::size_t min_covered_samples = 25; // estimator-validity floor for adaptation
    };

    // Share of the mean interference contributed by transmitters beyond
    // sim_radius, relative to the untruncated plane with the same exclusion
    // radius. Only defined for r0 > 0.
    inline double interference_truncation_fraction(const NetworkConfig &c)
    {
        if (!(c.r0 > 0.0))
            throw domain_error("interference_truncation_fraction: requires r0 > 0");
        return std::pow(c.sim_radius / c.r0, 2.0 - c.alpha);
    }

    inline void validate(const NetworkConfig &c)
    {
        if (!(c.alpha > 2.0))
            throw domain_error("NetworkConfig: alpha must exceed 2");
        if (!(c.lambda >= 0.0) || !std::isfinite(c.lambda))
            throw domain_error("NetworkConfig: lambda must be finite and nonnegative");
        if (!(c.d > 0.0) || !(c.P > 0.0))
            throw domain_error("NetworkConfig: d and P must be positive");
        if (!(c.rho >= 0.0 && c.rho <= 1.0))
            throw domain_error("NetworkConfig: rho must lie in [0, 1]");
        if (!(c.theta >= 0.0))
            throw domain_error("NetworkConfig: theta must be nonnegative");
        if (!(c.sigma_n2 >= 0.0) || !(c.sigma_c2 >= 0.0))
            throw domain_error("NetworkConfig: noise variances must be nonnegative");
        if (!(c.eta > 0.0 && c.eta <= 1.0))
            throw domain_error("NetworkConfig: eta must lie in (0, 1]");
        if (!(c.r0 >= 0.0) || !(c.sim_radius > c.r0))
            throw domain_error("NetworkConfig: need 0 <= r0 < sim_radius");
        if (c.n_realizations == 0)
            throw domain_error("NetworkConfig: need at least one realization");
        double mean_count = c.lambda * std::numbers::pi *
                            (c.sim_radius * c.sim_radius - c.r0 * c.r0);
        if (!(mean_count < 1e7))
            throw domain_error("NetworkConfig: mean interferer count exceeds 1e7; "
                               "reduce lambda or sim_radius");
        // With an exclusion radius the truncated share of the mean
        // interference must stay below 0.1%; r0 = 0 has unbounded mean
        // interference and is reserved for the interference-limited oracle.
        if (c.r0 > 0.0 && !(interference_truncation_fraction(c) < 1e-3))
            throw domain_error("NetworkConfig: sim_radius too small; truncated "
                               "interference exceeds 0.1% of the mean");
    }

    struct Interferer
    {
        double distance = 0.0;
        double fade = 0.0; // |h|^2, unit-mean exponential
    };

    struct NetworkRealization
    {
        double serving_fade = 0.0;
        std::vector<Interferer> interferers;
        std::uint64_t substream = 0;
    };

    // One network snapshot from the given substream. Draw order is fixed
    // (serving fade, count, then per interferer distance and fade) so the
    // realization is a pure function of (config geometry, seed, substream).
    inline NetworkRealization sample_realization(const NetworkConfig &c, std::uint64_t substream)
    {
        SubstreamRng rng(c.master_seed, substream);
        NetworkRealization r;
        r.substream = substream;
        r.serving_fade = rng.exponential();
        double area = std::numbers::pi * (c.sim_radius * c.sim_radius - c.r0 * c.r0);
        std::size_t count = rng.poisson(c.lambda * area);
        r.interferers.resize(count);
        for (std::size_t i = 0; i < count; ++i)
        {
            // Uniform point on the annulus: r = sqrt(r0^2 + U*(R^2 - r0^2)).
            double u = rng.uniform();
            r.interferers[i].distance =
                std::sqrt(c.r0 * c.r0 + u * (c.sim_radius * c.sim_radius - c.r0 * c.r0));
            r.interferers[i].fade = rng.exponential();
        }
        return r;
    }

    // Received powers per unit transmit power: serving-link power, total
    // interference, and the strongest single interferer.
    struct LinkStats
    {
        double serving = 0.0;
        double interference = 0.0;
        double strongest = 0.0;
    };

    inline LinkStats link_stats(const NetworkConfig &c, const NetworkRealization &r)
    {
        LinkStats s;
        s.serving = r.serving_fade * std::pow(c.d, -c.alpha);
        for (const Interferer &i : r.interferers)
        {
            double p = i.fade * std::pow(i.distance, -c.alpha);
            s.interference += p;
            s.strongest = std::max(s.strongest, p);
        }
        return s;
    }

    // Post-split SINR: the splitter scales signal, interference, and antenna
    // noise by rho; conversion noise enters afterwards. SIC subtracts the
    // strongest interferer from the decoder input only.
    inline double sinr_of(const NetworkConfig &c, const LinkStats &s, double rho, bool sic)
    {
        double signal = c.P * s.serving;
        double interf = c.P * (sic ? s.interference - s.strongest : s.interference);
        return rho * signal / (rho * (interf + c.sigma_n2) + c.sigma_c2);
    }

    // Harvested DC: fraction 1-rho of everything the antenna collects,
    // serving signal and interference alike; SIC never changes it.
    inline double harvested_of(const NetworkConfig &c, const LinkStats &s, double rho)
    {
        return (1.0 - rho) * c.eta * c.P * (s.serving + s.interference);
    }

    struct NetworkMetrics
    {
        double coverage_probability = 0.0;
        double coverage_ci = 0.0; // 95% half-width
        double avg_harvested = 0.0;
        double harvested_ci = 0.0;
        std::size_t n_samples = 0;
    };

    // Per-unit-power link statistics for every realization, filled by a
    // deterministic parallel map: fixed-size chunks are claimed atomically,
    // each slot i depends only on substream i, and no worker writes outside
    // its claimed slots.
    inline std::vector<LinkStats> simulate_stats(const NetworkConfig &c)
    {
        validate(c);
        const std::size_t n = c.n_realizations;
        std::vector<LinkStats> stats(n);

        unsigned workers = c.n_workers != 0 ? c.n_workers : std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
        const std::size_t chunk = 4096;

        if (workers == 1 || n <= chunk)
        {
            for (std::size_t i = 0; i < n; ++i)
                stats[i] = link_stats(c, sample_realization(c, i));
            return stats;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        auto work = [&]()
        {
            try
            {
                for (;;)
                {
                    std::size_t begin = next.fetch_add(chunk);
                    if (begin >= n || failed.load())
                        return;
                    std::size_t end = std::min(begin + chunk, n);
                    for (std::size_t i = begin; i < end; ++i)
                        stats[i] = link_stats(c, sample_realization(c, i));
                }
            }
            catch (...)
            {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto &t : pool)
            t.join();
        if (failed.load())
            std::rethrow_exception(failure);
        return stats;
    }

    // Index-ordered reduction of coverage and harvest over precomputed
    // statistics; the (rho, sic) probe is decoupled from the simulation so
    // sweeps and bisections reuse one sample set (common random numbers).
    inline NetworkMetrics metrics_from_stats(const NetworkConfig &c,
                                             std::span<const LinkStats> stats,
                                             double rho, bool sic)
    {
        MeanAccumulator cov;
        MeanAccumulator energy;
        for (const LinkStats &s : stats)
        {
            cov.add(sinr_of(c, s, rho, sic) >= c.theta ? 1.0 : 0.0);
            energy.add(harvested_of(c, s, rho));
        }
        NetworkMetrics m;
        m.coverage_probability = cov.mean();
        m.coverage_ci = cov.ci_halfwidth();
        m.avg_harvested = energy.mean();
        m.harvested_ci = energy.ci_halfwidth();
        m.n_samples = stats.size();
        return m;
    }

    inline NetworkMetrics evaluate(const NetworkConfig &c)
    {
        std::vector<LinkStats> stats = simulate_stats(c);
        return metrics_from_stats(c, stats, c.rho, c.sic_enabled);
    }

    // Closed-form coverage of the interference-limited infinite-plane PPP
    // with Rayleigh fading: exp(-pi*lambda*d^2*theta^(2/alpha)
    // *Gamma(1+2/alpha)*Gamma(1-2/alpha)). The splitting fraction rho scales
    // signal and interference alike, so it cancels.
    inline double analytic_coverage(const NetworkConfig &c)
    {
        if (c.sic_enabled || c.r0 != 0.0 || c.sigma_n2 != 0.0 || c.sigma_c2 != 0.0)
            throw unsupported_error("analytic_coverage: valid only for sic off, r0 = 0, "
                                    "and zero noise (interference-limited)");
        if (!(c.alpha > 2.0) || !(c.lambda >= 0.0) || !(c.d > 0.0) || !(c.theta >= 0.0))
            throw domain_error("analytic_coverage: invalid parameters");
        double two_over_alpha = 2.0 / c.alpha;
        double exponent = std::numbers::pi * c.lambda * c.d * c.d *
                          std::pow(c.theta, two_over_alpha) *
                          std::tgamma(1.0 + two_over_alpha) * std::tgamma(1.0 - two_over_alpha);
        return std::exp(-exponent);
    }

    struct AdaptResult
    {
        double rho_adapted = 0.0;
        NetworkMetrics metrics; // with SIC at rho_adapted
    };

    namespace detail
    {
        inline std::size_t covered_count(const NetworkConfig &c,
                                         std::span<const LinkStats> stats,
                                         double rho, bool sic)
        {
            std::size_t hits = 0;
            for (const LinkStats &s : stats)
                if (sinr_of(c, s, rho, sic) >= c.theta)
                    ++hits;
            return hits;
        }

        // Adaptation core on a shared sample set. Counts (not probabilities)
        // are compared so the common-random-numbers argument is exact.
        inline AdaptResult adapt_rho_with_sic(const NetworkConfig &c,
                                              double rho_baseline,
                                              std::span<const LinkStats> stats)
        {
            if (!(rho_baseline > 0.0 && rho_baseline <= 1.0))
                throw domain_error("adapt_rho_with_sic: rho_baseline must lie in (0, 1]");

            std::size_t target = covered_count(c, stats, rho_baseline, false);
            std::size_t with_sic = covered_count(c, stats, rho_baseline, true);
            if (with_sic < target)
                throw std::logic_error("adapt_rho_with_sic: SIC lowered coverage; "
                                       "per-realization dominance violated");

            AdaptResult out;
            // Too few covered samples make the preserved-coverage target
            // statistically meaningless; SIC gave no slack makes it
            // unreachable below the baseline. Keep the baseline in both cases.
            if (target < c.min_covered_samples || with_sic == target)
            {
                out.rho_adapted = rho_baseline;
                out.metrics = metrics_from_stats(c, stats, rho_baseline, true);
                return out;
            }

            // Coverage is nondecreasing in rho realization-by-realization
            // (sigma_c2 > 0), so the smallest admissible rho is a monotone
            // threshold; 60 bisection steps pin it to 2^-60 of the interval.
            double lo = 0.0;
            double hi = rho_baseline;
            for (int it = 0; it < 60; ++it)
            {
                double mid = 0.5 * (lo + hi);
                if (covered_count(c, stats, mid, true) >= target)
                    hi = mid;
                else
                    lo = mid;
            }
            out.rho_adapted = hi;
            out.metrics = metrics_from_stats(c, stats, hi, true);
            return out;
        }
    } // namespace detail

    // Lower the splitting fraction as far as SIC allows without losing
    // coverage: finds the smallest rho whose with-SIC coverage still meets
    // the no-SIC coverage at rho_baseline, on one common sample set.
    inline AdaptResult adapt_rho_with_sic(const NetworkConfig &c, double rho_baseline)
    {
        std::vector<LinkStats> stats = simulate_stats(c);
        return detail::adapt_rho_with_sic(c, rho_baseline, stats);
    }

} // namespace wipt

#endif
