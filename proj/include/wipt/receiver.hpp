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
// Rate-energy regions of the standard receiver architectures on a
// deterministic SIMO link: time switching (TS), power splitting (PS), and
// antenna switching (AS), plus the rectangular outer bound that applies
// under a linear harvester. Convention used library-wide: rho is the
// fraction routed to the INFORMATION branch. Antenna noise (sigma_n2) is
// split along with the signal; conversion noise (sigma_c2) is injected
// after the splitter and is never harvested.

#ifndef WIPT_RECEIVER_HPP
#define WIPT_RECEIVER_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rectenna.hpp"

namespace wipt
{
    struct SimoChannel
    {
        std::vector<double> channel_gains; // per-antenna power gains |h_i|^2
        double transmit_power = 1.0;       // W
        double sigma_n2 = 0.5;             // antenna noise variance, W
        double sigma_c2 = 0.5;             // conversion noise variance, W
        RectennaModel harvester = LinearModel{1.0};
    };

    inline void validate(const SimoChannel &ch)
    {
        if (ch.channel_gains.empty())
            throw domain_error("SimoChannel: need at least one antenna");
        bool any_positive = false;
        for (double g : ch.channel_gains)
        {
            if (!(g >= 0.0) || !std::isfinite(g))
                throw domain_error("SimoChannel: gains must be finite and nonnegative");
            if (g > 0.0)
                any_positive = true;
        }
        if (!any_positive)
            throw domain_error("SimoChannel: at least one gain must be positive");
        if (!(ch.sigma_n2 > 0.0) || !(ch.sigma_c2 > 0.0))
            throw domain_error("SimoChannel: noise variances must be positive");
        if (!(ch.transmit_power >= 0.0) || !std::isfinite(ch.transmit_power))
            throw domain_error("SimoChannel: transmit power must be finite and nonnegative");
        validate(ch.harvester);
    }

    struct RateEnergyPoint
    {
        double rate = 0.0;   // bpcu
        double energy = 0.0; // W harvested DC
    };

    // Curve sample: the sweep parameter (tau for TS, rho for PS) and its point.
    struct SweepPoint
    {
        double parameter = 0.0;
        RateEnergyPoint point;
    };

    // One antenna bipartition: bit i of info_mask set means antenna i decodes.
    struct PartitionPoint
    {
        unsigned info_mask = 0;
        RateEnergyPoint point;
    };

    namespace detail
    {
        inline double total_gain(const SimoChannel &ch)
        {
            double g = 0.0;
            for (double gi : ch.channel_gains)
                g += gi;
            return g;
        }

        // MRC information rate when fraction rho of the received signal (and
        // of the antenna noise) feeds the decoder. rho = 1 is the dedicated
        // information receiver.
        inline double ps_rate(const SimoChannel &ch, double rho)
        {
            double snr = 0.0;
            double denom = rho * ch.sigma_n2 + ch.sigma_c2;
            for (double gi : ch.channel_gains)
                snr += rho * ch.transmit_power * gi / denom;
            return std::log2(1.0 + snr);
        }
    } // namespace detail

    // Time switching: fraction tau of the time harvests, the rest decodes.
    inline std::vector<SweepPoint> ts_region(const SimoChannel &ch,
                                             std::span<const double> tau_grid)
    {
        validate(ch);
        double full_rate = detail::ps_rate(ch, 1.0);
        double full_energy = harvest_dc(ch.harvester,
                                        ch.transmit_power * detail::total_gain(ch));
        std::vector<SweepPoint> curve;
        curve.reserve(tau_grid.size());
        for (double tau : tau_grid)
        {
            if (!(tau >= 0.0 && tau <= 1.0))
                throw domain_error("ts_region: tau must lie in [0, 1]");
            curve.push_back({tau, {(1.0 - tau) * full_rate, tau * full_energy}});
        }
        return curve;
    }

    // Power splitting: fraction rho of the signal feeds the decoder, the
    // complement feeds the harvester. Antenna noise splits with the signal;
    // conversion noise does not, and neither noise is harvested.
    inline std::vector<SweepPoint> ps_region(const SimoChannel &ch,
                                             std::span<const double> rho_grid)
    {
        validate(ch);
        double p_total = ch.transmit_power * detail::total_gain(ch);
        std::vector<SweepPoint> curve;
        curve.reserve(rho_grid.size());
        for (double rho : rho_grid)
        {
            if (!(rho >= 0.0 && rho <= 1.0))
                throw domain_error("ps_region: rho must lie in [0, 1]");
            double rate = detail::ps_rate(ch, rho);
            double energy = harvest_dc(ch.harvester, (1.0 - rho) * p_total);
            curve.push_back({rho, {rate, energy}});
        }
        return curve;
    }

    // Antenna switching: every nonempty proper bipartition of the antennas
    // into a decoding set and a harvesting set, duplicates removed.
    inline std::vector<PartitionPoint> as_points(const SimoChannel &ch)
    {
        validate(ch);
        const std::size_t m = ch.channel_gains.size();
        if (m < 2)
            throw unsupported_error("as_points: antenna switching needs M >= 2 antennas");
        if (m > 12)
            throw domain_error("as_points: exhaustive bipartition enumeration capped at 12 antennas");

        std::vector<PartitionPoint> pts;
        const unsigned all = (1u << m) - 1u;
        for (unsigned mask = 1; mask < all; ++mask)
        {
            double info_gain = 0.0;
            double harvest_gain = 0.0;
            for (std::size_t i = 0; i < m; ++i)
            {
                if (mask & (1u << i))
                    info_gain += ch.channel_gains[i];
                else
                    harvest_gain += ch.channel_gains[i];
            }
            RateEnergyPoint pt;
            pt.rate = std::log2(1.0 + ch.transmit_power * info_gain /
                                          (ch.sigma_n2 + ch.sigma_c2));
            pt.energy = harvest_dc(ch.harvester, ch.transmit_power * harvest_gain);
            bool dup = false;
            for (const auto &q : pts)
                if (q.point.rate == pt.rate && q.point.energy == pt.energy)
                {
                    dup = true;
                    break;
                }
            if (!dup)
                pts.push_back({mask, pt});
        }
        return pts;
    }

    // Rectangle corner (C_max, E_max). Only the linear harvester admits the
    // no-trade-off rectangle, so other variants are rejected.
    inline RateEnergyPoint outer_bound(const SimoChannel &ch)
    {
        validate(ch);
        if (!std::holds_alternative<LinearModel>(ch.harvester))
            throw unsupported_error("outer_bound: rectangle bound requires the Linear harvester");
        RateEnergyPoint pt;
        pt.rate = detail::ps_rate(ch, 1.0);
        pt.energy = harvest_dc(ch.harvester, ch.transmit_power * detail::total_gain(ch));
        return pt;
    }

} // namespace wipt

#endif
