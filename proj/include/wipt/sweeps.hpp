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
// Case-study data series: one builder per study producing plain row
// structs, plus CSV emitters used verbatim by the CLI. Keeping emission
// here makes byte-level output reproducibility testable without going
// through a shell.

#ifndef WIPT_SWEEPS_HPP
#define WIPT_SWEEPS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "capacity.hpp"
#include "csv.hpp"
#include "netgeom.hpp"
#include "receiver.hpp"
#include "rectenna.hpp"
#include "robust.hpp"
#include "waveform.hpp"

namespace wipt
{
    using ProvenanceLines = std::vector<std::string>;

    inline void write_provenance(CsvWriter &w, const ProvenanceLines &lines)
    {
        for (const std::string &l : lines)
            w.comment(l);
    }

    // ---------------------------------------------------------------- models

    struct ModelCurveRow
    {
        std::string model;
        double p_rf = 0.0;
        double p_dc = 0.0;
    };

    struct ModelSet
    {
        LinearModel linear;
        PiecewiseLinearModel piecewise;
        SigmoidModel sigmoid;
        DiodePolynomialModel diode;
    };

    // Transfer curves of all four families over a received-power grid. The
    // diode family needs a waveform, so its curve is the single-tone output
    // at each power.
    inline std::vector<ModelCurveRow> models_sweep(const ModelSet &models,
                                                   std::span<const double> p_grid)
    {
        std::vector<ModelCurveRow> rows;
        rows.reserve(4 * p_grid.size());
        for (double p : p_grid)
            rows.push_back({"linear", p, harvest_dc(models.linear, p)});
        for (double p : p_grid)
            rows.push_back({"piecewise", p, harvest_dc(models.piecewise, p)});
        for (double p : p_grid)
            rows.push_back({"sigmoid", p, harvest_dc(models.sigmoid, p)});
        for (double p : p_grid)
            rows.push_back({"diode_single_tone", p,
                            p > 0.0 ? harvest_multitone(make_multitone(1, p), models.diode) : 0.0});
        return rows;
    }

    inline void write_models_csv(std::ostream &os, const std::vector<ModelCurveRow> &rows,
                                 const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        w.row({"model", "p_rf_W", "p_dc_W"});
        for (const auto &r : rows)
            w.row({r.model, csv_num(r.p_rf), csv_num(r.p_dc)});
    }

    // ---------------------------------------------------------------- robust

    struct RobustCdfRow
    {
        std::string direction;
        double d = 0.0;
        double x = 0.0;
        double cdf = 0.0;
    };

    inline std::vector<RobustCdfRow> robust_sweep(const NominalDistribution &nominal,
                                                  std::span<const double> d_list,
                                                  std::span<const double> x_grid,
                                                  std::span<const KlDirection> directions)
    {
        std::vector<RobustCdfRow> rows;
        rows.reserve(d_list.size() * x_grid.size() * directions.size());
        for (KlDirection dir : directions)
        {
            std::string name = dir == KlDirection::ForwardKL ? "forward" : "reverse";
            for (double d : d_list)
            {
                TiltedDistribution t = worst_case_distribution(nominal, d, dir);
                std::vector<double> cdf = worst_case_cdf(t, x_grid);
                for (std::size_t i = 0; i < x_grid.size(); ++i)
                    rows.push_back({name, d, x_grid[i], cdf[i]});
            }
        }
        return rows;
    }

    inline void write_robust_csv(std::ostream &os, const std::vector<RobustCdfRow> &rows,
                                 const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        w.row({"direction", "d", "x", "cdf"});
        for (const auto &r : rows)
            w.row({r.direction, csv_num(r.d), csv_num(r.x), csv_num(r.cdf)});
    }

    // -------------------------------------------------------------- capacity

    inline void write_capacity_csv(std::ostream &os, const std::vector<CapacityPoint> &curve,
                                   const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        std::size_t k = curve.empty() ? 0 : curve.front().distribution.size();
        std::vector<std::string> head = {"b", "capacity_bpcu"};
        for (std::size_t i = 0; i < k; ++i)
            head.push_back("p_symbol_" + std::to_string(i));
        w.row(head);
        for (const auto &pt : curve)
        {
            std::vector<std::string> fields = {csv_num(pt.b), csv_num(pt.capacity)};
            for (double p : pt.distribution)
                fields.push_back(csv_num(p));
            w.row(fields);
        }
    }

    // ------------------------------------------------------------- receivers

    struct ReceiverRow
    {
        std::string scheme; // ts, ps, as, outer
        double parameter = 0.0;
        double rate = 0.0;
        double energy = 0.0;
    };

    inline std::vector<ReceiverRow> receivers_sweep(const SimoChannel &channel,
                                                    std::span<const double> grid)
    {
        std::vector<ReceiverRow> rows;
        for (const SweepPoint &p : ts_region(channel, grid))
            rows.push_back({"ts", p.parameter, p.point.rate, p.point.energy});
        for (const SweepPoint &p : ps_region(channel, grid))
            rows.push_back({"ps", p.parameter, p.point.rate, p.point.energy});
        if (channel.channel_gains.size() >= 2)
            for (const PartitionPoint &p : as_points(channel))
                rows.push_back({"as", static_cast<double>(p.info_mask), p.point.rate,
                                p.point.energy});
        if (std::holds_alternative<LinearModel>(channel.harvester))
        {
            RateEnergyPoint b = outer_bound(channel);
            rows.push_back({"outer", 0.0, b.rate, b.energy});
        }
        return rows;
    }

    inline void write_receivers_csv(std::ostream &os, const std::vector<ReceiverRow> &rows,
                                    const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        w.row({"scheme", "parameter", "rate_bpcu", "energy_W"});
        for (const auto &r : rows)
            w.row({r.scheme, csv_num(r.parameter), csv_num(r.rate), csv_num(r.energy)});
    }

    // --------------------------------------------------------------- network

    struct NetworkSweepRow
    {
        double p_dbw = 0.0;
        std::string rho_mode; // fixed_<rho>, adapted_<rho>, bound
        bool sic = false;
        double rho = 0.0;
        NetworkMetrics metrics;
    };

    // Full transmit-power sweep: for each baseline, the fixed no-SIC curve
    // and the SIC-adapted curve; plus the rho -> 0 harvesting bound. One
    // simulation serves every power and every probe (the stored statistics
    // are per unit power), which is what makes the adapted and fixed curves
    // comparable under common random numbers.
    inline std::vector<NetworkSweepRow> network_sweep(const NetworkConfig &base,
                                                      std::span<const double> p_dbw_grid,
                                                      std::span<const double> rho_baselines)
    {
        NetworkConfig cfg = base;
        validate(cfg);
        for (double rho_b : rho_baselines)
            if (!(rho_b > 0.0 && rho_b <= 1.0))
                throw domain_error("network_sweep: baselines must lie in (0, 1]");

        std::vector<LinkStats> stats = simulate_stats(cfg);
        std::vector<NetworkSweepRow> rows;
        rows.reserve(p_dbw_grid.size() * (2 * rho_baselines.size() + 1));

        for (double p_dbw : p_dbw_grid)
        {
            cfg.P = std::pow(10.0, p_dbw / 10.0);
            for (double rho_b : rho_baselines)
            {
                std::string tag = csv_num(rho_b);
                NetworkSweepRow fixed;
                fixed.p_dbw = p_dbw;
                fixed.rho_mode = "fixed_" + tag;
                fixed.sic = false;
                fixed.rho = rho_b;
                fixed.metrics = metrics_from_stats(cfg, stats, rho_b, false);
                rows.push_back(fixed);

                AdaptResult a = detail::adapt_rho_with_sic(cfg, rho_b, stats);
                NetworkSweepRow adapted;
                adapted.p_dbw = p_dbw;
                adapted.rho_mode = "adapted_" + tag;
                adapted.sic = true;
                adapted.rho = a.rho_adapted;
                adapted.metrics = a.metrics;
                rows.push_back(adapted);
            }
            NetworkSweepRow bound;
            bound.p_dbw = p_dbw;
            bound.rho_mode = "bound";
            bound.sic = false;
            bound.rho = 0.0;
            bound.metrics = metrics_from_stats(cfg, stats, 0.0, false);
            rows.push_back(bound);
        }
        return rows;
    }

    inline void write_network_csv(std::ostream &os, const std::vector<NetworkSweepRow> &rows,
                                  const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        for (const auto &r : rows)
            if (r.rho_mode.rfind("adapted_", 0) == 0)
                w.comment("adapted_rho P_dBW=" + csv_num(r.p_dbw) + " baseline=" +
                          r.rho_mode.substr(8) + " rho=" + csv_num(r.rho));
        w.row({"P_dBW", "rho_mode", "sic", "coverage", "coverage_ci", "harvested_W",
               "harvested_ci"});
        for (const auto &r : rows)
            w.row({csv_num(r.p_dbw), r.rho_mode, r.sic ? "1" : "0",
                   csv_num(r.metrics.coverage_probability), csv_num(r.metrics.coverage_ci),
                   csv_num(r.metrics.avg_harvested), csv_num(r.metrics.harvested_ci)});
    }

    // -------------------------------------------------------------- waveform

    struct WaveformRow
    {
        std::size_t n_tones = 0;
        double papr = 0.0;
        double harvested = 0.0;
        double max_symbol_error = 0.0;
    };

    // Tone-count trend: for each tone count, the zero-phase PAPR, the diode
    // harvest of the energy waveform at fixed power, and the demodulation
    // error of a composite carrying the same tones next to information
    // subcarriers.
    inline std::vector<WaveformRow> waveform_sweep(std::span<const std::size_t> n_list,
                                                   double power,
                                                   const DiodePolynomialModel &diode,
                                                   std::span<const std::size_t> info_bins,
                                                   std::size_t symbol_count,
                                                   std::uint64_t seed)
    {
        std::size_t max_info = 0;
        for (std::size_t b : info_bins)
            max_info = std::max(max_info, b);

        std::vector<WaveformRow> rows;
        rows.reserve(n_list.size());
        for (std::size_t n : n_list)
        {
            if (n == 0)
                throw domain_error("waveform_sweep: tone counts must be positive");
            std::vector<std::size_t> tone_idx(n);
            for (std::size_t i = 0; i < n; ++i)
                tone_idx[i] = max_info + 1 + i;
            MultitoneWaveform tones = make_multitone(n, power, tone_idx);

            WaveformRow row;
            row.n_tones = n;
            row.papr = papr(tones);
            row.harvested = harvest_multitone(tones, diode);

            std::size_t max_idx = max_info + n;
            std::size_t spp = 16;
            while (spp < 8 * max_idx)
                spp *= 2;
            CompositeSignal comp = make_composite(info_bins, symbol_count, tones, spp, seed);
            row.max_symbol_error = info_integrity_check(comp, diode).max_symbol_error;
            rows.push_back(row);
        }
        return rows;
    }

    inline void write_waveform_csv(std::ostream &os, const std::vector<WaveformRow> &rows,
                                   const ProvenanceLines &prov)
    {
        CsvWriter w(os);
        write_provenance(w, prov);
        w.row({"N", "papr", "harvested_W", "max_symbol_error"});
        for (const auto &r : rows)
            w.row({csv_num(r.n_tones), csv_num(r.papr), csv_num(r.harvested),
                   csv_num(r.max_symbol_error)});
    }

} // namespace wipt

#endif
