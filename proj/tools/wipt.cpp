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
// Command-line front end. Each subcommand renders one case-study data
// series as CSV; `validate` cross-checks the solvers against independent
// oracles. Exit codes: 0 success, 1 domain/config error (or failed
// validation), 2 solver non-convergence.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wipt/wipt.hpp"

namespace
{
    struct GlobalOpts
    {
        std::string config_path;
        std::string out_path;
        bool plot_script = false;
        std::uint64_t seed = 0;
        bool seed_set = false;
        std::uint64_t realizations = 0;
        bool realizations_set = false;
        unsigned workers = 0;
        bool verbose = false;
    };

    wipt::ConfigMap load_config(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg;
        if (!g.config_path.empty())
            cfg = wipt::ConfigMap::parse_file(g.config_path);

        // Seed precedence: --seed flag, then WIPT_SEED, then config file,
        // then the schema default. The winner is written back into the map
        // so provenance comments show the value actually used.
        if (g.seed_set)
        {
            cfg.set("seed", std::to_string(g.seed));
        }
        else if (const char *env = std::getenv("WIPT_SEED"))
        {
            std::string s(env);
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw wipt::domain_error("WIPT_SEED must be a nonnegative integer, got '" + s + "'");
            cfg.set("seed", s);
        }
        if (g.realizations_set)
        {
            cfg.set("network.n_realizations", std::to_string(g.realizations));
            cfg.set("validate.n_realizations", std::to_string(g.realizations));
        }
        return cfg;
    }

    // Provenance comment lines: the tool line, the seed, and every resolved
    // key of the subcommand's section. Worker count is an execution knob,
    // not a parameter, and never appears here.
    wipt::ProvenanceLines provenance(const std::string &sub, const wipt::ConfigMap &cfg)
    {
        wipt::ProvenanceLines prov;
        prov.push_back("generated by wipt " + sub);
        for (const auto &[key, value] : cfg.resolved())
        {
            if (key == "seed" || key.rfind(sub + ".", 0) == 0)
                prov.push_back(key + " = " + value);
        }
        return prov;
    }

    struct OutputTarget
    {
        std::ofstream file;
        std::ostream *stream = nullptr;
        std::string path; // empty when writing to stdout
    };

    OutputTarget open_output(const GlobalOpts &g, const std::string &sub)
    {
        OutputTarget t;
        std::string path = g.out_path.empty() ? sub + ".csv" : g.out_path;
        if (path == "-")
        {
            t.stream = &std::cout;
            return t;
        }
        t.file.open(path, std::ios::binary);
        if (!t.file)
            throw wipt::domain_error("cannot open output file: " + path);
        t.stream = &t.file;
        t.path = path;
        return t;
    }

    // Standalone matplotlib script next to the CSV; never executed here.
    void emit_plot_script(const GlobalOpts &g, const std::string &sub,
                          const std::string &csv_path,
                          const std::vector<std::string> &group_cols,
                          const std::string &x_col, const std::string &y_col)
    {
        if (!g.plot_script)
            return;
        std::string csv_name = csv_path.empty() ? sub + ".csv" : csv_path;
        std::string script_path = sub + ".py";
        if (!csv_path.empty())
        {
            script_path = csv_path;
            std::size_t dot = script_path.rfind(".csv");
            if (dot != std::string::npos && dot == script_path.size() - 4)
                script_path.erase(dot);
            script_path += ".py";
        }

        std::ostringstream py;
        py << "#!/usr/bin/env python3\n";
        py << "\"\"\"Plot the '" << sub << "' data series produced by wipt.\"\"\"\n";
        py << "import csv\n";
        py << "from collections import defaultdict\n";
        py << "import matplotlib\n";
        py << "matplotlib.use(\"Agg\")\n";
        py << "import matplotlib.pyplot as plt\n\n";
        py << "CSV = \"" << csv_name << "\"\n";
        py << "GROUP_COLS = [";
        for (std::size_t i = 0; i < group_cols.size(); ++i)
            py << (i ? ", " : "") << "\"" << group_cols[i] << "\"";
        py << "]\n";
        py << "X, Y = \"" << x_col << "\", \"" << y_col << "\"\n\n";
        py << "with open(CSV) as fh:\n";
        py << "    rows = list(csv.DictReader(l for l in fh if not l.startswith(\"#\")))\n";
        py << "groups = defaultdict(list)\n";
        py << "for r in rows:\n";
        py << "    key = \" \".join(f\"{c}={r[c]}\" for c in GROUP_COLS)\n";
        py << "    groups[key].append((float(r[X]), float(r[Y])))\n";
        py << "fig, ax = plt.subplots()\n";
        py << "for key in sorted(groups):\n";
        py << "    pts = sorted(groups[key])\n";
        py << "    ax.plot([p[0] for p in pts], [p[1] for p in pts], marker=\".\",\n";
        py << "            label=key if key else Y)\n";
        py << "ax.set_xlabel(X)\n";
        py << "ax.set_ylabel(Y)\n";
        py << "ax.grid(True)\n";
        py << "ax.legend()\n";
        py << "fig.savefig(CSV[:-4] + \".png\" if CSV.endswith(\".csv\") else CSV + \".png\",\n";
        py << "            dpi=150, bbox_inches=\"tight\")\n";

        std::ofstream out(script_path, std::ios::binary);
        if (!out)
            throw wipt::domain_error("cannot open plot script file: " + script_path);
        out << py.str();
        if (g.verbose)
            std::cerr << "wrote " << script_path << "\n";
    }

    void note_written(const GlobalOpts &g, const OutputTarget &t, std::size_t rows)
    {
        if (g.verbose && !t.path.empty())
            std::cerr << "wrote " << t.path << " (" << rows << " data rows)\n";
    }

    int run_models(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        wipt::ModelSet models;
        models.linear = {cfg.get_real("models.linear_eta")};
        models.piecewise = {cfg.get_real("models.pwl_eta"), cfg.get_real("models.pwl_p_sens"),
                            cfg.get_real("models.pwl_p_sat")};
        models.sigmoid = {cfg.get_real("models.sigmoid_p_sat"), cfg.get_real("models.sigmoid_a"),
                          cfg.get_real("models.sigmoid_b")};
        models.diode = {cfg.get_real("models.k2"), cfg.get_real("models.k4")};
        std::vector<double> grid =
            wipt::linspace(cfg.get_real("models.p_min"), cfg.get_real("models.p_max"),
                           cfg.get_integer("models.p_points"));
        auto rows = wipt::models_sweep(models, grid);
        OutputTarget out = open_output(g, "models");
        wipt::write_models_csv(*out.stream, rows, provenance("models", cfg));
        note_written(g, out, rows.size());
        emit_plot_script(g, "models", out.path, {"model"}, "p_rf_W", "p_dc_W");
        return 0;
    }

    int run_robust(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        wipt::NominalDistribution nominal{cfg.get_real("robust.rate")};
        std::vector<double> d_list = cfg.get_real_list("robust.d_list");
        std::vector<double> x_grid =
            wipt::linspace(0.0, cfg.get_real("robust.x_max"), cfg.get_integer("robust.x_points"));
        const wipt::KlDirection dirs[] = {wipt::KlDirection::ForwardKL,
                                          wipt::KlDirection::ReverseKL};
        auto rows = wipt::robust_sweep(nominal, d_list, x_grid, dirs);
        OutputTarget out = open_output(g, "robust");
        wipt::write_robust_csv(*out.stream, rows, provenance("robust", cfg));
        note_written(g, out, rows.size());
        emit_plot_script(g, "robust", out.path, {"direction", "d"}, "x", "cdf");
        return 0;
    }

    int run_capacity(const GlobalOpts &g, const std::string &grid_flag)
    {
        wipt::ConfigMap cfg = load_config(g);
        if (!grid_flag.empty())
            cfg.set("capacity.grid", grid_flag);
        wipt::EnergyAlphabet alphabet{cfg.get_real_list("capacity.energies")};
        std::vector<double> b_grid = cfg.get_grid("capacity.grid");
        auto curve = wipt::region_boundary(alphabet, b_grid);
        OutputTarget out = open_output(g, "capacity");
        wipt::write_capacity_csv(*out.stream, curve, provenance("capacity", cfg));
        note_written(g, out, curve.size());
        emit_plot_script(g, "capacity", out.path, {}, "b", "capacity_bpcu");
        return 0;
    }

    int run_receivers(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        wipt::SimoChannel ch;
        ch.channel_gains = cfg.get_real_list("receivers.gains");
        ch.transmit_power = cfg.get_real("receivers.power");
        ch.sigma_n2 = cfg.get_real("receivers.sigma_n2");
        ch.sigma_c2 = cfg.get_real("receivers.sigma_c2");
        ch.harvester = wipt::LinearModel{cfg.get_real("receivers.eta")};
        std::vector<double> grid = cfg.get_grid("receivers.grid");
        auto rows = wipt::receivers_sweep(ch, grid);
        OutputTarget out = open_output(g, "receivers");
        wipt::write_receivers_csv(*out.stream, rows, provenance("receivers", cfg));
        note_written(g, out, rows.size());
        emit_plot_script(g, "receivers", out.path, {"scheme"}, "energy_W", "rate_bpcu");
        return 0;
    }

    wipt::NetworkConfig network_config_from(const wipt::ConfigMap &cfg, const GlobalOpts &g)
    {
        wipt::NetworkConfig nc;
        nc.lambda = cfg.get_real("network.lambda");
        nc.d = cfg.get_real("network.d");
        nc.alpha = cfg.get_real("network.alpha");
        nc.theta = cfg.get_real("network.theta");
        nc.sigma_n2 = cfg.get_real("network.sigma_n2");
        nc.sigma_c2 = cfg.get_real("network.sigma_c2");
        nc.eta = cfg.get_real("network.eta");
        nc.r0 = cfg.get_real("network.r0");
        nc.sim_radius = cfg.get_real("network.sim_radius");
        nc.n_realizations = cfg.get_integer("network.n_realizations");
        nc.min_covered_samples = cfg.get_integer("network.min_covered");
        nc.master_seed = cfg.get_integer("seed");
        nc.n_workers = g.workers;
        return nc;
    }

    int run_network(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        wipt::NetworkConfig nc = network_config_from(cfg, g);
        std::vector<double> p_grid = cfg.get_grid("network.p_dbw_grid");
        std::vector<double> baselines = cfg.get_real_list("network.rho_baselines");
        if (g.verbose)
            std::cerr << "simulating " << nc.n_realizations << " realizations, "
                      << p_grid.size() << " power points, " << baselines.size()
                      << " baselines\n";
        auto rows = wipt::network_sweep(nc, p_grid, baselines);
        OutputTarget out = open_output(g, "network");
        wipt::write_network_csv(*out.stream, rows, provenance("network", cfg));
        note_written(g, out, rows.size());
        emit_plot_script(g, "network", out.path, {"rho_mode"}, "P_dBW", "harvested_W");
        return 0;
    }

    int run_waveform(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        std::vector<std::size_t> n_list = cfg.get_integer_list("waveform.n_list");
        std::vector<std::size_t> info_bins = cfg.get_integer_list("waveform.info_bins");
        wipt::DiodePolynomialModel diode{cfg.get_real("waveform.k2"), cfg.get_real("waveform.k4")};
        auto rows = wipt::waveform_sweep(n_list, cfg.get_real("waveform.power"), diode,
                                         info_bins, cfg.get_integer("waveform.symbols"),
                                         cfg.get_integer("seed"));
        OutputTarget out = open_output(g, "waveform");
        wipt::write_waveform_csv(*out.stream, rows, provenance("waveform", cfg));
        note_written(g, out, rows.size());
        emit_plot_script(g, "waveform", out.path, {}, "N", "harvested_W");
        return 0;
    }

    int run_validate(const GlobalOpts &g)
    {
        wipt::ConfigMap cfg = load_config(g);
        bool all_pass = true;
        auto report = [&](const std::string &name, bool pass, const std::string &detail)
        {
            std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
            all_pass = all_pass && pass;
        };
        auto rel_err = [](double a, double b) { return std::fabs(a - b) / std::fabs(b); };

        wipt::NominalDistribution nominal{1.0};
        for (wipt::KlDirection dir :
             {wipt::KlDirection::ForwardKL, wipt::KlDirection::ReverseKL})
        {
            std::string dn = dir == wipt::KlDirection::ForwardKL ? "forward" : "reverse";
            for (double d : {0.01, 0.1, 0.5})
            {
                if (g.verbose)
                    std::cerr << "robust oracle " << dn << " d=" << d << "\n";
                double solver = wipt::worst_case_distribution(nominal, d, dir).worst_case_mean;
                double oracle = wipt::oracles::discretized_worst_case_mean(1.0, d, dir);
                double rel = rel_err(solver, oracle);
                report("robust-" + dn + "-d" + wipt::csv_num(d), rel <= 0.01,
                       "solver " + wipt::csv_num(solver) + " vs discretized program " +
                           wipt::csv_num(oracle) + " (rel " + wipt::csv_num(rel) + ")");
            }
        }

        for (double b : {0.0, 0.25, 0.5, 0.6, 0.75, 0.9, 1.0})
        {
            double closed = wipt::binary_capacity(b).capacity;
            double grid = wipt::oracles::bernoulli_grid_capacity(b);
            double diff = std::fabs(closed - grid);
            bool pass = diff <= 1e-3;
            wipt::EnergyAlphabet binary{{0.0, 1.0}};
            double me = wipt::max_entropy_capacity(binary, b).capacity;
            pass = pass && std::fabs(me - closed) <= 1e-9;
            report("capacity-grid-b" + wipt::csv_num(b), pass,
                   "closed form " + wipt::csv_num(closed) + " vs lattice search " +
                       wipt::csv_num(grid) + ", max-entropy " + wipt::csv_num(me));
        }

        wipt::NetworkConfig nc = network_config_from(cfg, g);
        nc.r0 = 0.0;
        nc.sigma_n2 = 0.0;
        nc.sigma_c2 = 0.0;
        nc.sic_enabled = false;
        nc.rho = 0.5;
        nc.n_realizations = cfg.get_integer("validate.n_realizations");
        if (g.verbose)
            std::cerr << "coverage Monte Carlo, n=" << nc.n_realizations << "\n";
        wipt::NetworkMetrics mc = wipt::evaluate(nc);
        double analytic = wipt::analytic_coverage(nc);
        double err = std::fabs(mc.coverage_probability - analytic);
        bool pass = err <= std::max(0.01 * analytic, 3.0 * mc.coverage_ci);
        report("netgeom-analytic-coverage", pass,
               "MC " + wipt::csv_num(mc.coverage_probability) + " +/- " +
                   wipt::csv_num(mc.coverage_ci) + " vs closed form " + wipt::csv_num(analytic));

        return all_pass ? 0 : 1;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"wipt: wireless information and power transfer case studies"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "key=value configuration file");
    app.add_option("--out", g.out_path, "output CSV path ('-' writes to stdout)");
    auto *seed_opt = app.add_option("--seed", g.seed, "master seed (overrides WIPT_SEED and config)");
    auto *real_opt =
        app.add_option("--realizations", g.realizations, "Monte Carlo realization override");
    app.add_option("--workers", g.workers,
                   "worker threads for Monte Carlo (0 = hardware concurrency)");
    app.add_flag("--plot-script", g.plot_script, "also emit a standalone matplotlib script");
    app.add_flag("-v,--verbose", g.verbose, "progress notes on standard error");

    auto *models = app.add_subcommand("models", "rectenna transfer curves");
    auto *robust = app.add_subcommand("robust", "worst-case harvest CDFs under KL uncertainty");
    auto *capacity = app.add_subcommand("capacity", "information-energy capacity boundary");
    std::string grid_flag;
    capacity->add_option("--grid", grid_flag, "minimum energy rate lattice start:stop:step");
    auto *receivers = app.add_subcommand("receivers", "TS/PS/AS rate-energy regions");
    auto *network = app.add_subcommand("network", "Poisson network coverage and harvest sweep");
    auto *waveform = app.add_subcommand("waveform", "multitone PAPR and diode harvest trend");
    auto *validate = app.add_subcommand("validate", "cross-check solvers against oracles");
    for (CLI::App *sub : {models, robust, capacity, receivers, network, waveform, validate})
        sub->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    g.seed_set = seed_opt->count() > 0;
    g.realizations_set = real_opt->count() > 0;

    try
    {
        if (models->parsed())
            return run_models(g);
        if (robust->parsed())
            return run_robust(g);
        if (capacity->parsed())
            return run_capacity(g, grid_flag);
        if (receivers->parsed())
            return run_receivers(g);
        if (network->parsed())
            return run_network(g);
        if (waveform->parsed())
            return run_waveform(g);
        if (validate->parsed())
            return run_validate(g);
        std::cerr << "error: no subcommand selected\n";
        return 1;
    }
    catch (const wipt::convergence_error &e)
    {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
