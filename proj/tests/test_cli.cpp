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
// End-to-end tests that drive the installed binary: exit codes, CSV shape,
// seed precedence, and byte-level determinism across worker counts. The
// binary path arrives via the WIPT_CLI_PATH compile definition.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace
{
    struct RunResult
    {
        int code = -1;
        std::string out;
        std::string err;
    };

    std::string slurp(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    // Runs the CLI through the shell with WIPT_SEED scrubbed unless the
    // caller sets it explicitly in env_prefix.
    RunResult run_cli(const std::string &args, const std::string &env_prefix = "")
    {
        static int counter = 0;
        std::string tag = std::to_string(counter++);
        std::string out_file = "cli_stdout_" + tag + ".tmp";
        std::string err_file = "cli_stderr_" + tag + ".tmp";
        std::string env = env_prefix.empty() ? "env -u WIPT_SEED" : "env -u WIPT_SEED " + env_prefix;
        std::string cmd = env + " " + std::string(WIPT_CLI_PATH) + " " + args + " > " + out_file +
                          " 2> " + err_file;
        int rc = std::system(cmd.c_str());
        RunResult r;
        r.code = rc == -1 ? 127 : WEXITSTATUS(rc);
        r.out = slurp(out_file);
        r.err = slurp(err_file);
        std::remove(out_file.c_str());
        std::remove(err_file.c_str());
        return r;
    }

    struct Csv
    {
        std::vector<std::string> comments;
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    std::vector<std::string> split_commas(const std::string &line)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : line)
        {
            if (ch == ',')
            {
                out.push_back(cur);
                cur.clear();
            }
            else
                cur.push_back(ch);
        }
        out.push_back(cur);
        return out;
    }

    Csv parse_csv(const std::string &path)
    {
        Csv csv;
        std::ifstream in(path);
        REQUIRE(in.good());
        std::string line;
        bool header_seen = false;
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            if (line[0] == '#')
            {
                csv.comments.push_back(line);
                continue;
            }
            if (!header_seen)
            {
                csv.header = split_commas(line);
                header_seen = true;
            }
            else
                csv.rows.push_back(split_commas(line));
        }
        return csv;
    }

    void write_file(const std::string &path, const std::string &text)
    {
        std::ofstream out(path, std::ios::binary);
        REQUIRE(out.good());
        out << text;
    }
}

TEST_CASE("capacity subcommand writes the expected lattice", "[cli]")
{
    auto r = run_cli("--out cli_cap.csv capacity");
    REQUIRE(r.code == 0);
    Csv csv = parse_csv("cli_cap.csv");
    REQUIRE(csv.header.size() >= 2);
    CHECK(csv.header[0] == "b");
    CHECK(csv.header[1] == "capacity_bpcu");
    // Default lattice 0:1:0.01 must land exactly on 101 points.
    REQUIRE(csv.rows.size() == 101);
    CHECK(csv.rows.front()[0] == "0");
    CHECK(csv.rows.front()[1] == "1");
    CHECK(csv.rows.back()[0] == "1");
    CHECK(csv.rows.back()[1] == "0");

    // Provenance names the tool and the effective seed.
    REQUIRE_FALSE(csv.comments.empty());
    CHECK(csv.comments[0].find("generated by wipt capacity") != std::string::npos);
    bool has_seed = false;
    for (const auto &c : csv.comments)
        if (c.find("seed = 1") != std::string::npos)
            has_seed = true;
    CHECK(has_seed);
    std::remove("cli_cap.csv");
}

TEST_CASE("capacity grid flag overrides the lattice", "[cli]")
{
    auto r = run_cli("--out cli_cap5.csv capacity --grid 0:1:0.25");
    REQUIRE(r.code == 0);
    Csv csv = parse_csv("cli_cap5.csv");
    CHECK(csv.rows.size() == 5);
    std::remove("cli_cap5.csv");

    auto bad = run_cli("--out cli_capbad.csv capacity --grid 1:0:0.25");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("repeated runs are byte identical", "[cli]")
{
    REQUIRE(run_cli("--out cli_rcv_a.csv receivers").code == 0);
    REQUIRE(run_cli("--out cli_rcv_b.csv receivers").code == 0);
    std::string a = slurp("cli_rcv_a.csv");
    std::string b = slurp("cli_rcv_b.csv");
    CHECK(a == b);
    CHECK_FALSE(a.empty());

    // ts and ps sweep the default 101-point lattice; one merged antenna
    // bipartition and the rectangle corner complete the file.
    Csv csv = parse_csv("cli_rcv_a.csv");
    CHECK(csv.rows.size() == 204);
    std::remove("cli_rcv_a.csv");
    std::remove("cli_rcv_b.csv");
}

TEST_CASE("network sweep is byte identical across worker counts", "[cli]")
{
    write_file("cli_net.cfg",
               "# tiny sweep for determinism checks\n"
               "network.n_realizations = 2000\n"
               "network.p_dbw_grid = 0:8:4\n"
               "network.rho_baselines = 0.5\n");
    auto one = run_cli("--config cli_net.cfg --workers 1 --out cli_net_w1.csv network");
    auto three = run_cli("--config cli_net.cfg --workers 3 --out cli_net_w3.csv network");
    REQUIRE(one.code == 0);
    REQUIRE(three.code == 0);
    std::string w1 = slurp("cli_net_w1.csv");
    std::string w3 = slurp("cli_net_w3.csv");
    REQUIRE_FALSE(w1.empty());
    CHECK(w1 == w3);

    Csv csv = parse_csv("cli_net_w1.csv");
    REQUIRE(csv.header.size() == 7);
    CHECK(csv.header[0] == "P_dBW");
    CHECK(csv.header[1] == "rho_mode");
    CHECK(csv.header[2] == "sic");
    CHECK(csv.header[3] == "coverage");
    CHECK(csv.header[4] == "coverage_ci");
    CHECK(csv.header[5] == "harvested_W");
    CHECK(csv.header[6] == "harvested_ci");
    // Three power points x (fixed + adapted + bound).
    CHECK(csv.rows.size() == 9);
    std::remove("cli_net.cfg");
    std::remove("cli_net_w1.csv");
    std::remove("cli_net_w3.csv");
}

TEST_CASE("seed precedence: flag beats environment beats config", "[cli]")
{
    write_file("cli_seed.cfg",
               "seed = 5\n"
               "network.n_realizations = 500\n"
               "network.p_dbw_grid = 10:10:1\n"
               "network.rho_baselines = 0.5\n");

    REQUIRE(run_cli("--config cli_seed.cfg --out cli_seed_cfg.csv network").code == 0);
    REQUIRE(run_cli("--config cli_seed.cfg --out cli_seed_env.csv network",
                    "WIPT_SEED=123").code == 0);
    REQUIRE(run_cli("--config cli_seed.cfg --seed 123 --out cli_seed_flag.csv network").code == 0);
    REQUIRE(run_cli("--config cli_seed.cfg --seed 123 --out cli_seed_both.csv network",
                    "WIPT_SEED=99").code == 0);
    REQUIRE(run_cli("--config cli_seed.cfg --seed 5 --out cli_seed_five.csv network").code == 0);

    std::string cfg5 = slurp("cli_seed_cfg.csv");
    std::string env123 = slurp("cli_seed_env.csv");
    std::string flag123 = slurp("cli_seed_flag.csv");
    std::string both123 = slurp("cli_seed_both.csv");
    std::string five = slurp("cli_seed_five.csv");

    CHECK(env123 == flag123);  // same effective seed
    CHECK(both123 == flag123); // flag wins over the environment
    CHECK(cfg5 == five);       // config seed honored when nothing overrides
    CHECK(cfg5 != flag123);    // different seeds give different samples

    for (const char *f : {"cli_seed.cfg", "cli_seed_cfg.csv", "cli_seed_env.csv",
                          "cli_seed_flag.csv", "cli_seed_both.csv", "cli_seed_five.csv"})
        std::remove(f);
}

TEST_CASE("bad inputs produce exit code 1 with a message", "[cli]")
{
    auto missing = run_cli("--config /nonexistent/wipt.cfg capacity");
    CHECK(missing.code == 1);
    CHECK(missing.err.find("/nonexistent/wipt.cfg") != std::string::npos);

    write_file("cli_bad_key.cfg", "capacity.bogus = 1\n");
    auto unknown = run_cli("--config cli_bad_key.cfg capacity");
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("bogus") != std::string::npos);
    std::remove("cli_bad_key.cfg");

    write_file("cli_dup_key.cfg", "seed = 1\nseed = 2\n");
    auto dup = run_cli("--config cli_dup_key.cfg capacity");
    CHECK(dup.code == 1);
    CHECK(dup.err.find("duplicate") != std::string::npos);
    std::remove("cli_dup_key.cfg");

    auto bad_env = run_cli("capacity --out cli_unused.csv", "WIPT_SEED=nope");
    CHECK(bad_env.code == 1);
    CHECK(bad_env.err.find("WIPT_SEED") != std::string::npos);

    auto bad_flag = run_cli("--frobnicate capacity");
    CHECK(bad_flag.code == 1);

    auto no_sub = run_cli("");
    CHECK(no_sub.code == 1);

    auto bad_out = run_cli("--out /nonexistent_dir/x.csv capacity");
    CHECK(bad_out.code == 1);
    CHECK(bad_out.err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("solver failures exit with code 2", "[cli]")
{
    // A divergence radius this large pushes the reverse shift below any
    // representable bracket; the solver reports rather than fabricates.
    write_file("cli_diverge.cfg", "robust.d_list = 0.05,20\n");
    auto r = run_cli("--config cli_diverge.cfg --out cli_diverge.csv robust");
    CHECK(r.code == 2);
    CHECK(r.err.find("solver error") != std::string::npos);
    std::remove("cli_diverge.cfg");
    std::remove("cli_diverge.csv");
}

TEST_CASE("stdout target and plot script emission", "[cli]")
{
    auto r = run_cli("--out - capacity");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("b,capacity_bpcu") != std::string::npos);

    auto m = run_cli("--out cli_models.csv --plot-script models");
    REQUIRE(m.code == 0);
    std::string script = slurp("cli_models.py");
    CHECK(script.find("matplotlib") != std::string::npos);
    CHECK(script.find("cli_models.csv") != std::string::npos);
    std::remove("cli_models.csv");
    std::remove("cli_models.py");
}

TEST_CASE("waveform subcommand trends", "[cli]")
{
    auto r = run_cli("--out cli_wave.csv waveform");
    REQUIRE(r.code == 0);
    Csv csv = parse_csv("cli_wave.csv");
    REQUIRE(csv.rows.size() == 4);
    // PAPR column carries the coherent 2N values.
    REQUIRE(csv.header.size() >= 2);
    CHECK(csv.rows[0][1] == "2");
    CHECK(csv.rows[3][1] == "16");
    std::remove("cli_wave.csv");
}

TEST_CASE("validate subcommand cross-checks oracles", "[cli]")
{
    auto r = run_cli("--realizations 20000 validate");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("PASS robust-forward-d0.1") != std::string::npos);
    CHECK(r.out.find("PASS robust-reverse-d0.5") != std::string::npos);
    CHECK(r.out.find("PASS capacity-grid-b0.75") != std::string::npos);
    CHECK(r.out.find("PASS netgeom-analytic-coverage") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
