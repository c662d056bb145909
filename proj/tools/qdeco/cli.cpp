// Copyright 2026 The qdeco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qdeco/errors.hpp"

namespace qdeco::cli {

namespace {

struct Raw {
    std::string format = "csv";
    std::string out;
    std::string p_range, kt_range, phi_range;
    RunConfig cfg;
};

void add_sweep(CLI::App *sub, Raw &raw) {
    sub->add_option("--p", raw.p_range, "sweep over p: start:stop:step or a single value");
    sub->add_option("--kt", raw.kt_range, "sweep over kappa t: start:stop:step or a single value");
}

void add_graph(CLI::App *sub, Raw &raw) {
    sub->add_option("--graph", raw.cfg.graph, "lattice spec (ring:N, line:N, grid2d:WxH, grid3d:WxHxD, star:N, "
                                              "complete:N), inline graph JSON or a JSON file");
}

void add_channel(CLI::App *sub, Raw &raw) {
    sub->add_option("--channel", raw.cfg.channel, "channel kind, inline channel JSON or a JSON file")
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Raw raw;
    CLI::App app{"qdeco: lifetimes of distillable multiparticle entanglement under local decoherence", "qdeco"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.add_option("--format", raw.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", raw.out, "output path (default stdout)");
    app.add_option("--jobs", raw.cfg.jobs, "worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
    app.add_option("--tol-root", raw.cfg.tol.abs_root, "bisection tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-eig", raw.cfg.tol.eig_zero_per_dim, "PPT eigenvalue slack per dimension")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    auto *ghz = app.add_subcommand("ghz", "GHZ lifetimes and blockwise M curves");
    ghz->add_option("--n", raw.cfg.n, "number of qubits")->required();
    add_channel(ghz, raw);
    ghz->add_option("--crit", raw.cfg.crit, "split size: k=K or all")->capture_default_str();
    ghz->add_option("--t-max", raw.cfg.t_max, "search horizon for qo and decay channels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_sweep(ghz, raw);

    auto *lower = app.add_subcommand("lower", "pair-distillation lower bounds per edge");
    add_graph(lower, raw);
    add_channel(lower, raw);
    add_sweep(lower, raw);

    auto *upper = app.add_subcommand("upper", "upper bounds on the lifetime");
    upper->add_option("--method", raw.cfg.method, "eb, ising or ppt")
        ->check(CLI::IsMember({"eb", "ising", "ppt"}))
        ->capture_default_str();
    add_graph(upper, raw);
    add_channel(upper, raw);
    upper->add_option("--t-max", raw.cfg.t_max, "search horizon for qo and decay channels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto *scan = app.add_subcommand("scan", "PPT thresholds for every bipartition");
    add_graph(scan, raw);
    add_channel(scan, raw);

    auto *weighted = app.add_subcommand("weighted", "separability thresholds of weighted graph states");
    add_graph(weighted, raw);
    add_channel(weighted, raw);
    weighted->add_option("--sweep-phi", raw.phi_range, "phase sweep start:stop:step; 'pi' is accepted");
    weighted->add_option("--degrees", raw.cfg.degrees, "degree list such as 2,3 or 2-10")->capture_default_str();

    auto *enc = app.add_subcommand("encode", "encoded GHZ level tables");
    enc->add_option("--kt", raw.cfg.kt, "unencoded kappa t")->capture_default_str();
    enc->add_option("--levels", raw.cfg.levels, "concatenation levels")->capture_default_str();
    enc->add_option("--M", raw.cfg.blocks, "block count for encoded lifetimes");

    auto *oc = app.add_subcommand("oracle-check", "cross-validate fast paths against the dense oracle");
    oc->add_option("--seed", raw.cfg.seed, "random seed")->capture_default_str();
    oc->add_option("--trials", raw.cfg.trials, "random cases")->capture_default_str();
    oc->add_option("--max-n", raw.cfg.max_n, "largest graph size")->capture_default_str();

    for (auto *sub : app.get_subcommands([](CLI::App *) { return true; })) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "qdeco: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    RunConfig &cfg = raw.cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    bool checks_passed = true;
    try {
        if (!raw.p_range.empty() && !raw.kt_range.empty()) {
            throw ValidationError("--p and --kt are mutually exclusive");
        }
        if (!raw.p_range.empty()) cfg.sweep = parse_axis(raw.p_range, false);
        if (!raw.kt_range.empty()) cfg.sweep = parse_axis(raw.kt_range, true);
        if (!raw.phi_range.empty()) {
            cfg.sweep_phi = parse_axis(raw.phi_range, true);
            cfg.sweep_phi->kt = false;
        }

        static const std::map<std::string, std::function<Report(const RunConfig &)>> table = {
            {"ghz", run_ghz},     {"lower", run_lower},       {"upper", run_upper},
            {"scan", run_scan},   {"weighted", run_weighted}, {"encode", run_encode},
        };
        Report report;
        if (cfg.command == "oracle-check") {
            report = run_oracle_check(cfg, checks_passed);
        } else {
            report = table.at(cfg.command)(cfg);
        }
        report.config["format"] = raw.format;

        std::ofstream file;
        if (!raw.out.empty()) {
            file.open(raw.out);
            if (!file) throw ValidationError("cannot open output file '" + raw.out + "'");
        }
        std::ostream &dest = raw.out.empty() ? out : file;
        if (raw.format == "json") {
            write_json(report, dest);
        } else {
            write_csv(report, dest);
        }
        if (!dest) throw EvaluationError("write failed");
    } catch (const ValidationError &e) {
        err << "qdeco " << cfg.command << ": " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError &e) {
        err << "qdeco " << cfg.command << ": " << e.what() << "\n";
        return 2;
    } catch (const CapacityError &e) {
        err << "qdeco " << cfg.command << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "qdeco " << cfg.command << ": " << e.what() << "\n";
        return 1;
    }
    return checks_passed ? 0 : 1;
}

}  // namespace qdeco::cli
