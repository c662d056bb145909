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
#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "qdeco/channels.hpp"
#include "qdeco/encode.hpp"
#include "qdeco/errors.hpp"
#include "qdeco/ghz.hpp"
#include "qdeco/graphdiag.hpp"
#include "qdeco/graphs.hpp"
#include "qdeco/isingsep.hpp"
#include "qdeco/oracle.hpp"
#include "qdeco/pairdistill.hpp"
#include "qdeco/parallel.hpp"

namespace qdeco::cli {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double kt_of(double p) { return p > 0 ? -std::log(p) : std::numeric_limits<double>::infinity(); }

channels::ChannelSpec load_channel(const std::string &text) {
    std::ifstream in(text);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        return channels::parse_channel_spec(buf.str());
    }
    return channels::parse_channel_spec(text);
}

graphs::Graph require_graph(const RunConfig &c) {
    if (c.graph.empty()) throw ValidationError("--graph is required");
    return graphs::load_graph(c.graph);
}

graphdiag::PauliFamily pauli_family(const channels::ChannelSpec &spec) {
    if (!spec.is_pauli()) {
        throw UnsupportedError("channel kind '" + spec.kind + "' has no graph-diagonal fast path");
    }
    return [spec](double p) { return spec.pauli_at(p); };
}

Json edge_json(const std::optional<std::pair<int, int>> &e) {
    if (!e) return nullptr;
    return Json::array({e->first, e->second});
}

Json opt_number(const std::optional<double> &x) { return x ? number(*x) : Json(nullptr); }

/// Threshold value, or the diagnostic when the bisection found no crossing.
Json threshold_cell(const numeric::ThresholdResult &r) {
    return r.sign_change_found ? number(r.value) : Json("no_crossing");
}

/// Cell for a quantity defined only on part of the sweep; "none" outside it.
template <typename F>
Json guarded(F &&f) {
    try {
        return number(f());
    } catch (const ValidationError &) {
        return "none";
    }
}

std::vector<std::size_t> parse_size_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.find('-');
        try {
            if (colon == std::string::npos) {
                out.push_back(std::stoul(item));
            } else {
                const auto lo = std::stoul(item.substr(0, colon));
                const auto hi = std::stoul(item.substr(colon + 1));
                if (hi < lo) throw ValidationError("degree range '" + item + "' is reversed");
                for (auto d = lo; d <= hi; d++) out.push_back(d);
            }
        } catch (const std::logic_error &) {
            throw ValidationError("bad degree list '" + text + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty degree list");
    return out;
}

}  // namespace

double parse_real(const std::string &text) {
    if (text == "pi") return std::numbers::pi;
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(text, &used);
    } catch (const std::logic_error &) {
        throw ValidationError("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(x)) throw ValidationError("not a number: '" + text + "'");
    return x;
}

Axis parse_axis(const std::string &text, bool kt_axis) {
    Axis a;
    a.kt = kt_axis;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() == 1) {
        a.start = a.stop = parse_real(parts[0]);
    } else if (parts.size() == 3) {
        a.start = parse_real(parts[0]);
        a.stop = parse_real(parts[1]);
        a.step = parse_real(parts[2]);
    } else {
        throw ValidationError("range must be 'start:stop:step' or a single value, got '" + text + "'");
    }
    if (!(a.step > 0)) throw ValidationError("range step must be positive");
    if (!(a.start <= a.stop)) throw ValidationError("range start must not exceed stop");
    if (!kt_axis && (a.start < 0 || a.stop > 1)) throw ValidationError("p range must lie in [0, 1]");
    if (kt_axis && a.start < 0) throw ValidationError("kt range must be non-negative");
    return a;
}

std::vector<Point> axis_points(const Axis &a) {
    // Index-based so the last point does not drift with accumulated steps.
    const auto count = static_cast<std::size_t>(std::floor((a.stop - a.start) / a.step * (1 + 1e-12))) + 1;
    if (count > 1000000) throw CapacityError("sweep has more than 10^6 points");
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; i++) {
        const double x = std::min(a.stop, a.start + static_cast<double>(i) * a.step);
        out.push_back(a.kt ? Point{std::exp(-x), x} : Point{x, kt_of(x)});
    }
    return out;
}

Json RunConfig::to_json() const {
    Json j;
    j["command"] = command;
    if (!graph.empty()) j["graph"] = graph;
    j["channel"] = channel;
    if (sweep) {
        j["sweep"] = {{"axis", sweep->kt ? "kt" : "p"}, {"start", sweep->start}, {"stop", sweep->stop},
                      {"step", sweep->step}};
    }
    j["jobs"] = jobs;
    j["tol_root"] = tol.abs_root;
    j["tol_eig"] = tol.eig_zero_per_dim;
    return j;
}

Report run_ghz(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    r.config["n"] = c.n;
    r.config["crit"] = c.crit;
    if (c.n < 2) throw ValidationError("--n must be at least 2");
    if (c.n > ghz::kMaxQubits) throw CapacityError("n exceeds " + std::to_string(ghz::kMaxQubits));
    const auto spec = load_channel(c.channel);
    const bool qo = spec.kind == "qo" || spec.kind == "decay";
    if (!qo && spec.kind != "depolarizing") {
        throw UnsupportedError("channel must be depolarizing, qo or decay");
    }
    r.config["t_max"] = c.t_max;

    std::vector<std::size_t> ks;
    if (c.crit == "all") {
        for (std::size_t k = 1; k <= c.n / 2; k++) ks.push_back(k);
    } else if (c.crit.rfind("k=", 0) == 0) {
        const double k = parse_real(c.crit.substr(2));
        if (k < 1 || k != std::floor(k) || k + 1 > static_cast<double>(c.n)) {
            throw ValidationError("split size k must lie in 1..N-1");
        }
        ks.push_back(static_cast<std::size_t>(k));
    } else {
        throw ValidationError("--crit expects k=K or all");
    }

    if (!c.sweep) {
        r.columns = {"n", "k", "p_crit", "kt_crit"};
        std::vector<numeric::ThresholdResult> res(ks.size());
        parallel_for(ks.size(), c.jobs, [&](std::size_t i) {
            res[i] = qo ? ghz::ghz_lifetime_qo(c.n, ks[i], spec.qo, c.t_max, c.tol)
                        : ghz::ghz_lifetime(c.n, ks[i], c.tol);
        });
        for (std::size_t i = 0; i < ks.size(); i++) {
            const auto &t = res[i];
            if (!t.sign_change_found) {
                r.add_row({c.n, ks[i], "never_ppt", "never_ppt"});
                r.warnings.push_back("k=" + std::to_string(ks[i]) + ": no PPT crossing found" +
                                     (qo ? " up to t_max" : ""));
                continue;
            }
            // QO thresholds come out in time; kappa is 1 so kt = t.
            const double p = qo ? std::exp(-t.value) : t.value;
            r.add_row({c.n, ks[i], number(p), number(qo ? t.value : kt_of(p))});
        }
        return r;
    }

    const auto pts = axis_points(*c.sweep);
    if (qo) {
        r.columns = {"p", "kt", "k", "margin", "ppt", "distillable_lower", "upper_M"};
    } else {
        r.columns = {"p", "kt", "k", "margin", "ppt", "upper_M", "lower_M", "upper_m"};
    }
    std::vector<std::vector<Json>> rows(pts.size() * ks.size());
    parallel_for(rows.size(), c.jobs, [&](std::size_t idx) {
        const Point pt = pts[idx / ks.size()];
        const std::size_t k = ks[idx % ks.size()];
        if (qo) {
            const auto d = ghz::ghz_qo_coeffs(c.n, spec.qo, pt.kt);
            const double m = ghz::ppt_margin(d, k);
            const auto up = ghz::blockwise_qo_upper_M(spec.qo, pt.kt);
            rows[idx] = {number(pt.p), number(pt.kt), k, number(m), ghz::ghz_ppt_condition(d, k),
                         ghz::ghz_qo_distillable_lower(c.n, spec.qo, pt.kt), opt_number(up)};
        } else {
            const auto d = ghz::ghz_depol_coeffs(c.n, pt.p);
            rows[idx] = {number(pt.p),
                         number(pt.kt),
                         k,
                         number(ghz::ppt_margin(d, k)),
                         ghz::ghz_ppt_condition(d, k),
                         guarded([&] { return ghz::blockwise_upper_M(pt.p); }),
                         guarded([&] { return ghz::blockwise_lower_M(pt.p); }),
                         guarded([&] { return ghz::blockwise_upper_m(c.n, pt.p); })};
        }
    });
    for (auto &row : rows) r.add_row(std::move(row));
    return r;
}

Report run_lower(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    const auto g = require_graph(c);
    const auto spec = load_channel(c.channel);
    const auto rep = pairdistill::lifetime_lower_bound(g, pauli_family(spec), c.tol, c.jobs);

    r.summary["p_spanning"] = opt_number(rep.p_spanning);
    r.summary["kt_spanning"] = rep.p_spanning ? number(kt_of(*rep.p_spanning)) : Json(nullptr);
    r.summary["p_all_edges"] = opt_number(rep.p_all_edges);
    r.summary["kt_all_edges"] = rep.p_all_edges ? number(kt_of(*rep.p_all_edges)) : Json(nullptr);
    r.summary["bottleneck_edge"] = edge_json(rep.bottleneck_edge);
    r.summary["weakest_edge"] = edge_json(rep.weakest_edge);
    r.warnings.push_back("universal_kt = 2 ln 2 / (dk + dl + 2), taken with a positive sign so that universal_p = exp(-universal_kt)");
    if (!rep.p_spanning) r.warnings.push_back("NPT edges never span the graph");

    if (c.sweep) {
        r.columns = {"p", "kt", "npt_edges", "spanning"};
        for (const Point &pt : axis_points(*c.sweep)) {
            std::size_t npt = 0;
            for (const auto &e : rep.edges) npt += e.p_threshold <= pt.p;
            r.add_row({number(pt.p), number(pt.kt), npt, rep.p_spanning && *rep.p_spanning <= pt.p});
        }
        return r;
    }
    r.columns = {"u", "v", "phi", "dk", "dl", "dsym", "p_threshold", "kt_threshold", "universal_p", "universal_kt"};
    for (const auto &e : rep.edges) {
        const auto d = pairdistill::edge_degrees(g, e.u, e.v);
        const auto ub = pairdistill::universal_lower_bound(d.dk, d.dl);
        r.add_row({e.u, e.v, number(e.phi), d.dk, d.dl, d.dsym, number(e.p_threshold),
                   number(kt_of(e.p_threshold)), number(ub.p), number(ub.kt)});
    }
    return r;
}

namespace {

/// Smallest Jamiolkowski-PPT eigenvalue; non-negative iff entanglement breaking.
double eb_margin(const channels::ChannelMatrix &m, const numeric::Tolerance &tol) {
    return numeric::min_eig(channels::transpose_output(channels::jamiolkowski_state(m)), tol);
}

Report upper_eb(const RunConfig &c, Report r) {
    const auto spec = load_channel(c.channel);
    r.columns = {"channel", "p_eb_closed", "p_eb_jamiolkowski", "kt_eb"};
    if (spec.is_named()) {
        // A Pauli channel breaks entanglement iff every weight is at most 1/2.
        const double closed = spec.kind == "depolarizing" ? 1.0 / 3.0 : 0.0;
        const auto f = [&](double p) { return eb_margin(channels::to_matrix(spec.pauli_at(p)), c.tol); };
        const auto t = numeric::bisect(f, 0.0, 1.0, c.tol);
        const Json jam = t.sign_change_found ? number(t.value) : number(closed);
        if (!t.sign_change_found) r.warnings.push_back("Jamiolkowski margin touches zero only at the endpoint");
        r.add_row({spec.kind, number(closed), jam, number(kt_of(closed))});
        return r;
    }
    if (spec.kind == "pauli") {
        const bool eb = channels::is_entanglement_breaking_pauli(spec.pauli);
        r.columns = {"channel", "entanglement_breaking", "jamiolkowski_min_eig"};
        r.add_row({spec.kind, eb, number(eb_margin(channels::to_matrix(spec.pauli), c.tol))});
        return r;
    }
    const auto f = [&](double t) {
        return eb_margin(channels::to_matrix(channels::qo_snapshot(spec.qo, t)), c.tol);
    };
    r.columns = {"channel", "t_eb_closed", "t_eb_jamiolkowski", "p_eb"};
    if (!channels::is_entanglement_breaking_qo(spec.qo, c.t_max)) {
        r.add_row({spec.kind, "never", "never", "never"});
        r.warnings.push_back("channel is not entanglement breaking for t <= t_max");
        return r;
    }
    const auto closed = numeric::bisect(
        [&](double t) { return channels::is_entanglement_breaking_qo(spec.qo, t) ? 1.0 : -1.0; }, 0.0, c.t_max,
        c.tol);
    const auto jam = numeric::bisect(f, 0.0, c.t_max, c.tol);
    r.add_row({spec.kind, threshold_cell(closed), threshold_cell(jam),
               closed.sign_change_found ? number(std::exp(-closed.value)) : Json(nullptr)});
    return r;
}

Report upper_ising(const RunConfig &c, Report r) {
    const auto g = require_graph(c);
    const auto spec = load_channel(c.channel);
    const auto family = pauli_family(spec);
    const auto w = isingsep::weighted_graph_threshold(g, family, c.tol);
    r.columns = {"u", "v", "phi", "p_z"};
    for (const auto &e : w.graph.edges) r.add_row({e.u, e.v, number(e.phi), number(e.p_z)});
    r.summary["p_z"] = number(w.graph.p_z);
    r.summary["argmin_edge"] = Json::array({w.graph.argmin_edge.first, w.graph.argmin_edge.second});
    r.summary["weak_bound"] = number(w.graph.weak_bound);
    r.summary["p_crit"] = number(w.p_crit);
    r.summary["kt_crit"] = number(kt_of(w.p_crit));
    r.warnings.push_back("separable for p below p_crit; only sigma_z noise enters the certificate");
    return r;
}

Report upper_ppt(const RunConfig &c, Report r) {
    r.columns = {"estimate", "degree", "q", "p", "kt"};
    const auto add = [&](const std::string &name, Json deg, const numeric::ThresholdResult &t, bool dephasing) {
        const double p = dephasing ? graphdiag::dephasing_p_from_q(t.value) : graphdiag::depolarizing_p_from_q(t.value);
        r.add_row({name, std::move(deg), threshold_cell(t), number(p), number(kt_of(p))});
    };
    add("single", nullptr, graphdiag::estimate_single_root(c.tol), false);
    add("pair", nullptr, graphdiag::estimate_pair_root(c.tol), false);
    std::vector<std::size_t> degs;
    if (!c.graph.empty()) {
        const auto g = graphs::load_graph(c.graph);
        for (std::size_t k = 0; k < g.n; k++) degs.push_back(graphs::degree(g, static_cast<int>(k)));
        std::sort(degs.begin(), degs.end());
        degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
        degs.erase(std::remove(degs.begin(), degs.end(), std::size_t{0}), degs.end());
    } else {
        degs = {2};
    }
    for (auto d : degs) add("dephasing", d, graphdiag::estimate_dephasing_root(d, c.tol), true);
    return r;
}

}  // namespace

Report run_upper(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    r.config["method"] = c.method;
    if (c.method == "eb") return upper_eb(c, std::move(r));
    if (c.method == "ising") return upper_ising(c, std::move(r));
    if (c.method == "ppt") return upper_ppt(c, std::move(r));
    throw ValidationError("--method must be eb, ising or ppt");
}

Report run_scan(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    const auto g = require_graph(c);
    if (g.n > graphs::kMaxEnumerate) {
        throw CapacityError("n exceeds " + std::to_string(graphs::kMaxEnumerate));
    }
    if (g.n > 10) r.warnings.push_back("scan over n > 10 enumerates 2^(n-1)-1 partitions and may be slow");
    const auto spec = load_channel(c.channel);
    const auto res = graphdiag::scan_partitions(g, pauli_family(spec), c.tol, c.jobs);
    r.columns = {"partition_mask", "size_A", "status", "p_crit", "kt_crit"};
    for (const auto &pr : res.partitions) {
        const auto size = static_cast<std::size_t>(std::popcount(pr.part.a_mask));
        const auto status = graphdiag::to_string(pr.status);
        if (pr.status == graphdiag::PartitionStatus::crossing) {
            r.add_row({pr.part.a_mask, size, status, number(pr.p_crit), number(kt_of(pr.p_crit))});
        } else {
            r.add_row({pr.part.a_mask, size, status, status, status});
        }
    }
    const auto pick = [&](const std::optional<std::size_t> &i) -> Json {
        if (!i) return nullptr;
        const auto &pr = res.partitions[*i];
        return {{"partition_mask", pr.part.a_mask}, {"p_crit", number(pr.p_crit)}};
    };
    r.summary["first_ppt"] = pick(res.first_ppt);
    r.summary["last_ppt"] = pick(res.last_ppt);
    r.warnings.push_back("NPT across a split is necessary for distillability; sufficiency is not checked");
    return r;
}

Report run_weighted(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    const auto spec = load_channel(c.channel);
    const auto family = pauli_family(spec);
    if (!c.sweep_phi) {
        const auto g = require_graph(c);
        const auto w = isingsep::weighted_graph_threshold(g, family, c.tol);
        r.columns = {"u", "v", "phi", "p_z"};
        for (const auto &e : w.graph.edges) r.add_row({e.u, e.v, number(e.phi), number(e.p_z)});
        r.summary["p_z"] = number(w.graph.p_z);
        r.summary["p_crit"] = number(w.p_crit);
        r.summary["kt_crit"] = number(kt_of(w.p_crit));
        r.summary["vertex_p_z"] = Json::array();
        for (double x : w.vertex_p_z) r.summary["vertex_p_z"].push_back(number(x));
        return r;
    }
    r.config["sweep_phi"] = {{"start", c.sweep_phi->start}, {"stop", c.sweep_phi->stop}, {"step", c.sweep_phi->step}};
    r.config["degrees"] = c.degrees;
    const auto degs = parse_size_list(c.degrees);
    const Axis &ax = *c.sweep_phi;
    if (!(ax.start > 0) || ax.stop > std::numbers::pi * (1 + 1e-12)) {
        throw ValidationError("phi range must lie in (0, pi]");
    }
    std::vector<double> phis;
    for (const Point &pt : axis_points(ax)) phis.push_back(std::min(pt.p, std::numbers::pi));
    r.columns = {"phi", "degree", "p_z", "p_crit", "kt_crit"};
    std::vector<std::vector<Json>> rows(phis.size() * degs.size());
    parallel_for(rows.size(), c.jobs, [&](std::size_t idx) {
        const double phi = phis[idx / degs.size()];
        const std::size_t m = degs[idx % degs.size()];
        const auto t = isingsep::weighted_gate_threshold(phi, m, m, c.tol);
        if (!t.sign_change_found) {
            rows[idx] = {number(phi), m, "no_crossing", "no_crossing", "no_crossing"};
            return;
        }
        const double p = isingsep::channel_parameter_for_dephasing(family, t.value, c.tol);
        rows[idx] = {number(phi), m, number(t.value), number(p), number(kt_of(p))};
    });
    for (auto &row : rows) r.add_row(std::move(row));
    return r;
}

Report run_encode(const RunConfig &c) {
    Report r;
    r.config = c.to_json();
    r.config["kt"] = c.kt;
    r.config["levels"] = c.levels;
    if (c.blocks) r.config["M"] = *c.blocks;
    if (!(c.kt > 0)) throw ValidationError("--kt must be positive");
    const auto be = encode::breakeven(c.tol);
    r.summary["breakeven_p"] = number(be.p);
    r.summary["breakeven_kt"] = number(be.kt);
    if (c.kt >= be.kt) r.warnings.push_back("kt is above break-even; encoding shortens the lifetime");

    const auto levels = encode::level_recursion(c.kt, c.levels);
    r.columns = {"j",
                 "q_j",
                 "kt_eff_exact",
                 "kt_eff_approx",
                 "physical_qubits",
                 "eps_j",
                 "log10_kt_eff_exact",
                 "log10_kt_eff_approx",
                 "M_approx",
                 "M_exact"};
    if (c.blocks) r.columns.push_back("encoded_lifetime_kt");
    for (const auto &lv : levels) {
        std::vector<Json> row = {lv.j,
                                 number(lv.q),
                                 number(lv.kt_exact),
                                 number(lv.kt_approx),
                                 lv.physical_qubits,
                                 number(lv.eps),
                                 number(lv.log10_kt_exact),
                                 number(lv.log10_kt_approx),
                                 guarded([&] { return encode::encoded_block_bound(c.kt, lv.j, encode::Pipeline::approx); }),
                                 guarded([&] { return encode::encoded_block_bound(c.kt, lv.j, encode::Pipeline::exact); })};
        if (c.blocks) {
            try {
                row.push_back(threshold_cell(encode::encoded_lifetime(*c.blocks, lv.j, c.tol)));
            } catch (const ValidationError &e) {
                row.push_back("none");
                r.warnings.push_back("j=" + std::to_string(lv.j) + ": " + e.what());
            }
        }
        r.add_row(std::move(row));
    }
    return r;
}

namespace {

graphs::Graph random_graph(std::mt19937_64 &rng, std::size_t n) {
    graphs::Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t u = 0; u < n; u++) {
        for (std::size_t v = u + 1; v < n; v++) {
            if (coin(rng)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

channels::PauliChannel random_pauli(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> w{};
    double s = 0;
    for (auto &x : w) s += (x = e(rng));
    w[0] += s;  // keep the identity weight dominant so spectra stay well separated from zero
    s *= 2;
    return channels::make_pauli(w[0] / s, w[1] / s, w[2] / s, w[3] / s);
}

double max_diff(std::vector<double> a, std::vector<double> b, bool sort) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (sort) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
    }
    double m = 0;
    for (std::size_t i = 0; i < a.size(); i++) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

Report run_oracle_check(const RunConfig &c, bool &all_passed) {
    Report r;
    r.config = c.to_json();
    r.config["seed"] = c.seed;
    r.config["trials"] = c.trials;
    r.config["max_n"] = c.max_n;
    if (c.max_n < 2) throw ValidationError("--max-n must be at least 2");
    if (c.max_n > graphs::kMaxDense) {
        throw CapacityError("dense oracle is capped at " + std::to_string(graphs::kMaxDense) + " qubits");
    }
    if (c.trials == 0) throw ValidationError("--trials must be positive");

    struct Trial {
        double lambda_direct = 0, lambda_oracle = 0, pt = 0, pair = 0;
    };
    std::vector<Trial> out(c.trials);
    // Each trial owns a generator seeded from (seed, index), so results ignore --jobs.
    parallel_for(c.trials, c.jobs, [&](std::size_t i) {
        std::seed_seq seq{c.seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        const std::size_t n = 2 + i % (c.max_n - 1);
        const auto g = random_graph(rng, n);
        const auto ch = random_pauli(rng);
        auto s = oracle::dense_graph_state(g);
        oracle::apply_channels(s, {channels::to_matrix(ch)});
        const auto lam = graphdiag::lambda_from_pauli(g, ch);
        out[i].lambda_direct = max_diff(lam, graphdiag::lambda_direct(g, ch), false);
        out[i].lambda_oracle = max_diff(lam, oracle::graph_diagonal_coefficients(s, g), false);
        std::uniform_int_distribution<graphs::Mask> pick(1, g.all() - 1);
        const graphs::Mask a = pick(rng);
        out[i].pt = max_diff(graphdiag::pt_spectrum(g, lam, a).values, oracle::pt_spectrum(s, a), true);
        // Bell-pair NPT verdict along the first edge, if any.
        const auto edges = g.edges();
        if (!edges.empty()) {
            const auto [u, v] = edges.front();
            const auto b = pairdistill::reduced_pair_state(g, u, v, ch);
            const auto w = pairdistill::weighted_reduced_pair(g, u, v, ch);
            out[i].pair = std::abs(pairdistill::pair_pt_min(pairdistill::bell_to_dense(b)) - pairdistill::pair_pt_min(w));
        }
    });

    r.columns = {"check", "cases", "max_deviation", "tolerance", "pass"};
    const auto add = [&](const std::string &name, double Trial::*field, double tol) {
        double m = 0;
        for (const auto &t : out) m = std::max(m, t.*field);
        const bool ok = m <= tol;
        all_passed = all_passed && ok;
        r.add_row({name, c.trials, number(m), number(tol), ok});
    };
    all_passed = true;
    add("lambda_fast_vs_direct", &Trial::lambda_direct, 1e-10);
    add("lambda_fast_vs_oracle", &Trial::lambda_oracle, 1e-10);
    add("pt_spectrum_vs_oracle", &Trial::pt, 1e-9);
    add("pair_clifford_vs_weighted", &Trial::pair, 1e-9);
    r.summary["all_passed"] = all_passed;
    return r;
}

}  // namespace qdeco::cli
