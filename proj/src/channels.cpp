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

#include "qdeco/channels.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "qdeco/errors.hpp"

namespace qdeco::channels {

namespace {

constexpr cplx I1{0, 1};

const std::array<Kraus2, 4> &paulis() {
    static const std::array<Kraus2, 4> s = {{
        {{{1, 0}, {0, 1}}},
        {{{0, 1}, {1, 0}}},
        {{{0, -I1}, {I1, 0}}},
        {{{1, 0}, {0, -1}}},
    }};
    return s;
}

void check_unit_interval(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw ValidationError(std::string(what) + " must lie in [0, 1]");
    }
}

/// The matrix M with (M P M) the channel E o Z-conjugation in Pauli-basis form.
ChannelMatrix conjugate_by_m(const ChannelMatrix &ch) {
    static const std::array<std::array<cplx, 4>, 4> m = {{
        {{0, 0, 0, 1}},
        {{0, 0, I1, 0}},
        {{0, -I1, 0, 0}},
        {{1, 0, 0, 0}},
    }};
    ChannelMatrix out;
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            cplx s = 0;
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    s += m[a][i] * ch.p[i][j] * m[j][b];
                }
            }
            out.p[a][b] = s;
        }
    }
    return out;
}

HermitianMatrix as_hermitian(const ChannelMatrix &ch) {
    HermitianMatrix h(4);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            h(i, j) = ch.p[i][j];
        }
    }
    return h;
}

}  // namespace

cplx pauli_product_phase(int a, int b) {
    if (a == 0 || b == 0 || a == b) {
        return 1;
    }
    // Cyclic order X -> Y -> Z gives +i.
    return ((b - a + 3) % 3 == 1) ? I1 : -I1;
}

PauliChannel make_pauli(double p0, double p1, double p2, double p3) {
    PauliChannel ch{{p0, p1, p2, p3}};
    validate(ch);
    return ch;
}

void validate(const PauliChannel &ch) {
    double sum = 0;
    for (double x : ch.p) {
        if (!(x >= -1e-12 && x <= 1 + 1e-12)) {
            throw ValidationError("Pauli channel probabilities must lie in [0, 1]");
        }
        sum += x;
    }
    if (std::abs(sum - 1) > 1e-12) {
        throw ValidationError("Pauli channel probabilities must sum to 1");
    }
}

void validate(const QoChannel &ch) {
    if (!(ch.B >= 0 && ch.C >= 0) || !std::isfinite(ch.B) || !std::isfinite(ch.C)) {
        throw ValidationError("QO rates B and C must be finite and non-negative");
    }
    if (2 * ch.C < ch.B * (1 - 1e-12)) {
        throw ValidationError("QO rates must satisfy 2C >= B");
    }
    check_unit_interval(ch.s, "QO steady-state weight s");
}

void validate(const ChannelMatrix &ch) {
    const HermitianMatrix h = as_hermitian(ch);
    if (h.hermiticity_defect() > 1e-10) {
        throw ValidationError("channel matrix is not Hermitian");
    }
    if (numeric::min_eig(h) < -1e-10) {
        throw ValidationError("channel matrix is not completely positive");
    }
    // sum_ij p_ij sigma_j sigma_i must equal the identity.
    std::array<cplx, 4> coef{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            coef[i ^ j] += ch.p[i][j] * pauli_product_phase(j, i);
        }
    }
    if (std::abs(coef[0] - 1.0) > 1e-10 || std::abs(coef[1]) > 1e-10 || std::abs(coef[2]) > 1e-10 ||
        std::abs(coef[3]) > 1e-10) {
        throw ValidationError("channel matrix is not trace preserving");
    }
}

PauliChannel named_channel(NamedKind kind, double p) {
    check_unit_interval(p, "channel parameter p");
    switch (kind) {
        case NamedKind::depolarizing:
            return {{(1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4}};
        case NamedKind::dephasing:
            return {{(1 + p) / 2, 0, 0, (1 - p) / 2}};
        case NamedKind::bitflip:
            return {{(1 + p) / 2, (1 - p) / 2, 0, 0}};
    }
    throw ValidationError("unknown channel kind");
}

NamedKind parse_named_kind(const std::string &name) {
    if (name == "depolarizing") return NamedKind::depolarizing;
    if (name == "dephasing") return NamedKind::dephasing;
    if (name == "bitflip") return NamedKind::bitflip;
    throw ValidationError("unknown channel kind '" + name + "'");
}

std::string to_string(NamedKind kind) {
    switch (kind) {
        case NamedKind::depolarizing:
            return "depolarizing";
        case NamedKind::dephasing:
            return "dephasing";
        case NamedKind::bitflip:
            return "bitflip";
    }
    return "?";
}

QoSnapshot qo_snapshot(const QoChannel &ch, double t) {
    validate(ch);
    if (!(t >= 0) || !std::isfinite(t)) {
        throw ValidationError("QO time must be finite and non-negative");
    }
    const double eb = std::exp(-ch.B * t);
    const double ec = std::exp(-ch.C * t);
    QoSnapshot s;
    s.lambda = {(1 + 2 * ec + eb) / 4, (1 - eb) / 4, (1 - eb) / 4, (1 - 2 * ec + eb) / 4};
    s.mu = (2 * ch.s - 1) * (1 - eb) / 4;
    s.a = ch.s + (1 - ch.s) * eb;
    s.b = ec;
    s.c = (1 - ch.s) + ch.s * eb;
    return s;
}

ChannelMatrix to_matrix(const PauliChannel &ch) {
    ChannelMatrix m;
    for (int i = 0; i < 4; i++) {
        m.p[i][i] = ch.p[i];
    }
    return m;
}

ChannelMatrix to_matrix(const QoSnapshot &snap) {
    ChannelMatrix m;
    for (int i = 0; i < 4; i++) {
        m.p[i][i] = snap.lambda[i];
    }
    m.p[0][3] = m.p[3][0] = snap.mu;
    m.p[1][2] = -I1 * snap.mu;
    m.p[2][1] = I1 * snap.mu;
    return m;
}

ChannelMatrix from_kraus(const std::vector<Kraus2> &ops) {
    ChannelMatrix m;
    for (const auto &e : ops) {
        // e = sum_i c_i sigma_i with c_i = tr(sigma_i e) / 2.
        std::array<cplx, 4> c{};
        for (int i = 0; i < 4; i++) {
            const auto &s = paulis()[i];
            c[i] = (s[0][0] * e[0][0] + s[0][1] * e[1][0] + s[1][0] * e[0][1] + s[1][1] * e[1][1]) / 2.0;
        }
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                m.p[i][j] += c[i] * std::conj(c[j]);
            }
        }
    }
    return m;
}

ChannelMatrix decay_channel(double kt) {
    if (!(kt >= 0) || !std::isfinite(kt)) {
        throw ValidationError("decay time must be finite and non-negative");
    }
    const double gamma = -std::expm1(-kt);
    const Kraus2 e1 = {{{1, 0}, {0, std::sqrt(1 - gamma)}}};
    const Kraus2 e2 = {{{0, std::sqrt(gamma)}, {0, 0}}};
    return from_kraus({e1, e2});
}

ChannelMatrix compose(const ChannelMatrix &after, const ChannelMatrix &before) {
    ChannelMatrix r;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            if (after.p[i][j] == cplx{}) continue;
            for (int k = 0; k < 4; k++) {
                for (int l = 0; l < 4; l++) {
                    if (before.p[k][l] == cplx{}) continue;
                    r.p[i ^ k][l ^ j] += after.p[i][j] * before.p[k][l] * pauli_product_phase(i, k) *
                                         pauli_product_phase(l, j);
                }
            }
        }
    }
    return r;
}

double compose_dephasing(double pa, double pb) {
    check_unit_interval(pa, "dephasing parameter");
    check_unit_interval(pb, "dephasing parameter");
    return pa * pb;
}

double max_abs_diff(const ChannelMatrix &a, const ChannelMatrix &b) {
    double worst = 0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            worst = std::max(worst, std::abs(a.p[i][j] - b.p[i][j]));
        }
    }
    return worst;
}

HermitianMatrix jamiolkowski_state(const ChannelMatrix &ch) {
    // |Phi_i> = (sigma_i x 1)|Phi+>, component (out, ref) = sigma_i[out][ref] / sqrt 2.
    HermitianMatrix j(4);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            cplx s = 0;
            for (int i = 0; i < 4; i++) {
                for (int k = 0; k < 4; k++) {
                    s += ch.p[i][k] * paulis()[i][a >> 1][a & 1] * std::conj(paulis()[k][b >> 1][b & 1]);
                }
            }
            j(a, b) = s / 2.0;
        }
    }
    if (numeric::min_eig(j) < -1e-10) {
        throw ValidationError("Jamiolkowski state is not positive: channel is not CP");
    }
    return j;
}

HermitianMatrix transpose_output(const HermitianMatrix &j) {
    HermitianMatrix t(4);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            const int r2 = (c & 2) | (r & 1);
            const int c2 = (r & 2) | (c & 1);
            t(r, c) = j(r2, c2);
        }
    }
    return t;
}

bool is_entanglement_breaking_pauli(const PauliChannel &ch) {
    validate(ch);
    return *std::max_element(ch.p.begin(), ch.p.end()) <= 0.5 + 1e-12;
}

bool is_entanglement_breaking_qo(const QoChannel &ch, double t) {
    validate(ch);
    if (!(t >= 0)) {
        throw ValidationError("QO time must be non-negative");
    }
    // exp(Ct)(1 - exp(-Bt)), formed without overflow for large t.
    const double g = std::exp(ch.C * t) * -std::expm1(-ch.B * t);
    return ch.s * (1 - ch.s) * g * g >= 1 - 1e-12;
}

bool is_entanglement_breaking_jamiolkowski(const ChannelMatrix &ch, const numeric::Tolerance &tol) {
    return numeric::is_psd(transpose_output(jamiolkowski_state(ch)), tol);
}

DephasingSplit extract_dephasing(const ChannelMatrix &ch, double p_z) {
    if (p_z == 0) {
        throw ValidationError("extract_dephasing: p_z = 0 is singular");
    }
    check_unit_interval(p_z, "p_z");
    const ChannelMatrix mpm = conjugate_by_m(ch);
    DephasingSplit out;
    out.p_z = p_z;
    const double wa = (p_z + 1) / (2 * p_z);
    const double wb = (p_z - 1) / (2 * p_z);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out.residual.p[i][j] = wa * ch.p[i][j] + wb * mpm.p[i][j];
        }
    }
    out.feasible = numeric::min_eig(as_hermitian(out.residual)) >= -1e-10;
    return out;
}

std::optional<double> minimal_dephasing_pauli(const PauliChannel &ch) {
    validate(ch);
    const auto &p = ch.p;
    double q_min = 1;
    for (auto [x, y] : {std::pair{p[0], p[3]}, std::pair{p[1], p[2]}}) {
        const bool zx = x <= 0, zy = y <= 0;
        if (zx && zy) {
            continue;
        }
        if (zx != zy) {
            return std::nullopt;
        }
        q_min = std::min({q_min, x / y, y / x});
    }
    return (1 - q_min) / (1 + q_min);
}

std::optional<double> minimal_dephasing(const ChannelMatrix &ch, const numeric::Tolerance &tol) {
    auto slack = [&](double pz) {
        return numeric::min_eig(as_hermitian(extract_dephasing(ch, pz).residual)) + 1e-10;
    };
    constexpr double lo = 1e-9;
    if (slack(lo) > 0) {
        return lo;
    }
    numeric::ThresholdResult r = numeric::bisect(slack, lo, 1.0, tol);
    if (!r.sign_change_found || r.value >= 1 - 1e-9) {
        return std::nullopt;
    }
    return r.bracket.second;
}

bool ChannelSpec::is_named() const {
    return kind == "depolarizing" || kind == "dephasing" || kind == "bitflip";
}

bool ChannelSpec::is_pauli() const { return is_named() || kind == "pauli"; }

PauliChannel ChannelSpec::pauli_at(double p_) const {
    if (is_named()) {
        return named_channel(parse_named_kind(kind), p_);
    }
    if (kind == "pauli") {
        return pauli;
    }
    throw UnsupportedError("channel kind '" + kind + "' is not a Pauli channel");
}

std::string ChannelSpec::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    if (is_named() && p) j["p"] = *p;
    if (kind == "pauli") {
        for (int i = 0; i < 4; i++) j["p" + std::to_string(i)] = pauli.p[i];
    }
    if (kind == "qo") {
        j["B"] = qo.B;
        j["C"] = qo.C;
        j["s"] = qo.s;
    }
    if (kind == "decay") j["s"] = qo.s;
    if (t) j["t"] = *t;
    return j.dump();
}

ChannelSpec parse_channel_spec(const std::string &text) {
    nlohmann::json j;
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
    if (trimmed.empty() || trimmed[0] != '{') {
        j = {{"kind", trimmed}};
    } else {
        try {
            j = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::parse_error &e) {
            throw ValidationError(std::string("channel JSON: ") + e.what());
        }
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ValidationError("channel JSON: object with string field 'kind' required");
    }
    auto num = [&](const char *key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_number()) {
            throw ValidationError(std::string("channel JSON: field '") + key + "' must be a number");
        }
        return j[key].get<double>();
    };
    auto need = [&](const char *key) {
        auto v = num(key);
        if (!v) throw ValidationError(std::string("channel JSON: missing field '") + key + "'");
        return *v;
    };
    ChannelSpec s;
    s.kind = j["kind"].get<std::string>();
    s.t = num("t");
    if (s.is_named()) {
        s.p = num("p");
        if (s.p) check_unit_interval(*s.p, "channel parameter p");
    } else if (s.kind == "pauli") {
        s.pauli = make_pauli(need("p0"), need("p1"), need("p2"), need("p3"));
    } else if (s.kind == "qo") {
        s.qo = {need("B"), need("C"), need("s")};
        validate(s.qo);
    } else if (s.kind == "decay") {
        // kappa = 1: B = 2C = 1 and t is kappa t.
        s.qo = {1.0, 0.5, num("s").value_or(1.0)};
        if (s.qo.s != 0 && s.qo.s != 1) {
            throw ValidationError("decay channel requires s in {0, 1}");
        }
    } else {
        throw ValidationError("unknown channel kind '" + s.kind + "'");
    }
    if (s.t && !(*s.t >= 0)) {
        throw ValidationError("channel JSON: 't' must be non-negative");
    }
    return s;
}

}  // namespace qdeco::channels
