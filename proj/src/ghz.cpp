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

#include "qdeco/ghz.hpp"

#include <cmath>
#include <numbers>

#include "qdeco/errors.hpp"

namespace qdeco::ghz {

namespace {

void check_n(std::size_t n) {
    if (n < 2) throw ValidationError("GHZ routines need n >= 2");
    if (n > kMaxQubits) throw CapacityError("GHZ qubit count exceeds the cap");
}

void check_open_p(double p) {
    if (!(p > 0 && p < 1)) throw ValidationError("p must lie in (0, 1)");
}

double log_binom(std::size_t n, std::size_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

GhzDiagonal ghz_depol_coeffs(std::size_t n, double p) {
    check_n(n);
    if (!(p >= 0 && p <= 1)) throw ValidationError("p must lie in [0, 1]");
    GhzDiagonal d{n, std::vector<double>(n + 1), std::pow(p, double(n)) / 2, true};
    const double scale = std::pow(0.5, double(n + 1));
    for (std::size_t k = 0; k <= n; k++) {
        const double up = std::pow(1 + p, double(k)) * std::pow(1 - p, double(n - k));
        const double dn = std::pow(1 + p, double(n - k)) * std::pow(1 - p, double(k));
        d.lam[k] = (up + dn) * scale;
    }
    return d;
}

GhzDiagonal ghz_qo_coeffs(std::size_t n, const channels::QoChannel &ch, double t) {
    check_n(n);
    const channels::QoSnapshot s = channels::qo_snapshot(ch, t);
    GhzDiagonal d{n, std::vector<double>(n + 1), std::pow(s.b, double(n)) / 2, true};
    for (std::size_t k = 0; k <= n; k++) {
        d.lam[k] = 0.5 * (std::pow(s.c, double(k)) * std::pow(1 - s.c, double(n - k)) +
                          std::pow(1 - s.a, double(k)) * std::pow(s.a, double(n - k)));
    }
    return d;
}

double normalization(const GhzDiagonal &d) {
    double s = 0;
    for (std::size_t k = 0; k <= d.n; k++) {
        if (d.lam[k] > 0) s += std::exp(log_binom(d.n, k) + std::log(d.lam[k]));
    }
    return s;
}

double ppt_margin(const GhzDiagonal &d, std::size_t k) {
    if (k < 1 || k + 1 > d.n) throw ValidationError("split size k must lie in 1..N-1");
    return d.lam[k] * d.lam[d.n - k] - d.mu * d.mu;
}

bool ghz_ppt_condition(const GhzDiagonal &d, std::size_t k) {
    const double prod = d.lam[k] * d.lam[d.n - k];
    return ppt_margin(d, k) >= -1e-14 * std::max(prod, d.mu * d.mu);
}

numeric::ThresholdResult ghz_lifetime(std::size_t n, std::size_t k, const numeric::Tolerance &tol) {
    check_n(n);
    if (k < 1 || k + 1 > n) throw ValidationError("split size k must lie in 1..N-1");
    return numeric::bisect([&](double p) { return ppt_margin(ghz_depol_coeffs(n, p), k); }, 0.0, 1.0, tol);
}

numeric::ThresholdResult ghz_lifetime_qo(std::size_t n, std::size_t k, const channels::QoChannel &ch,
                                         double t_max, const numeric::Tolerance &tol) {
    check_n(n);
    if (k < 1 || k + 1 > n) throw ValidationError("split size k must lie in 1..N-1");
    return numeric::bisect([&](double t) { return ppt_margin(ghz_qo_coeffs(n, ch, t), k); }, 0.0, t_max, tol);
}

GhzDiagonal ghz_depolarize(const GhzDiagonal &d) {
    GhzDiagonal out = d;
    for (std::size_t k = 0; k <= d.n; k++) out.lam[k] = 0.5 * (d.lam[k] + d.lam[d.n - k]);
    return out;
}

bool ghz_qo_distillable_lower(std::size_t n, const channels::QoChannel &ch, double t) {
    check_n(n);
    const channels::QoSnapshot s = channels::qo_snapshot(ch, t);
    const double a = s.a, c = s.c;
    const double bn = std::pow(s.b, double(n));
    for (std::size_t k = 1; k <= n / 2; k++) {
        const double nk = double(n - k), kk = double(k);
        const double worst = std::max({std::pow(a, kk) * std::pow(1 - a, nk), std::pow(a, nk) * std::pow(1 - a, kk),
                                       std::pow(c, kk) * std::pow(1 - c, nk), std::pow(c, nk) * std::pow(1 - c, kk)});
        if (!(bn > 2 * worst)) return false;
    }
    return true;
}

double blockwise_upper_M(double p) {
    check_open_p(p);
    return (std::log1p(-p) - std::log1p(p)) / (std::log(2 * p) - std::log1p(p));
}

double blockwise_lower_M(double p) {
    check_open_p(p);
    return (std::log(2 * (1 - p)) - std::log1p(p)) / (std::log(2 * p) - std::log1p(p));
}

double blockwise_upper_m(std::size_t n, double p) {
    check_open_p(p);
    return double(n) * std::log(2 * p / (1 + p)) / std::log((1 - p) / (1 + p));
}

std::optional<double> blockwise_qo_upper_M(const channels::QoChannel &ch, double t) {
    channels::validate(ch);
    if (ch.s == 0 || ch.s == 1) return std::nullopt;
    if (!(t > 0)) throw ValidationError("blockwise_qo_upper_M needs t > 0");
    const channels::QoSnapshot s = channels::qo_snapshot(ch, t);
    const double lac = std::log(s.a * s.c);
    return (lac - std::log((1 - s.a) * (1 - s.c))) / (lac + ch.B * t);
}

bool ghz_lambda_product_monotonicity(const GhzDiagonal &d) {
    for (std::size_t k = 1; k + 1 <= d.n / 2; k++) {
        const double here = d.lam[k] * d.lam[d.n - k];
        const double next = d.lam[k + 1] * d.lam[d.n - k - 1];
        if (here < next * (1 - 1e-12)) return false;
    }
    return true;
}

double star_pair_lifetime_estimate(std::size_t n) {
    check_n(n);
    return std::numbers::ln2 / double(n);
}

}  // namespace qdeco::ghz
