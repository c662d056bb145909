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

#include "qdeco/encode.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>
#include <utility>

#include "qdeco/errors.hpp"

namespace qdeco::encode {

namespace {

constexpr double kLn10 = std::numbers::ln10;

void check_kt(double kt) {
    if (!(kt > 0) || !std::isfinite(kt)) throw ValidationError("kt must be positive and finite");
}

void check_levels(std::size_t j) {
    if (j > kMaxLevels) throw CapacityError("encoding depth is limited to 12 levels");
}

/// kt_eff = -log(1 - 4 eps / 3), returned as (value, log10 value).
std::pair<double, double> kt_from_eps(double eps, double log_eps) {
    const double x = 4 * eps / 3;
    if (x >= 1) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    if (eps == 0 || eps < 1e-12) {
        // -log1p(-x) = x (1 + x/2 + ...); the correction is below 1e-12 here.
        const double l10 = (std::log(4.0 / 3) + log_eps) / kLn10;
        return {std::pow(10.0, l10), l10};
    }
    const double v = -std::log1p(-x);
    return {v, std::log10(v)};
}

}  // namespace

double logical_p(double p) {
    if (!(p >= 0 && p <= 1)) throw ValidationError("p must lie in [0, 1]");
    return std::pow(3 * p + 1, 4) * (4 - 3 * p) / 192 - 1.0 / 3;
}

std::vector<Level> level_recursion(double kt, std::size_t levels) {
    check_kt(kt);
    check_levels(levels);
    std::vector<Level> out;
    double eps = -0.75 * std::expm1(-kt);
    double log_eps = std::log(eps);
    const double log10_base = std::log10(7.5 * kt);
    for (std::size_t j = 0; j <= levels; j++) {
        if (j > 0) {
            // 1 - q' = eps^2 (10 - 20 eps + 15 eps^2 - 4 eps^3) with q = 1 - eps.
            const double poly = 10 - 20 * eps + 15 * eps * eps - 4 * eps * eps * eps;
            log_eps = 2 * log_eps + std::log(poly);
            eps = std::exp(log_eps);
        }
        Level L;
        L.j = j;
        L.eps = eps;
        L.log_eps = log_eps;
        L.q = 1 - eps;
        std::tie(L.kt_exact, L.log10_kt_exact) = j == 0 ? std::pair{kt, std::log10(kt)} : kt_from_eps(eps, log_eps);
        L.log10_kt_approx = j == 0 ? std::log10(kt) : std::ldexp(1.0, int(j)) * log10_base - std::log10(7.5);
        L.kt_approx = std::pow(10.0, L.log10_kt_approx);
        L.physical_qubits = 1;
        for (std::size_t i = 0; i < j; i++) L.physical_qubits *= 5;
        out.push_back(L);
    }
    return out;
}

Breakeven breakeven(const numeric::Tolerance &tol) {
    numeric::Tolerance t = tol;
    t.abs_root = std::min(tol.abs_root, 1e-13);
    const numeric::ThresholdResult r = numeric::bisect([](double p) { return logical_p(p) - p; }, 0.5, 0.999, t);
    if (!r.sign_change_found) throw EvaluationError("breakeven: no fixed point in (0.5, 1)");
    return {r.value, -std::log(r.value)};
}

double block_bound_from_delta(double delta) {
    if (!(delta > 0 && delta < 1)) throw ValidationError("delta must lie in (0, 1)");
    // p = 1 - delta: (log(1-p) - log(1+p)) / (log(2p) - log(1+p)).
    return (std::log(delta) - std::log(2 - delta)) / std::log1p(-delta / (2 - delta));
}

double block_bound_from_kt(double kt) {
    check_kt(kt);
    return block_bound_from_delta(-std::expm1(-kt));
}

double encoded_block_bound(double kt, std::size_t j, Pipeline pipeline) {
    const Level L = level_recursion(kt, j).back();
    const double kt_j = pipeline == Pipeline::exact ? L.kt_exact : L.kt_approx;
    if (!(kt_j > 0)) return std::numeric_limits<double>::infinity();
    return block_bound_from_kt(kt_j);
}

numeric::ThresholdResult encoded_lifetime(double M, std::size_t j, const numeric::Tolerance &tol) {
    check_levels(j);
    if (!(M >= 2)) throw ValidationError("block count M must be at least 2");
    numeric::Tolerance t = tol;
    t.abs_root = std::min(tol.abs_root, 1e-13);
    // Unencoded kt whose block bound is M; the bound falls as kt grows.
    const numeric::ThresholdResult base =
        numeric::bisect([M](double x) { return block_bound_from_kt(x) - M; }, 1e-12, 20.0, t);
    if (!base.sign_change_found) throw EvaluationError("encoded_lifetime: no unencoded threshold");
    const double target = base.value;
    if (j == 0) return base;
    const double kt_star = breakeven(tol).kt;
    if (!(target < kt_star)) {
        throw ValidationError("encoded_lifetime: target lies above the break-even point");
    }
    const double log_target = std::log10(target);
    return numeric::bisect(
        [&](double kt) { return level_recursion(kt, j).back().log10_kt_exact - log_target; }, target,
        kt_star * (1 - 1e-9), t);
}

}  // namespace qdeco::encode
