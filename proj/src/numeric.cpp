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

#include "qdeco/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdeco/errors.hpp"

namespace qdeco::numeric {

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    HermitianMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double> &d) {
    HermitianMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); i++) {
        m(i, i) = d[i];
    }
    return m;
}

cplx HermitianMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double HermitianMatrix::hermiticity_defect() const {
    double worst = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

namespace {

double checked(const std::function<double(double)> &f, double x) {
    double y = f(x);
    if (!std::isfinite(y)) {
        throw EvaluationError("bisect: objective is not finite at x=" + std::to_string(x));
    }
    return y;
}

}  // namespace

ThresholdResult bisect(const std::function<double(double)> &f, double lo, double hi,
                       const Tolerance &tol) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ValidationError("bisect: need finite lo < hi");
    }
    constexpr int kScan = 64;
    ThresholdResult r{std::numeric_limits<double>::quiet_NaN(), {lo, hi}, 0, false, 0, {}};

    std::vector<double> xs(kScan + 1);
    std::vector<bool> pos(kScan + 1);
    for (int i = 0; i <= kScan; i++) {
        xs[i] = i == kScan ? hi : lo + (hi - lo) * i / kScan;
        pos[i] = checked(f, xs[i]) > 0;
    }
    int first = -1;
    for (int i = 0; i < kScan; i++) {
        if (pos[i] != pos[i + 1]) {
            r.crossings++;
            if (first < 0) {
                first = i;
            }
        }
    }
    if (pos[0] == pos[kScan]) {
        if (r.crossings > 0) {
            r.diagnostic = "endpoints share a sign but pre-scan saw " + std::to_string(r.crossings) +
                           " interior crossings";
        } else {
            r.diagnostic = "no sign change on bracket";
        }
        return r;
    }
    if (r.crossings > 1) {
        r.diagnostic = "pre-scan saw " + std::to_string(r.crossings) +
                       " crossings; returning the lowest";
    }

    double a = xs[first];
    double b = xs[first + 1];
    bool pos_a = pos[first];
    while (b - a > tol.abs_root && r.iterations < tol.max_iter) {
        double m = 0.5 * (a + b);
        if ((checked(f, m) > 0) == pos_a) {
            a = m;
        } else {
            b = m;
        }
        r.iterations++;
    }
    r.sign_change_found = true;
    r.value = 0.5 * (a + b);
    r.bracket = {a, b};
    return r;
}

std::vector<double> hermitian_spectrum(const HermitianMatrix &m, const Tolerance &tol) {
    const std::size_t n = m.dim();
    const double scale = std::max(1.0, m.frobenius_norm());
    if (m.hermiticity_defect() > 1e-12 * scale) {
        throw ValidationError("hermitian_spectrum: matrix is not Hermitian");
    }
    HermitianMatrix a = m;
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
    }
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    const double target = 1e-13 * static_cast<double>(n) * scale;
    int sweep = 0;
    for (; off_norm() >= target; sweep++) {
        if (sweep >= tol.max_iter) {
            throw EvaluationError("hermitian_spectrum: Jacobi did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0) {
                    continue;
                }
                // V = diag(1, conj(w)) * [[c, s], [-s, c]], w = apq / r, so that
                // conj(V)^T A V has a zero (p, q) entry.
                const cplx w = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const cplx vpp = c, vpq = s, vqp = -s * std::conj(w), vqq = c * std::conj(w);
                for (std::size_t k = 0; k < n; k++) {
                    const cplx xp = a(k, p), xq = a(k, q);
                    a(k, p) = xp * vpp + xq * vqp;
                    a(k, q) = xp * vpq + xq * vqq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    const cplx xp = a(p, k), xq = a(q, k);
                    a(p, k) = std::conj(vpp) * xp + std::conj(vqp) * xq;
                    a(q, k) = std::conj(vpq) * xp + std::conj(vqq) * xq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; i++) {
        ev[i] = a(i, i).real();
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

double min_eig(const HermitianMatrix &m, const Tolerance &tol) {
    if (m.dim() == 0) {
        throw ValidationError("min_eig: empty matrix");
    }
    return hermitian_spectrum(m, tol).front();
}

bool is_psd(const HermitianMatrix &m, const Tolerance &tol) {
    return min_eig(m, tol) >= tol.eig_zero(m.dim());
}

double min_principal_minor_2x2(const HermitianMatrix &m) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.dim(); i++) {
        for (std::size_t j = i + 1; j < m.dim(); j++) {
            worst = std::min(worst, m(i, i).real() * m(j, j).real() - std::norm(m(i, j)));
        }
    }
    return worst;
}

std::size_t count_eigenvalues_below(const HermitianMatrix &m, double x) {
    // Sylvester inertia: the pivots of an LDL^H factorisation of m - xI have
    // the same sign pattern as its eigenvalues.
    const std::size_t n = m.dim();
    HermitianMatrix a = m;
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) -= x;
    }
    std::size_t negatives = 0;
    for (std::size_t k = 0; k < n; k++) {
        const double d = a(k, k).real();
        if (d == 0) {
            throw EvaluationError("count_eigenvalues_below: zero pivot");
        }
        if (d < 0) {
            negatives++;
        }
        for (std::size_t i = k + 1; i < n; i++) {
            const cplx l = a(i, k) / d;
            for (std::size_t j = k + 1; j < n; j++) {
                a(i, j) -= l * std::conj(a(j, k));
            }
        }
    }
    return negatives;
}

}  // namespace qdeco::numeric
