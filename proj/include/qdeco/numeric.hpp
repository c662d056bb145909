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

#ifndef QDECO_NUMERIC_HPP
#define QDECO_NUMERIC_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qdeco::numeric {

using cplx = std::complex<double>;

struct Tolerance {
    double abs_root = 1e-10;
    /// PPT verdicts accept min eigenvalues down to -eig_zero_per_dim * dim.
    double eig_zero_per_dim = 1e-12;
    int max_iter = 200;

    double eig_zero(std::size_t dim) const { return -eig_zero_per_dim * static_cast<double>(dim); }
};

/// Dense complex square matrix in row-major order.
class HermitianMatrix {
   public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    cplx *data() { return data_.data(); }
    const cplx *data() const { return data_.data(); }

    static HermitianMatrix identity(std::size_t dim);
    static HermitianMatrix diagonal(const std::vector<double> &d);

    cplx trace() const;
    /// Largest |m(r,c) - conj(m(c,r))|.
    double hermiticity_defect() const;
    double frobenius_norm() const;

   private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

struct ThresholdResult {
    /// NaN unless sign_change_found.
    double value;
    std::pair<double, double> bracket;
    int iterations = 0;
    bool sign_change_found = false;
    /// Sign changes seen by the pre-scan.
    int crossings = 0;
    /// Empty when the pre-scan saw exactly one crossing.
    std::string diagnostic;
};

/// Root of f on [lo, hi]. A 64-interval pre-scan counts sign changes first;
/// bisection then runs inside the lowest sub-interval holding a crossing.
/// "Positive" means f(x) > 0. Throws EvaluationError on a non-finite f.
ThresholdResult bisect(const std::function<double(double)> &f, double lo, double hi,
                       const Tolerance &tol = {});

/// Eigenvalues ascending, by cyclic complex Jacobi rotations.
/// Throws ValidationError when hermiticity_defect() > 1e-12 * max(1, |m|_F).
std::vector<double> hermitian_spectrum(const HermitianMatrix &m, const Tolerance &tol = {});

double min_eig(const HermitianMatrix &m, const Tolerance &tol = {});

/// min_eig(m) >= tol.eig_zero(dim).
bool is_psd(const HermitianMatrix &m, const Tolerance &tol = {});

/// Smallest 2x2 principal minor m_ii m_jj - |m_ij|^2. A negative value
/// certifies m is not PSD with relative rather than absolute accuracy.
double min_principal_minor_2x2(const HermitianMatrix &m);

/// Number of eigenvalues strictly below x, from the inertia of m - x I.
/// Independent of hermitian_spectrum; used as a cross-check.
std::size_t count_eigenvalues_below(const HermitianMatrix &m, double x);

}  // namespace qdeco::numeric

#endif
