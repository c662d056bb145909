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

// Built with -mavx2 and without -mfma: multiplies and adds stay separate to
// match the scalar rounding.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace qdeco::kernels {

namespace {

/// Lane i of the result is lane (i ^ M) of x.
template <int M>
inline __m256d xor_lanes(__m256d x) {
    constexpr int imm = (0 ^ M) | ((1 ^ M) << 2) | ((2 ^ M) << 4) | ((3 ^ M) << 6);
    if constexpr (M == 0) {
        return x;
    } else {
        return _mm256_permute4x64_pd(x, imm);
    }
}

template <int M>
void axpy_blocks(double *out, const double *in, std::size_t n, std::uint64_t hi, double c) {
    const __m256d vc = _mm256_set1_pd(c);
    for (std::size_t b = 0; b < n; b += 4) {
        const __m256d x = xor_lanes<M>(_mm256_loadu_pd(in + (b ^ hi)));
        const __m256d o = _mm256_loadu_pd(out + b);
        _mm256_storeu_pd(out + b, _mm256_add_pd(o, _mm256_mul_pd(vc, x)));
    }
}

template <int M>
inline __m256d load_xor(const double *in, std::size_t b, std::uint64_t mask) {
    return xor_lanes<M>(_mm256_loadu_pd(in + (b ^ (mask & ~std::uint64_t{3}))));
}

inline __m256d load_any(const double *in, std::size_t b, std::uint64_t mask) {
    switch (mask & 3) {
        case 0:
            return load_xor<0>(in, b, mask);
        case 1:
            return load_xor<1>(in, b, mask);
        case 2:
            return load_xor<2>(in, b, mask);
        default:
            return load_xor<3>(in, b, mask);
    }
}

void xor_axpy_avx2(double *out, const double *in, std::size_t n, std::uint64_t mask, double c) {
    if (n < 4) {
        kScalarTable.xor_axpy(out, in, n, mask, c);
        return;
    }
    const std::uint64_t hi = mask & ~std::uint64_t{3};
    switch (mask & 3) {
        case 0:
            axpy_blocks<0>(out, in, n, hi, c);
            break;
        case 1:
            axpy_blocks<1>(out, in, n, hi, c);
            break;
        case 2:
            axpy_blocks<2>(out, in, n, hi, c);
            break;
        default:
            axpy_blocks<3>(out, in, n, hi, c);
            break;
    }
}

void xor_mix4_avx2(double *out, const double *in, std::size_t n, const std::uint64_t *m, const double *w) {
    if (n < 4) {
        kScalarTable.xor_mix4(out, in, n, m, w);
        return;
    }
    const __m256d w0 = _mm256_set1_pd(w[0]), w1 = _mm256_set1_pd(w[1]);
    const __m256d w2 = _mm256_set1_pd(w[2]), w3 = _mm256_set1_pd(w[3]);
    for (std::size_t b = 0; b < n; b += 4) {
        __m256d t = _mm256_mul_pd(w0, load_any(in, b, m[0]));
        t = _mm256_add_pd(t, _mm256_mul_pd(w1, load_any(in, b, m[1])));
        t = _mm256_add_pd(t, _mm256_mul_pd(w2, load_any(in, b, m[2])));
        t = _mm256_add_pd(t, _mm256_mul_pd(w3, load_any(in, b, m[3])));
        _mm256_storeu_pd(out + b, t);
    }
}

}  // namespace

const KernelTable kAvx2Table = {xor_axpy_avx2, xor_mix4_avx2};

}  // namespace qdeco::kernels
