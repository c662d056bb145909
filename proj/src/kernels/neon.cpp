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

// AArch64 only. Uses vmulq/vaddq rather than vfmaq to match scalar rounding.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace qdeco::kernels {

namespace {

inline float64x2_t load_xor(const double *in, std::size_t b, std::uint64_t mask) {
    const float64x2_t x = vld1q_f64(in + (b ^ (mask & ~std::uint64_t{1})));
    return (mask & 1) ? vextq_f64(x, x, 1) : x;
}

void xor_axpy_neon(double *out, const double *in, std::size_t n, std::uint64_t mask, double c) {
    if (n < 2) {
        kScalarTable.xor_axpy(out, in, n, mask, c);
        return;
    }
    const float64x2_t vc = vdupq_n_f64(c);
    for (std::size_t b = 0; b < n; b += 2) {
        const float64x2_t o = vld1q_f64(out + b);
        vst1q_f64(out + b, vaddq_f64(o, vmulq_f64(vc, load_xor(in, b, mask))));
    }
}

void xor_mix4_neon(double *out, const double *in, std::size_t n, const std::uint64_t *m, const double *w) {
    if (n < 2) {
        kScalarTable.xor_mix4(out, in, n, m, w);
        return;
    }
    for (std::size_t b = 0; b < n; b += 2) {
        float64x2_t t = vmulq_f64(vdupq_n_f64(w[0]), load_xor(in, b, m[0]));
        t = vaddq_f64(t, vmulq_f64(vdupq_n_f64(w[1]), load_xor(in, b, m[1])));
        t = vaddq_f64(t, vmulq_f64(vdupq_n_f64(w[2]), load_xor(in, b, m[2])));
        t = vaddq_f64(t, vmulq_f64(vdupq_n_f64(w[3]), load_xor(in, b, m[3])));
        vst1q_f64(out + b, t);
    }
}

}  // namespace

const KernelTable kNeonTable = {xor_axpy_neon, xor_mix4_neon};

}  // namespace qdeco::kernels
