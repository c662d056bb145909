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

#include "kernels_internal.hpp"

namespace qdeco::kernels {

namespace {

void xor_axpy_scalar(double *out, const double *in, std::size_t n, std::uint64_t mask, double c) {
    for (std::size_t u = 0; u < n; u++) {
        out[u] += c * in[u ^ mask];
    }
}

void xor_mix4_scalar(double *out, const double *in, std::size_t n, const std::uint64_t *m, const double *w) {
    for (std::size_t u = 0; u < n; u++) {
        double t = w[0] * in[u ^ m[0]];
        t += w[1] * in[u ^ m[1]];
        t += w[2] * in[u ^ m[2]];
        t += w[3] * in[u ^ m[3]];
        out[u] = t;
    }
}

}  // namespace

const KernelTable kScalarTable = {xor_axpy_scalar, xor_mix4_scalar};

}  // namespace qdeco::kernels
