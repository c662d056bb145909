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

#ifndef QDECO_KERNELS_HPP
#define QDECO_KERNELS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Dense loops over 2^N doubles indexed by vertex subsets. Every backend
// performs the same multiplies and adds in the same order, so results are
// bit-identical across backends.
namespace qdeco::kernels {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
    /// out[u] += c * in[u ^ mask] for u < n.
    void (*xor_axpy)(double *out, const double *in, std::size_t n, std::uint64_t mask, double c);
    /// out[u] = ((w0 in[u^m0] + w1 in[u^m1]) + w2 in[u^m2]) + w3 in[u^m3].
    void (*xor_mix4)(double *out, const double *in, std::size_t n, const std::uint64_t *masks,
                     const double *w);
};

/// nullptr when the backend is not compiled in or the CPU lacks it.
const KernelTable *table_for(Backend b);
std::vector<Backend> available_backends();
/// Chosen once: QDECO_KERNELS=scalar|avx2|neon if set and available, else the
/// widest available backend.
Backend active_backend();
/// Test hook. Throws ValidationError if b is unavailable.
void set_backend(Backend b);
std::string to_string(Backend b);

/// Sizes must be equal powers of two, mask < size, out must not alias in.
void xor_axpy(std::span<double> out, std::span<const double> in, std::uint64_t mask, double c);
void xor_mix4(std::span<double> out, std::span<const double> in, const std::array<std::uint64_t, 4> &masks,
              const std::array<double, 4> &w);

}  // namespace qdeco::kernels

#endif
