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

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "qdeco/errors.hpp"

namespace qdeco::kernels {

namespace {

bool cpu_has(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(QDECO_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::neon:
#if defined(QDECO_HAVE_NEON_TU)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend pick_default() {
    if (const char *env = std::getenv("QDECO_KERNELS")) {
        const std::string want = env;
        for (Backend b : available_backends()) {
            if (to_string(b) == want) return b;
        }
    }
    return available_backends().back();
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> t{table_for(pick_default())};
    return t;
}

std::atomic<Backend> &current_backend() {
    static std::atomic<Backend> b{pick_default()};
    return b;
}

void check_shapes(std::size_t out, std::size_t in, std::uint64_t mask) {
    if (out != in || !std::has_single_bit(out) || mask >= out) {
        throw ValidationError("kernel: sizes must be equal powers of two with mask < size");
    }
}

}  // namespace

const KernelTable *table_for(Backend b) {
    if (!cpu_has(b)) return nullptr;
    switch (b) {
        case Backend::scalar:
            return &kScalarTable;
#if defined(QDECO_HAVE_AVX2_TU)
        case Backend::avx2:
            return &kAvx2Table;
#endif
#if defined(QDECO_HAVE_NEON_TU)
        case Backend::neon:
            return &kNeonTable;
#endif
        default:
            return nullptr;
    }
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::neon, Backend::avx2}) {
        if (cpu_has(b)) out.push_back(b);
    }
    return out;
}

Backend active_backend() { return current_backend().load(); }

void set_backend(Backend b) {
    const KernelTable *t = table_for(b);
    if (t == nullptr) {
        throw ValidationError("kernel backend '" + to_string(b) + "' is not available");
    }
    current().store(t);
    current_backend().store(b);
}

std::string to_string(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "?";
}

void xor_axpy(std::span<double> out, std::span<const double> in, std::uint64_t mask, double c) {
    check_shapes(out.size(), in.size(), mask);
    current().load()->xor_axpy(out.data(), in.data(), out.size(), mask, c);
}

void xor_mix4(std::span<double> out, std::span<const double> in, const std::array<std::uint64_t, 4> &masks,
              const std::array<double, 4> &w) {
    for (std::uint64_t m : masks) check_shapes(out.size(), in.size(), m);
    current().load()->xor_mix4(out.data(), in.data(), out.size(), masks.data(), w.data());
}

}  // namespace qdeco::kernels
