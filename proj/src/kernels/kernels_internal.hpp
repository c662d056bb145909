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

#ifndef QDECO_KERNELS_INTERNAL_HPP
#define QDECO_KERNELS_INTERNAL_HPP

#include "qdeco/kernels.hpp"

namespace qdeco::kernels {

extern const KernelTable kScalarTable;
#if defined(QDECO_HAVE_AVX2_TU)
extern const KernelTable kAvx2Table;
#endif
#if defined(QDECO_HAVE_NEON_TU)
extern const KernelTable kNeonTable;
#endif

}  // namespace qdeco::kernels

#endif
