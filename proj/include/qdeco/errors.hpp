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

#ifndef QDECO_ERRORS_HPP
#define QDECO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdeco {

/// Bad caller input: out-of-range parameter, malformed graph, length mismatch.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but exceeds a hard size cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A numeric procedure produced a non-finite value or failed to converge.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested method does not apply to this input.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdeco

#endif
