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
#ifndef QDECO_TOOLS_CLI_HPP
#define QDECO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qdeco::cli {

/// Exit codes: 0 success, 1 evaluation failure or failed oracle check,
/// 2 validation or usage error, 3 capacity error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdeco::cli

#endif
