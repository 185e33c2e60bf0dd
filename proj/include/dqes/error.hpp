// Copyright 2026 The DQES Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqes {

/// Invalid argument values: qubit counts out of range, bad optimizer settings.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands whose qubit counts or lengths disagree.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input document. `position` is a 1-based line or term number.
struct FormatError : std::runtime_error {
    FormatError(std::string what, std::size_t position)
        : std::runtime_error(std::move(what) + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

}  // namespace dqes
