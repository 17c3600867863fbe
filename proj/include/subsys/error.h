// Copyright 2026 The subsys Authors
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

#ifndef SUBSYS_ERROR_H
#define SUBSYS_ERROR_H

#include <stdexcept>

namespace subsys {

// Input that violates an operation's preconditions (size mismatch, bad n, ...)
// is reported with std::invalid_argument. The types below refine it where a
// caller needs to tell the cases apart.

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Valid input that the requested operation does not cover (3D gauge-qubit
/// basis, closed-form failure rate for even n, ...).
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem size beyond what exact methods can handle.
struct InfeasibleSize : std::length_error {
    using std::length_error::length_error;
};

}  // namespace subsys

#endif
