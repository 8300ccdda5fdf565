// Copyright 2026 The QSA Authors
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

#ifndef QSA_CORE_ERRORS_HPP
#define QSA_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsa {

/// Operand shapes disagree (qubit counts, vector lengths).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured simulation or memory limit.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-order wire data.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qsa

#endif
