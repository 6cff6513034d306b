// Copyright 2026 The dpsmap Authors
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

#ifndef DPSMAP_ERRORS_H
#define DPSMAP_ERRORS_H

#include <stdexcept>
#include <string>

namespace dpsmap {

/// Raised for invalid user-supplied configuration: bad qubit counts, reducible
/// polynomials, malformed phase conventions, fiducials with vanishing overlaps.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an input violates a documented precondition of an operation
/// (mismatched dimensions, mismatched dual pairs, unverified coefficients).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace dpsmap

#endif
