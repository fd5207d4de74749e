// Copyright 2026 The ybsys Authors
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

#ifndef YBSYS_ERRORS_H
#define YBSYS_ERRORS_H

#include <stdexcept>
#include <string>

namespace ybsys {

/// Input rejected by a precondition (bad shape, bad label, off-domain parameter).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// x + 1/x vanishes, so the spectral form of R cannot be evaluated.
struct SingularParameterization : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// Iterative routine failed to converge or produced a non-finite value.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two energy levels that must stay separated came closer than the gap threshold.
struct DegenerateCrossing : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

}  // namespace ybsys

#endif
