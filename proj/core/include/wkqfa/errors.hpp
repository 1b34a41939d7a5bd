// Copyright 2026 The wkqfa Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wkqfa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text: machine/DFA documents, amplitude expressions, words.
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid input that violates a model constraint (unknown state,
/// non-orthogonal columns, non-complementary strands, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Strand or word enumeration would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

/// A run could not proceed (head moved past an endmarker).
struct SimulationError : Error {
    using Error::Error;
};

} // namespace wkqfa
