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

#include <string_view>

#include "wkqfa/types.hpp"

namespace wkqfa {

/// Evaluates one amplitude expression to a complex value.
///
/// Grammar (no whitespace is required; spaces between tokens are tolerated):
///
///   expr     := term | term "+" term | term "-" term
///   term     := coeff | coeff "*" "i" | "i"
///   coeff    := rational
///             | rational "/" "sqrt(" positive-integer ")"
///             | "exp(2*pi*i*" integer "/" positive-integer ")"
///   rational := integer | integer "/" positive-integer
///
/// This is the normative amplitude syntax of the machine file format.
/// Throws ParseError with the offending position on syntax errors and on
/// division by zero; the result is always finite.
Complex parse_amplitude(std::string_view text);

/// True iff |a - b| <= tol (complex modulus). Requires tol > 0.
bool approx_eq(Complex a, Complex b, double tol);

} // namespace wkqfa
