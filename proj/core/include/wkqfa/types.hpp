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

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace wkqfa {

using Complex = std::complex<double>;

/// Tape symbols are arbitrary non-empty tokens; a word is a sequence of them.
using Symbol = std::string;
using Strand = std::vector<Symbol>;

/// Index into MachineDef::states.
using StateId = std::uint32_t;

/// Sentinel target returned by derive_delta for reads of a symbol pair with
/// no materialized operator: the amplitude is routed to an implicit fresh
/// rejecting state that is never added to the state set.
inline constexpr StateId kDefaultReject = std::numeric_limits<StateId>::max();

inline const Symbol kLeftEndmarker = "#";
inline const Symbol kRightEndmarker = "$";

/// Default comparison/well-formedness tolerance wherever none is given.
inline constexpr double kDefaultTol = 1e-9;

/// Ordered (upper, lower) symbol pairings. Declaration order is meaningful:
/// it fixes the enumeration order of complementary strands.
using ComplementarityRelation = std::vector<std::pair<Symbol, Symbol>>;

} // namespace wkqfa
