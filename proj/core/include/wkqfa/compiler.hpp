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

#include <map>
#include <string>
#include <vector>

#include "wkqfa/machine.hpp"
#include "wkqfa/types.hpp"

namespace wkqfa {

struct DfaDef {
    std::vector<std::string> states;   // declaration order fixes numbering
    std::vector<Symbol> alphabet;
    std::string start;
    std::vector<std::string> final_states;
    std::map<std::pair<std::string, Symbol>, std::string> delta; // total

    bool is_final(const std::string& q) const;
};

/// Parses a DFA document (JSON: states, alphabet, start, final, delta).
/// delta must be total; the error for a partial delta lists every missing
/// (state, symbol) pair.
DfaDef load_dfa(const std::string& document);

/// Standard DFA acceptance. Errors on symbols outside the alphabet.
bool dfa_run(const DfaDef& d, const Strand& word);

/// Builds a strand-guessing machine that accepts the same language as the
/// DFA. For each input symbol x the transitions on x are numbered x1..xn in
/// state declaration order; the lower alphabet gains x1..xn with
/// rho pairs (x, xi), and transition i delta(q, x) = q' becomes the entry
/// U_{x,xi}|q> = |q'>. A fresh start state is wired in over (#, #) and each
/// final state exits to its own fresh accepting state over ($, $) (distinct
/// accept targets keep the ($,$) columns orthonormal when |final| > 1).
/// The result is returned uncompleted.
MachineDef compile(const DfaDef& d);

} // namespace wkqfa
