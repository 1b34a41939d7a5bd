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

#include <functional>
#include <string>
#include <vector>

#include "wkqfa/machine.hpp"
#include "wkqfa/types.hpp"

namespace wkqfa {

/// A built-in machine together with an independent classical membership
/// oracle for its target language.
struct CorpusEntry {
    std::string name;
    MachineDef machine;                        // completed
    std::string machine_json;                  // canonical uncompleted document
    std::function<bool(const Strand&)> oracle; // brute-force membership
    std::string notes;
};

/// Built-in machine names:
///   example1_anbncn  counts a^n b^n c^n (n >= 1), injective pairing
///   example2_regex   DFA for (a+b)*a run through the compiler
///   theorem3_yao     block language %w1*x1%w2*x2... with some wi = wj, xi != xj
///   theorem5_ww      {ww | w in {a,b}+} via a guessed midpoint marker
std::vector<std::string> corpus_names();

/// Errors: unknown name.
const CorpusEntry& get_machine(const std::string& name);

/// Brute-force membership in the named machine's target language.
bool oracle_membership(const std::string& name, const Strand& word);

/// The committed 40-word evaluation corpus for theorem3_yao: 15 members and
/// 25 non-members (including equal-w/equal-x near misses), lengths <= 12.
const std::vector<std::string>& theorem3_corpus_words();

} // namespace wkqfa
