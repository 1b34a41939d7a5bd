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

#include "wkqfa/corpus.hpp"

#include <map>

#include "wkqfa/compiler.hpp"
#include "wkqfa/errors.hpp"

namespace wkqfa {

namespace {

// ---------------------------------------------------------------------------
// example1_anbncn: two heads count a's against b's and b's against c's. The
// pairing is injective (identity), so every upper word has exactly one
// strand. Reads not listed below reject by completion.
const char* kExample1Json = R"json({
  "states": ["q0", "q1", "q2", "q3", "q_acc"],
  "start": "q0",
  "accept": ["q_acc"],
  "reject": [],
  "alphabet": ["a", "b", "c"],
  "rho": [["a", "a"], ["b", "b"], ["c", "c"]],
  "directions": {
    "q0": [0, 1], "q1": [1, 1], "q2": [1, 1], "q3": [1, 0], "q_acc": [0, 0]
  },
  "operators": [
    {"upper": "#", "lower": "#", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "#", "lower": "a", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "#", "lower": "b", "entries": [{"from": "q0", "to": "q1", "amp": "1"}]},
    {"upper": "a", "lower": "b", "entries": [{"from": "q1", "to": "q1", "amp": "1"}]},
    {"upper": "a", "lower": "c", "entries": [{"from": "q1", "to": "q2", "amp": "1"}]},
    {"upper": "b", "lower": "c", "entries": [{"from": "q2", "to": "q2", "amp": "1"}]},
    {"upper": "b", "lower": "$", "entries": [{"from": "q2", "to": "q3", "amp": "1"}]},
    {"upper": "c", "lower": "$", "entries": [{"from": "q3", "to": "q3", "amp": "1"}]},
    {"upper": "$", "lower": "$", "entries": [{"from": "q3", "to": "q_acc", "amp": "1"}]}
  ]
})json";

// ---------------------------------------------------------------------------
// theorem3_yao: words of block shape %w1*x1 %w2*x2 ... %wn*xn over {a,b,%,*}.
// The lower strand guesses two block heads with v_m1/v_m2; q2 verifies the
// guessed w parts equal, q3 accepts on the first difference of the x parts
// and rejects when they run out together.
const char* kTheorem3Json = R"json({
  "states": ["q0", "q1", "q2", "q3", "q4", "q5"],
  "start": "q0",
  "accept": ["q5"],
  "reject": ["q4"],
  "alphabet": ["a", "b", "v_m1", "v_m2", "%", "*"],
  "rho": [["a", "a"], ["%", "%"], ["%", "v_m1"], ["%", "v_m2"], ["b", "b"], ["*", "*"]],
  "directions": {
    "q0": [1, 1], "q1": [0, 1], "q2": [1, 1], "q3": [1, 1], "q4": [0, 0], "q5": [0, 0]
  },
  "operators": [
    {"upper": "#", "lower": "#", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "%", "lower": "%", "entries": [
      {"from": "q0", "to": "q0", "amp": "1"},
      {"from": "q1", "to": "q1", "amp": "1"},
      {"from": "q3", "to": "q4", "amp": "1"}]},
    {"upper": "a", "lower": "a", "entries": [
      {"from": "q0", "to": "q0", "amp": "1"},
      {"from": "q2", "to": "q2", "amp": "1"},
      {"from": "q3", "to": "q3", "amp": "1"}]},
    {"upper": "b", "lower": "b", "entries": [
      {"from": "q0", "to": "q0", "amp": "1"},
      {"from": "q2", "to": "q2", "amp": "1"},
      {"from": "q3", "to": "q3", "amp": "1"}]},
    {"upper": "*", "lower": "*", "entries": [
      {"from": "q0", "to": "q0", "amp": "1"},
      {"from": "q2", "to": "q3", "amp": "1"}]},
    {"upper": "%", "lower": "v_m1", "entries": [{"from": "q0", "to": "q1", "amp": "1"}]},
    {"upper": "%", "lower": "v_m2", "entries": [{"from": "q1", "to": "q2", "amp": "1"}]},
    {"upper": "%", "lower": "a", "entries": [
      {"from": "q1", "to": "q1", "amp": "1"},
      {"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "%", "lower": "b", "entries": [
      {"from": "q1", "to": "q1", "amp": "1"},
      {"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "%", "lower": "*", "entries": [
      {"from": "q1", "to": "q1", "amp": "1"},
      {"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "%", "lower": "$", "entries": [{"from": "q3", "to": "q4", "amp": "1"}]},
    {"upper": "a", "lower": "b", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "a", "lower": "*", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "a", "lower": "%", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "a", "lower": "$", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "b", "lower": "a", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "b", "lower": "*", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "b", "lower": "%", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "b", "lower": "$", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "*", "lower": "a", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "*", "lower": "b", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "*", "lower": "%", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]},
    {"upper": "*", "lower": "$", "entries": [{"from": "q3", "to": "q5", "amp": "1"}]}
  ]
})json";

// ---------------------------------------------------------------------------
// theorem5_ww: the lower strand guesses the midpoint with one m. The
// computation splits into a content branch (q3 compares the first half
// against the tail after the marker in lockstep and accepts at the lower
// head's '$' via q4) and a twin pair of timing branches (q6/q7 and q6b/q7b
// walk the upper head two cells per lower cell; both survive exactly when
// the marker sits at the midpoint and then interfere through the Fourier
// columns of q5/q8, sending their whole amplitude to s2). Members get
// p_acc = 1 on the midpoint strand; every strand of a non-member leaves at
// least probability 1/2 in rejecting states.
const char* kTheorem5Json = R"json({
  "states": ["q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "q6b", "q7b", "q8",
             "q_rej", "q_rej1", "q_rej2", "q_rej1b", "q_rej2b", "s1", "s2"],
  "start": "q0",
  "accept": ["s2"],
  "reject": ["s1", "q_rej", "q_rej1", "q_rej2", "q_rej1b", "q_rej2b"],
  "alphabet": ["a", "b", "m"],
  "rho": [["a", "a"], ["a", "m"], ["b", "b"], ["b", "m"]],
  "directions": {
    "q0": [0, 1], "q1": [0, 0], "q2": [0, 0], "q3": [1, 1], "q4": [0, 0],
    "q5": [0, 0], "q6": [1, 1], "q7": [1, 0], "q6b": [1, 1], "q7b": [1, 0],
    "q8": [0, 0], "q_rej": [0, 0], "q_rej1": [0, 0], "q_rej2": [0, 0],
    "q_rej1b": [0, 0], "q_rej2b": [0, 0], "s1": [0, 0], "s2": [0, 0]
  },
  "operators": [
    {"upper": "#", "lower": "#", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "#", "lower": "a", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "#", "lower": "b", "entries": [{"from": "q0", "to": "q0", "amp": "1"}]},
    {"upper": "#", "lower": "m", "entries": [
      {"from": "q0", "to": "q1", "amp": "1/sqrt(2)"},
      {"from": "q0", "to": "q2", "amp": "1/sqrt(2)"},
      {"from": "q1", "to": "q3", "amp": "1"},
      {"from": "q2", "to": "q6", "amp": "1/sqrt(2)"},
      {"from": "q2", "to": "q6b", "amp": "1/sqrt(2)"}]},
    {"upper": "a", "lower": "a", "entries": [
      {"from": "q3", "to": "q3", "amp": "1"},
      {"from": "q6", "to": "q7", "amp": "1"},
      {"from": "q7", "to": "q6", "amp": "1"},
      {"from": "q6b", "to": "q7b", "amp": "1"},
      {"from": "q7b", "to": "q6b", "amp": "1"}]},
    {"upper": "b", "lower": "b", "entries": [
      {"from": "q3", "to": "q3", "amp": "1"},
      {"from": "q6", "to": "q7", "amp": "1"},
      {"from": "q7", "to": "q6", "amp": "1"},
      {"from": "q6b", "to": "q7b", "amp": "1"},
      {"from": "q7b", "to": "q6b", "amp": "1"}]},
    {"upper": "a", "lower": "b", "entries": [
      {"from": "q3", "to": "q_rej", "amp": "1"},
      {"from": "q6", "to": "q7", "amp": "1"},
      {"from": "q7", "to": "q6", "amp": "1"},
      {"from": "q6b", "to": "q7b", "amp": "1"},
      {"from": "q7b", "to": "q6b", "amp": "1"}]},
    {"upper": "b", "lower": "a", "entries": [
      {"from": "q3", "to": "q_rej", "amp": "1"},
      {"from": "q6", "to": "q7", "amp": "1"},
      {"from": "q7", "to": "q6", "amp": "1"},
      {"from": "q6b", "to": "q7b", "amp": "1"},
      {"from": "q7b", "to": "q6b", "amp": "1"}]},
    {"upper": "a", "lower": "$", "entries": [
      {"from": "q3", "to": "q4", "amp": "1"},
      {"from": "q4", "to": "s2", "amp": "1"},
      {"from": "q6", "to": "q_rej2", "amp": "1"},
      {"from": "q7", "to": "q_rej1", "amp": "1"},
      {"from": "q6b", "to": "q_rej2b", "amp": "1"},
      {"from": "q7b", "to": "q_rej1b", "amp": "1"}]},
    {"upper": "b", "lower": "$", "entries": [
      {"from": "q3", "to": "q4", "amp": "1"},
      {"from": "q4", "to": "s2", "amp": "1"},
      {"from": "q6", "to": "q_rej2", "amp": "1"},
      {"from": "q7", "to": "q_rej1", "amp": "1"},
      {"from": "q6b", "to": "q_rej2b", "amp": "1"},
      {"from": "q7b", "to": "q_rej1b", "amp": "1"}]},
    {"upper": "$", "lower": "a", "entries": [
      {"from": "q6", "to": "q_rej2", "amp": "1"},
      {"from": "q7", "to": "q_rej1", "amp": "1"},
      {"from": "q6b", "to": "q_rej2b", "amp": "1"},
      {"from": "q7b", "to": "q_rej1b", "amp": "1"}]},
    {"upper": "$", "lower": "b", "entries": [
      {"from": "q6", "to": "q_rej2", "amp": "1"},
      {"from": "q7", "to": "q_rej1", "amp": "1"},
      {"from": "q6b", "to": "q_rej2b", "amp": "1"},
      {"from": "q7b", "to": "q_rej1b", "amp": "1"}]},
    {"upper": "$", "lower": "$", "entries": [
      {"from": "q6", "to": "q5", "amp": "1"},
      {"from": "q6b", "to": "q8", "amp": "1"},
      {"from": "q5", "to": "s1", "amp": "-1/sqrt(2)"},
      {"from": "q5", "to": "s2", "amp": "1/sqrt(2)"},
      {"from": "q8", "to": "s1", "amp": "1/sqrt(2)"},
      {"from": "q8", "to": "s2", "amp": "1/sqrt(2)"}]}
  ]
})json";

// ---------------------------------------------------------------------------
// example2_regex: the (a+b)*a recognizer, obtained from its DFA through the
// transition-numbering construction.
const char* kExample2Dfa = R"json({
  "states": ["q0", "q1"],
  "alphabet": ["a", "b"],
  "start": "q0",
  "final": ["q1"],
  "delta": [
    {"from": "q0", "on": "a", "to": "q1"},
    {"from": "q0", "on": "b", "to": "q0"},
    {"from": "q1", "on": "a", "to": "q1"},
    {"from": "q1", "on": "b", "to": "q0"}
  ]
})json";

bool oracle_anbncn(const Strand& w) {
    std::size_t i = 0;
    std::size_t na = 0, nb = 0, nc = 0;
    while (i < w.size() && w[i] == "a") {
        ++na;
        ++i;
    }
    while (i < w.size() && w[i] == "b") {
        ++nb;
        ++i;
    }
    while (i < w.size() && w[i] == "c") {
        ++nc;
        ++i;
    }
    return i == w.size() && na >= 1 && na == nb && nb == nc;
}

bool oracle_ww(const Strand& w) {
    if (w.size() % 2 != 0) {
        return false;
    }
    std::size_t half = w.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        if (w[i] != w[half + i]) {
            return false;
        }
    }
    return true;
}

// Canonical block shape: the word is a concatenation of blocks "%w*x" with
// w, x over {a,b}; anything else is outside the language. Membership needs
// two blocks with equal w parts and different x parts.
bool oracle_theorem3(const Strand& word) {
    std::vector<std::pair<std::string, std::string>> blocks;
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] != "%") {
            return false;
        }
        ++i;
        std::string w, x;
        bool seen_star = false;
        while (i < word.size() && word[i] != "%") {
            if (word[i] == "*") {
                if (seen_star) {
                    return false;
                }
                seen_star = true;
            } else if (word[i] == "a" || word[i] == "b") {
                (seen_star ? x : w) += word[i];
            } else {
                return false;
            }
            ++i;
        }
        if (!seen_star) {
            return false;
        }
        blocks.emplace_back(std::move(w), std::move(x));
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (blocks[a].first == blocks[b].first && blocks[a].second != blocks[b].second) {
                return true;
            }
        }
    }
    return false;
}

std::map<std::string, CorpusEntry> build_corpus() {
    std::map<std::string, CorpusEntry> corpus;

    {
        CorpusEntry e;
        e.name = "example1_anbncn";
        MachineDef raw = load_machine(kExample1Json);
        e.machine_json = machine_to_json(raw);
        e.machine = complete_operators(raw);
        e.oracle = oracle_anbncn;
        e.notes = "Accepts a^n b^n c^n for n >= 1 with probability 1 and rejects "
                  "everything else with probability 1. The lower head runs ahead: "
                  "a's are matched against lower b's, b's against lower c's. "
                  "Oracle: direct counting.";
        corpus.emplace(e.name, std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "example2_regex";
        DfaDef dfa = load_dfa(kExample2Dfa);
        MachineDef raw = compile(dfa);
        e.machine_json = machine_to_json(raw);
        e.machine = complete_operators(raw);
        e.oracle = [dfa](const Strand& w) { return dfa_run(dfa, w); };
        e.notes = "Compiled from the two-state DFA for (a+b)*a; the lower strand "
                  "guesses the DFA's transition sequence. Accepts members with "
                  "probability 1 on the correct guess. Oracle: DFA run.";
        corpus.emplace(e.name, std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "theorem3_yao";
        MachineDef raw = load_machine(kTheorem3Json);
        e.machine_json = machine_to_json(raw);
        e.machine = complete_operators(raw);
        e.oracle = oracle_theorem3;
        e.notes = "Words are blocks %w1*x1%w2*x2...%wn*xn over {a,b,%,*}; a word "
                  "is in the language when two blocks have equal w parts and "
                  "different x parts. v_m1/v_m2 under two % signs guess the pair. "
                  "Oracle: exhaustive block-pair scan.";
        corpus.emplace(e.name, std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "theorem5_ww";
        MachineDef raw = load_machine(kTheorem5Json);
        e.machine_json = machine_to_json(raw);
        e.machine = complete_operators(raw);
        e.oracle = oracle_ww;
        e.notes = "Accepts {ww | w in {a,b}+}: one lower m guesses the midpoint; "
                  "a content branch compares the halves, twin timing branches "
                  "verify the guess and interfere to probability 1 through the "
                  "Fourier columns. Non-members are rejected with probability at "
                  "least 1/2 on every strand. The empty word is in {ww} but the "
                  "machine rejects it (the first lower read is already '$'). "
                  "Oracle: midpoint split.";
        corpus.emplace(e.name, std::move(e));
    }
    return corpus;
}

const std::map<std::string, CorpusEntry>& corpus() {
    static const std::map<std::string, CorpusEntry> instance = build_corpus();
    return instance;
}

} // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : corpus()) {
        names.push_back(name);
    }
    return names;
}

const CorpusEntry& get_machine(const std::string& name) {
    auto it = corpus().find(name);
    if (it == corpus().end()) {
        throw ValidationError("unknown corpus machine \"" + name + "\"");
    }
    return it->second;
}

bool oracle_membership(const std::string& name, const Strand& word) {
    return get_machine(name).oracle(word);
}

const std::vector<std::string>& theorem3_corpus_words() {
    // 15 members then 25 non-members, all of the canonical block shape or
    // deliberately malformed; lengths <= 12.
    static const std::vector<std::string> words = {
        // members
        "%*a%*b",
        "%*%*a",
        "%a*%a*b",
        "%b*a%b*",
        "%a*a%a*b",
        "%b*b%b*a",
        "%ab*%ab*a",
        "%ab*a%ab*b",
        "%a*ab%a*b",
        "%*a%*ab",
        "%*a%*b%*a",
        "%b*%a*%b*a",
        "%aa*b%aa*a",
        "%*ba%*ab",
        "%ba*%ba*b",
        // non-members: equal-w/equal-x near misses
        "%*a%*a",
        "%a*b%a*b",
        "%ab*a%ab*a",
        "%*%*",
        "%b*ab%b*ab",
        "%a*%a*",
        "%aa*%aa*",
        "%b*%b*",
        // non-members: w parts differ
        "%a*b%b*a",
        "%ab*a%b*b",
        "%*a%b*b",
        "%a*a%b*a",
        "%ab*%ba*",
        "%a*%ab*",
        "%aa*a%a*a",
        "%ba*a%ab*b",
        // non-members: too few blocks
        "",
        "%*",
        "%a*b",
        "%ab*ba",
        "%*abab",
        // non-members: outside the block shape
        "a%b*a",
        "ab",
        "%a%b*a",
        "**",
    };
    return words;
}

} // namespace wkqfa
