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

#include "wkqfa/compiler.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "wkqfa/errors.hpp"

namespace wkqfa {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw ValidationError("dfa document: " + what);
}

} // namespace

bool DfaDef::is_final(const std::string& q) const {
    return std::find(final_states.begin(), final_states.end(), q) != final_states.end();
}

DfaDef load_dfa(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("dfa document: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("dfa document: top level must be a JSON object");
    }
    static const std::set<std::string> keys = {"states", "alphabet", "start", "final", "delta"};
    for (const auto& [key, _] : doc.items()) {
        if (!keys.count(key)) {
            bad("unknown top-level key \"" + key + "\"");
        }
    }
    for (const auto& key : keys) {
        if (!doc.contains(key)) {
            bad("missing top-level key \"" + key + "\"");
        }
    }

    DfaDef d;
    for (const auto& v : doc["states"]) {
        d.states.push_back(v.get<std::string>());
    }
    if (d.states.empty()) {
        bad("states list is empty");
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : d.states) {
            if (s.empty() || !seen.insert(s).second) {
                bad("state names must be non-empty and unique");
            }
        }
    }
    for (const auto& v : doc["alphabet"]) {
        d.alphabet.push_back(v.get<std::string>());
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : d.alphabet) {
            if (s.empty() || !seen.insert(s).second) {
                bad("alphabet symbols must be non-empty and unique");
            }
            if (s == kLeftEndmarker || s == kRightEndmarker) {
                bad("endmarker \"" + s + "\" may not appear in the alphabet");
            }
        }
    }
    d.start = doc["start"].get<std::string>();
    if (std::find(d.states.begin(), d.states.end(), d.start) == d.states.end()) {
        bad("start state \"" + d.start + "\" is not declared");
    }
    for (const auto& v : doc["final"]) {
        std::string f = v.get<std::string>();
        if (std::find(d.states.begin(), d.states.end(), f) == d.states.end()) {
            bad("final state \"" + f + "\" is not declared");
        }
        if (d.is_final(f)) {
            bad("duplicate final state \"" + f + "\"");
        }
        d.final_states.push_back(f);
    }
    for (const auto& t : doc["delta"]) {
        if (!t.is_object() || !t.contains("from") || !t.contains("on") || !t.contains("to")) {
            bad("each delta entry needs \"from\", \"on\", \"to\"");
        }
        std::string from = t["from"].get<std::string>();
        Symbol on = t["on"].get<std::string>();
        std::string to = t["to"].get<std::string>();
        if (std::find(d.states.begin(), d.states.end(), from) == d.states.end() ||
            std::find(d.states.begin(), d.states.end(), to) == d.states.end()) {
            bad("delta entry references an undeclared state");
        }
        if (std::find(d.alphabet.begin(), d.alphabet.end(), on) == d.alphabet.end()) {
            bad("delta entry uses symbol \"" + on + "\" outside the alphabet");
        }
        if (!d.delta.emplace(std::make_pair(from, on), to).second) {
            bad("duplicate delta entry (" + from + ", " + on + ")");
        }
    }

    std::string missing;
    for (const auto& q : d.states) {
        for (const auto& x : d.alphabet) {
            if (!d.delta.count({q, x})) {
                if (!missing.empty()) {
                    missing += ", ";
                }
                missing += "(" + q + ", " + x + ")";
            }
        }
    }
    if (!missing.empty()) {
        bad("delta is not total; missing " + missing);
    }
    return d;
}

bool dfa_run(const DfaDef& d, const Strand& word) {
    std::string q = d.start;
    for (const auto& sym : word) {
        auto it = d.delta.find({q, sym});
        if (it == d.delta.end()) {
            throw ValidationError("dfa_run: symbol \"" + sym + "\" outside the alphabet");
        }
        q = it->second;
    }
    return d.is_final(q);
}

MachineDef compile(const DfaDef& d) {
    MachineDef m;
    m.states = d.states;

    auto unique_state = [&m](std::string candidate) {
        while (m.state_index(candidate)) {
            candidate += "'";
        }
        return candidate;
    };

    std::string start_name = unique_state(d.start + "'");
    m.states.push_back(start_name);

    // One accepting exit per final state so the ($, $) columns stay
    // pairwise orthogonal.
    std::map<std::string, std::string> accept_name;
    for (const auto& f : d.final_states) {
        std::string candidate = d.final_states.size() == 1 ? "q_acc" : "q_acc_" + f;
        candidate = unique_state(candidate);
        m.states.push_back(candidate);
        accept_name[f] = candidate;
    }

    m.halt.assign(m.states.size(), HaltClass::NonHalting);
    m.directions.assign(m.states.size(), HeadDirections{1, 1});
    for (const auto& [f, name] : accept_name) {
        StateId q = *m.state_index(name);
        m.halt[q] = HaltClass::Accepting;
        m.directions[q] = HeadDirections{0, 0};
    }
    m.start = *m.state_index(start_name);

    // V' = every x plus its transition numbers x1..xn; rho pairs (x, xi).
    std::set<Symbol> taken;
    m.alphabet.clear();
    std::map<std::pair<std::string, Symbol>, Symbol> number_of; // (from, x) -> xi
    for (const auto& x : d.alphabet) {
        taken.insert(x);
    }
    for (const auto& x : d.alphabet) {
        m.alphabet.push_back(x);
        int i = 0;
        for (const auto& q : d.states) {
            ++i;
            Symbol xi = x + std::to_string(i);
            while (taken.count(xi)) {
                xi += "'";
            }
            taken.insert(xi);
            m.alphabet.push_back(xi);
            m.rho.emplace_back(x, xi);
            number_of[{q, x}] = xi;
        }
    }

    auto add_entry = [&m](const Symbol& upper, const Symbol& lower, StateId from, StateId to) {
        auto& matrix = m.operators[SymbolPair{upper, lower}];
        matrix.columns.resize(m.states.size());
        matrix.columns[from].push_back(ColumnEntry{to, Complex(1.0, 0.0), "1"});
    };

    add_entry(kLeftEndmarker, kLeftEndmarker, m.start, *m.state_index(d.start));
    for (const auto& x : d.alphabet) {
        for (const auto& q : d.states) {
            const std::string& target = d.delta.at({q, x});
            add_entry(x, number_of.at({q, x}), *m.state_index(q), *m.state_index(target));
        }
    }
    for (const auto& f : d.final_states) {
        add_entry(kRightEndmarker, kRightEndmarker, *m.state_index(f),
                  *m.state_index(accept_name.at(f)));
    }

    return m;
}

} // namespace wkqfa
