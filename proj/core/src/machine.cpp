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

#include "wkqfa/machine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "wkqfa/amplitude.hpp"
#include "wkqfa/errors.hpp"

namespace wkqfa {

namespace {

using nlohmann::json;

const std::set<std::string> kMachineKeys = {"states", "start",      "accept",    "reject",
                                            "alphabet", "rho",       "directions", "operators"};

[[noreturn]] void bad(const std::string& what) {
    throw ValidationError("machine document: " + what);
}

std::vector<std::string> string_array(const json& j, const std::string& field) {
    if (!j.is_array()) {
        bad("\"" + field + "\" must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) {
            bad("\"" + field + "\" must contain only strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

// Columns that participate in completion and in the well-formedness Gram
// check: every non-halting state, plus any state that has specified entries.
// Completion-added reject states are halting and never carry entries, so a
// second completion pass finds nothing to do.
std::vector<StateId> checked_columns(const MachineDef& m, const OperatorMatrix& op) {
    std::vector<StateId> cols;
    for (StateId q = 0; q < m.states.size(); ++q) {
        bool specified = q < op.columns.size() && !op.columns[q].empty();
        if (m.halt[q] == HaltClass::NonHalting || specified) {
            cols.push_back(q);
        }
    }
    return cols;
}

Complex column_inner(const std::vector<ColumnEntry>& a, const std::vector<ColumnEntry>& b) {
    // Entries are sparse and unsorted; quadratic scan is fine at this scale.
    Complex sum = 0.0;
    for (const auto& ea : a) {
        for (const auto& eb : b) {
            if (ea.to == eb.to) {
                sum += std::conj(ea.amp) * eb.amp;
            }
        }
    }
    return sum;
}

std::string pair_label(const SymbolPair& p) {
    return "(" + p.upper + "," + p.lower + ")";
}

} // namespace

std::optional<StateId> MachineDef::state_index(const std::string& name) const {
    for (StateId i = 0; i < states.size(); ++i) {
        if (states[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool MachineDef::is_alphabet_symbol(const Symbol& s) const {
    return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
}

bool MachineDef::is_working_symbol(const Symbol& s) const {
    return s == kLeftEndmarker || s == kRightEndmarker || is_alphabet_symbol(s);
}

std::vector<Symbol> MachineDef::upper_alphabet() const {
    std::vector<Symbol> out;
    for (const auto& sym : alphabet) {
        for (const auto& [upper, lower] : rho) {
            if (upper == sym) {
                out.push_back(sym);
                break;
            }
        }
    }
    return out;
}

MachineDef load_machine(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("machine document: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("machine document: top level must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (!kMachineKeys.count(key)) {
            bad("unknown top-level key \"" + key + "\"");
        }
    }
    for (const auto& key : kMachineKeys) {
        if (!doc.contains(key)) {
            bad("missing top-level key \"" + key + "\"");
        }
    }

    MachineDef m;
    m.states = string_array(doc["states"], "states");
    if (m.states.empty()) {
        bad("states list is empty");
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : m.states) {
            if (s.empty()) {
                bad("state names must be non-empty");
            }
            if (!seen.insert(s).second) {
                bad("duplicate state \"" + s + "\"");
            }
        }
    }

    m.alphabet = string_array(doc["alphabet"], "alphabet");
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : m.alphabet) {
            if (s.empty()) {
                bad("alphabet symbols must be non-empty");
            }
            if (s == kLeftEndmarker || s == kRightEndmarker) {
                bad("endmarker \"" + s + "\" may not appear in the alphabet");
            }
            if (!seen.insert(s).second) {
                bad("duplicate alphabet symbol \"" + s + "\"");
            }
        }
    }

    if (!doc["start"].is_string()) {
        bad("\"start\" must be a string");
    }
    auto start = m.state_index(doc["start"].get<std::string>());
    if (!start) {
        bad("start state \"" + doc["start"].get<std::string>() + "\" is not declared");
    }
    m.start = *start;

    m.halt.assign(m.states.size(), HaltClass::NonHalting);
    for (const auto& name : string_array(doc["accept"], "accept")) {
        auto q = m.state_index(name);
        if (!q) {
            bad("accepting state \"" + name + "\" is not declared");
        }
        m.halt[*q] = HaltClass::Accepting;
    }
    for (const auto& name : string_array(doc["reject"], "reject")) {
        auto q = m.state_index(name);
        if (!q) {
            bad("rejecting state \"" + name + "\" is not declared");
        }
        if (m.halt[*q] == HaltClass::Accepting) {
            bad("state \"" + name + "\" is both accepting and rejecting");
        }
        m.halt[*q] = HaltClass::Rejecting;
    }

    if (!doc["rho"].is_array()) {
        bad("\"rho\" must be an array of [upper, lower] pairs");
    }
    std::set<std::pair<Symbol, Symbol>> rho_seen;
    for (const auto& pair : doc["rho"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            bad("each rho element must be a pair of symbols");
        }
        Symbol upper = pair[0].get<std::string>();
        Symbol lower = pair[1].get<std::string>();
        if (!m.is_alphabet_symbol(upper) || !m.is_alphabet_symbol(lower)) {
            bad("rho pair (" + upper + "," + lower + ") uses symbols outside the alphabet");
        }
        if (!rho_seen.insert({upper, lower}).second) {
            bad("duplicate rho pair (" + upper + "," + lower + ")");
        }
        m.rho.emplace_back(upper, lower);
    }

    if (!doc["directions"].is_object()) {
        bad("\"directions\" must map states to [d1, d2]");
    }
    m.directions.assign(m.states.size(), HeadDirections{});
    std::vector<bool> has_dir(m.states.size(), false);
    for (const auto& [name, value] : doc["directions"].items()) {
        auto q = m.state_index(name);
        if (!q) {
            bad("directions for unknown state \"" + name + "\"");
        }
        if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
            !value[1].is_number_integer()) {
            bad("directions for \"" + name + "\" must be [0|1, 0|1]");
        }
        int d1 = value[0].get<int>();
        int d2 = value[1].get<int>();
        if ((d1 != 0 && d1 != 1) || (d2 != 0 && d2 != 1)) {
            bad("directions for \"" + name + "\" must be [0|1, 0|1]");
        }
        m.directions[*q] = HeadDirections{d1, d2};
        has_dir[*q] = true;
    }
    for (StateId q = 0; q < m.states.size(); ++q) {
        if (!has_dir[q]) {
            bad("missing directions for state \"" + m.states[q] + "\"");
        }
    }

    if (!doc["operators"].is_array()) {
        bad("\"operators\" must be an array");
    }
    std::set<std::tuple<Symbol, Symbol, StateId, StateId>> entry_seen;
    for (const auto& op : doc["operators"]) {
        if (!op.is_object() || !op.contains("upper") || !op.contains("lower") ||
            !op.contains("entries")) {
            bad("each operator needs \"upper\", \"lower\", \"entries\"");
        }
        for (const auto& [key, _] : op.items()) {
            if (key != "upper" && key != "lower" && key != "entries") {
                bad("unknown operator key \"" + key + "\"");
            }
        }
        Symbol upper = op["upper"].get<std::string>();
        Symbol lower = op["lower"].get<std::string>();
        if (!m.is_working_symbol(upper) || !m.is_working_symbol(lower)) {
            bad("operator " + pair_label({upper, lower}) +
                " uses symbols outside the working alphabet");
        }
        auto& matrix = m.operators[SymbolPair{upper, lower}];
        matrix.columns.resize(m.states.size());
        if (!op["entries"].is_array()) {
            bad("operator entries must be an array");
        }
        for (const auto& entry : op["entries"]) {
            if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") ||
                !entry.contains("amp")) {
                bad("each entry needs \"from\", \"to\", \"amp\"");
            }
            auto from = m.state_index(entry["from"].get<std::string>());
            auto to = m.state_index(entry["to"].get<std::string>());
            if (!from || !to) {
                bad("operator entry references an undeclared state");
            }
            if (!entry_seen.insert({upper, lower, *from, *to}).second) {
                bad("duplicate operator entry " + pair_label({upper, lower}) + " " +
                    m.states[*from] + " -> " + m.states[*to]);
            }
            std::string amp_text = entry["amp"].get<std::string>();
            Complex amp = parse_amplitude(amp_text);
            matrix.columns[*from].push_back(ColumnEntry{*to, amp, amp_text});
        }
    }

    return m;
}

std::string machine_to_json(const MachineDef& m) {
    json doc;
    doc["states"] = m.states;
    doc["start"] = m.states[m.start];
    json accept = json::array();
    json reject = json::array();
    for (StateId q = 0; q < m.states.size(); ++q) {
        if (m.halt[q] == HaltClass::Accepting) {
            accept.push_back(m.states[q]);
        } else if (m.halt[q] == HaltClass::Rejecting) {
            reject.push_back(m.states[q]);
        }
    }
    doc["accept"] = accept;
    doc["reject"] = reject;
    doc["alphabet"] = m.alphabet;
    json rho = json::array();
    for (const auto& [upper, lower] : m.rho) {
        rho.push_back(json::array({upper, lower}));
    }
    doc["rho"] = rho;
    json directions = json::object();
    for (StateId q = 0; q < m.states.size(); ++q) {
        directions[m.states[q]] = json::array({m.directions[q].d1, m.directions[q].d2});
    }
    doc["directions"] = directions;
    json operators = json::array();
    for (const auto& [pair, matrix] : m.operators) {
        json op;
        op["upper"] = pair.upper;
        op["lower"] = pair.lower;
        json entries = json::array();
        for (StateId from = 0; from < matrix.columns.size(); ++from) {
            for (const auto& e : matrix.columns[from]) {
                entries.push_back(json{{"from", m.states[from]},
                                       {"to", m.states[e.to]},
                                       {"amp", e.amp_text}});
            }
        }
        op["entries"] = entries;
        operators.push_back(op);
    }
    doc["operators"] = operators;
    return doc.dump(2) + "\n";
}

MachineDef complete_operators(const MachineDef& input, double tol) {
    MachineDef m = input;
    for (auto& [pair, matrix] : m.operators) {
        matrix.columns.resize(m.states.size());
    }

    // Completion only ever targets states that existed before this pass, so
    // the per-operator column domain is computed against the input state set.
    const StateId declared = static_cast<StateId>(input.states.size());

    for (auto& [pair, matrix] : m.operators) {
        std::vector<StateId> domain;
        for (StateId q = 0; q < declared; ++q) {
            if (input.halt[q] == HaltClass::NonHalting || !matrix.columns[q].empty()) {
                domain.push_back(q);
            }
        }

        std::vector<StateId> zero_columns;
        for (StateId q : domain) {
            double norm2 = 0.0;
            for (const auto& e : matrix.columns[q]) {
                norm2 += std::norm(e.amp);
            }
            double norm = std::sqrt(norm2);
            if (norm <= tol) {
                zero_columns.push_back(q);
            } else if (std::abs(norm - 1.0) > tol) {
                throw ValidationError("operator " + pair_label(pair) + " column " +
                                      m.states[q] + " has norm " + std::to_string(norm) +
                                      "; completion is ambiguous (must be 0 or 1)");
            }
        }
        for (std::size_t a = 0; a < domain.size(); ++a) {
            for (std::size_t b = a + 1; b < domain.size(); ++b) {
                const auto& ca = matrix.columns[domain[a]];
                const auto& cb = matrix.columns[domain[b]];
                if (ca.empty() || cb.empty()) {
                    continue;
                }
                if (std::abs(column_inner(ca, cb)) > tol) {
                    throw ValidationError("operator " + pair_label(pair) + " columns " +
                                          m.states[domain[a]] + " and " + m.states[domain[b]] +
                                          " are not orthogonal");
                }
            }
        }

        for (StateId q : zero_columns) {
            std::string name =
                "q_rej<" + m.states[q] + "," + pair.upper + "," + pair.lower + ">";
            while (m.state_index(name)) {
                name += "'";
            }
            StateId fresh = static_cast<StateId>(m.states.size());
            m.states.push_back(name);
            m.halt.push_back(HaltClass::Rejecting);
            m.directions.push_back(HeadDirections{0, 0});
            matrix.columns[q] = {ColumnEntry{fresh, Complex(1.0, 0.0), "1"}};
        }
    }

    for (auto& [pair, matrix] : m.operators) {
        matrix.columns.resize(m.states.size());
    }
    m.completed = true;
    return m;
}

WellFormedReport check_well_formed(const MachineDef& m, double tol) {
    static const std::vector<ColumnEntry> kEmptyColumn;
    auto column = [&](const OperatorMatrix& matrix, StateId q) -> const std::vector<ColumnEntry>& {
        return q < matrix.columns.size() ? matrix.columns[q] : kEmptyColumn;
    };
    WellFormedReport report;
    report.tol = tol;
    for (const auto& [pair, matrix] : m.operators) {
        std::vector<StateId> cols = checked_columns(m, matrix);
        double max_dev = 0.0;
        for (std::size_t a = 0; a < cols.size(); ++a) {
            for (std::size_t b = a; b < cols.size(); ++b) {
                Complex g = column_inner(column(matrix, cols[a]), column(matrix, cols[b]));
                double expected = (a == b) ? 1.0 : 0.0;
                max_dev = std::max(max_dev, std::abs(g - Complex(expected, 0.0)));
            }
        }
        report.per_operator.push_back({pair, max_dev});
        report.worst = std::max(report.worst, max_dev);
    }
    report.ok = report.worst <= tol;
    return report;
}

std::vector<DeltaEntry> derive_delta(const MachineDef& m, StateId q, const Symbol& sigma,
                                     const Symbol& tau) {
    if (q == kDefaultReject || q >= m.states.size()) {
        throw ValidationError("derive_delta: unknown state id");
    }
    if (!m.is_working_symbol(sigma) || !m.is_working_symbol(tau)) {
        throw ValidationError("derive_delta: symbol pair (" + sigma + "," + tau +
                              ") is outside the working alphabet");
    }
    auto it = m.operators.find(SymbolPair{sigma, tau});
    if (it == m.operators.end() || q >= it->second.columns.size() ||
        it->second.columns[q].empty()) {
        // Lazy all-reject semantics for unmentioned transitions.
        return {DeltaEntry{kDefaultReject, 0, 0, Complex(1.0, 0.0)}};
    }
    std::vector<DeltaEntry> out;
    out.reserve(it->second.columns[q].size());
    for (const auto& e : it->second.columns[q]) {
        out.push_back(DeltaEntry{e.to, m.directions[e.to].d1, m.directions[e.to].d2, e.amp});
    }
    return out;
}

std::string default_reject_name(const MachineDef& m, StateId q, const Symbol& sigma,
                                const Symbol& tau) {
    return "q_rej<" + (q < m.states.size() ? m.states[q] : std::string("?")) + "," + sigma +
           "," + tau + ">";
}

bool is_strong(const MachineDef& m) {
    std::map<Symbol, std::vector<Symbol>> by_upper;
    for (const auto& [upper, lower] : m.rho) {
        by_upper[upper].push_back(lower);
    }
    std::set<Symbol> lowers_seen;
    for (const auto& [upper, lowers] : by_upper) {
        if (lowers.size() != 1) {
            return false;
        }
        if (!lowers_seen.insert(lowers.front()).second) {
            return false;
        }
    }
    return true;
}

} // namespace wkqfa
