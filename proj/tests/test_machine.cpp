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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wkqfa/amplitude.hpp"
#include "wkqfa/corpus.hpp"
#include "wkqfa/errors.hpp"

using namespace wkqfa;

namespace {

// A minimal two-state machine document used as a mutation base.
std::string tiny_machine(const std::string& extra_ops = "") {
    return R"({
      "states": ["p", "q"],
      "start": "p",
      "accept": ["q"],
      "reject": [],
      "alphabet": ["a"],
      "rho": [["a", "a"]],
      "directions": {"p": [0, 1], "q": [0, 0]},
      "operators": [)" +
           extra_ops + R"(]
    })";
}

} // namespace

TEST_CASE("load_machine validates the document") {
    CHECK_THROWS_AS(load_machine("not json"), ParseError);
    CHECK_THROWS_AS(load_machine("[1,2]"), ParseError);

    // empty states
    CHECK_THROWS_AS(
        load_machine(R"({"states": [], "start": "p", "accept": [], "reject": [],
                      "alphabet": [], "rho": [], "directions": {}, "operators": []})"),
        ValidationError);

    // '#' in the alphabet
    CHECK_THROWS_AS(
        load_machine(R"({"states": ["p"], "start": "p", "accept": [], "reject": [],
                      "alphabet": ["#"], "rho": [], "directions": {"p": [0,0]},
                      "operators": []})"),
        ValidationError);

    // unknown top-level key
    CHECK_THROWS_AS(
        load_machine(R"({"states": ["p"], "start": "p", "accept": [], "reject": [],
                      "alphabet": [], "rho": [], "directions": {"p": [0,0]},
                      "operators": [], "comment": "hi"})"),
        ValidationError);

    // unknown state reference in an operator entry
    CHECK_THROWS_AS(
        load_machine(tiny_machine(
            R"({"upper": "a", "lower": "a",
                "entries": [{"from": "p", "to": "zz", "amp": "1"}]})")),
        ValidationError);

    // duplicate entry for one (sigma, tau, from, to)
    CHECK_THROWS_AS(
        load_machine(tiny_machine(
            R"({"upper": "a", "lower": "a",
                "entries": [{"from": "p", "to": "q", "amp": "1/2"},
                             {"from": "p", "to": "q", "amp": "1/2"}]})")),
        ValidationError);

    // missing directions
    CHECK_THROWS_AS(
        load_machine(R"({"states": ["p"], "start": "p", "accept": [], "reject": [],
                      "alphabet": [], "rho": [], "directions": {}, "operators": []})"),
        ValidationError);
}

TEST_CASE("completion redirects zero columns to fresh rejecting states") {
    const CorpusEntry& entry = get_machine("example1_anbncn");
    MachineDef raw = load_machine(entry.machine_json);
    CHECK(raw.states.size() == 5);
    CHECK_FALSE(raw.completed);

    MachineDef m = complete_operators(raw);
    CHECK(m.completed);
    CHECK(m.states.size() > 5);

    // (a, a) has no materialized operator: column (a, a, q_0) behaves as a
    // fresh rejecting state with D = (0, 0).
    auto entries = derive_delta(m, *m.state_index("q0"), "a", "a");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].target == kDefaultReject);
    CHECK(entries[0].d1 == 0);
    CHECK(entries[0].d2 == 0);
    CHECK(entries[0].amp == Complex(1.0, 0.0));

    // (b, $) is materialized; its q3 column was completed with a fresh state.
    auto completed = derive_delta(m, *m.state_index("q3"), "b", "$");
    REQUIRE(completed.size() == 1);
    CHECK(completed[0].target != kDefaultReject);
    CHECK(m.halt_class(completed[0].target) == HaltClass::Rejecting);
    CHECK(completed[0].d1 == 0);
    CHECK(completed[0].d2 == 0);
}

TEST_CASE("completion is idempotent") {
    MachineDef once = get_machine("example1_anbncn").machine;
    MachineDef twice = complete_operators(once);
    CHECK(once.states == twice.states);
    for (const auto& [pair, matrix] : once.operators) {
        const auto& again = twice.operators.at(pair);
        REQUIRE(matrix.columns.size() == again.columns.size());
        for (std::size_t q = 0; q < matrix.columns.size(); ++q) {
            CHECK(matrix.columns[q].size() == again.columns[q].size());
        }
    }
}

TEST_CASE("completion leaves fully specified unitaries unchanged") {
    // One-state machine with the identity on (a, a): nothing to complete.
    MachineDef m = load_machine(R"({
      "states": ["p"], "start": "p", "accept": [], "reject": ["p"],
      "alphabet": ["a"], "rho": [["a", "a"]], "directions": {"p": [0, 0]},
      "operators": [{"upper": "a", "lower": "a",
                     "entries": [{"from": "p", "to": "p", "amp": "1"}]}]
    })");
    MachineDef done = complete_operators(m);
    CHECK(done.states.size() == 1);
}

TEST_CASE("completion rejects ambiguous and non-orthogonal columns") {
    // norm strictly between 0 and 1
    CHECK_THROWS_AS(
        complete_operators(load_machine(tiny_machine(
            R"({"upper": "a", "lower": "a",
                "entries": [{"from": "p", "to": "q", "amp": "1/2"}]})"))),
        ValidationError);

    // two identical columns
    CHECK_THROWS_AS(
        complete_operators(load_machine(tiny_machine(
            R"({"upper": "a", "lower": "a",
                "entries": [{"from": "p", "to": "q", "amp": "1"},
                             {"from": "q", "to": "q", "amp": "1"}]})"))),
        ValidationError);
}

TEST_CASE("check_well_formed reports Gram deviations") {
    const MachineDef& m = get_machine("example1_anbncn").machine;
    WellFormedReport report = check_well_formed(m);
    CHECK(report.ok);
    CHECK(report.worst <= 1e-12);
    CHECK(report.per_operator.size() == m.operators.size());

    // Duplicating a column breaks orthogonality with deviation 1.
    MachineDef broken = m;
    auto& matrix = broken.operators.at(SymbolPair{"#", "#"});
    matrix.columns[*broken.state_index("q1")] = matrix.columns[*broken.state_index("q0")];
    WellFormedReport bad = check_well_formed(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.worst == doctest::Approx(1.0));
}

TEST_CASE("derive_delta tags entries with the target's directions") {
    const MachineDef& m = get_machine("example1_anbncn").machine;
    auto entries = derive_delta(m, *m.state_index("q0"), "#", "b");
    REQUIRE(entries.size() == 1);
    CHECK(m.states[entries[0].target] == "q1");
    CHECK(entries[0].d1 == 1);
    CHECK(entries[0].d2 == 1);
    CHECK(approx_eq(entries[0].amp, Complex(1.0, 0.0), 1e-12));

    const MachineDef& ww = get_machine("theorem5_ww").machine;
    auto split = derive_delta(ww, *ww.state_index("q0"), "#", "m");
    REQUIRE(split.size() == 2);
    CHECK(ww.states[split[0].target] == "q1");
    CHECK(ww.states[split[1].target] == "q2");
    for (const auto& e : split) {
        CHECK(e.d1 == 0);
        CHECK(e.d2 == 0);
        CHECK(approx_eq(e.amp, Complex(1.0 / std::sqrt(2.0), 0.0), 1e-12));
    }

    CHECK_THROWS_AS(derive_delta(m, 9999, "a", "a"), ValidationError);
    CHECK_THROWS_AS(derive_delta(m, 0, "z", "a"), ValidationError);
}

TEST_CASE("completed columns are unit vectors") {
    for (const auto& name : corpus_names()) {
        const MachineDef& m = get_machine(name).machine;
        for (StateId q = 0; q < m.states.size(); ++q) {
            if (m.halt[q] != HaltClass::NonHalting) {
                continue;
            }
            for (const auto& [pair, matrix] : m.operators) {
                double norm2 = 0.0;
                for (const auto& e : matrix.columns[q]) {
                    norm2 += std::norm(e.amp);
                }
                CHECK(std::abs(norm2 - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("is_strong detects injective pairings") {
    CHECK(is_strong(get_machine("example1_anbncn").machine));
    CHECK_FALSE(is_strong(get_machine("example2_regex").machine));
    CHECK_FALSE(is_strong(get_machine("theorem5_ww").machine));

    MachineDef empty_rho = load_machine(tiny_machine());
    empty_rho.rho.clear();
    CHECK(is_strong(empty_rho));
}

TEST_CASE("random orthonormal machines complete to well-formed machines") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 25; ++trial) {
        MachineDef m = testing::random_orthonormal_machine(rng);
        MachineDef done = complete_operators(m);
        WellFormedReport report = check_well_formed(done);
        CHECK(report.worst <= 1e-9);
    }
}

TEST_CASE("machine_to_json round trips") {
    const CorpusEntry& entry = get_machine("theorem5_ww");
    MachineDef raw = load_machine(entry.machine_json);
    std::string again = machine_to_json(raw);
    CHECK(again == entry.machine_json);
    MachineDef reloaded = load_machine(again);
    CHECK(reloaded.states == raw.states);
    CHECK(reloaded.rho == raw.rho);
}
