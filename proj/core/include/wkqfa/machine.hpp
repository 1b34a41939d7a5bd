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
#include <optional>
#include <string>
#include <vector>

#include "wkqfa/types.hpp"

namespace wkqfa {

enum class HaltClass : unsigned char { NonHalting, Accepting, Rejecting };

struct SymbolPair {
    Symbol upper;
    Symbol lower;

    auto operator<=>(const SymbolPair&) const = default;
};

/// One specified matrix entry <to|U_{upper,lower}|from>. The source
/// expression text is kept so files round-trip byte-identically.
struct ColumnEntry {
    StateId to;
    Complex amp;
    std::string amp_text;
};

/// Sparse column-major operator: columns[src] lists the nonzero targets of
/// U|src>. Column = source state, row = target state.
struct OperatorMatrix {
    std::vector<std::vector<ColumnEntry>> columns;
};

struct HeadDirections {
    int d1 = 0; // upper head: 0 stay, 1 right
    int d2 = 0; // lower head
};

/// The full machine: seven tuple plus operator table and head-direction map.
///
/// Operators are stored only for symbol pairs with at least one specified
/// entry. During a run, reading a pair with no materialized operator behaves
/// as an all-reject operator (every source goes to an implicit fresh
/// rejecting state, heads stay put); see derive_delta.
struct MachineDef {
    std::vector<std::string> states;           // Q, declaration order; completion appends
    StateId start = 0;                         // q_0
    std::vector<HaltClass> halt;               // per state
    std::vector<Symbol> alphabet;              // V ('#'/'$' excluded)
    ComplementarityRelation rho;               // declared order
    std::vector<HeadDirections> directions;    // D, total over states
    std::map<SymbolPair, OperatorMatrix> operators;
    bool completed = false;

    std::optional<StateId> state_index(const std::string& name) const;
    bool is_alphabet_symbol(const Symbol& s) const;
    /// True for symbols of the working alphabet V + endmarkers.
    bool is_working_symbol(const Symbol& s) const;
    HaltClass halt_class(StateId q) const {
        return q == kDefaultReject ? HaltClass::Rejecting : halt[q];
    }
    /// Upper alphabet: symbols appearing as first components of rho, in
    /// alphabet declaration order.
    std::vector<Symbol> upper_alphabet() const;
};

/// One nonzero transition of delta(q, sigma, tau, ., ., .): target, the head
/// movement D(target), and the amplitude.
struct DeltaEntry {
    StateId target;
    int d1;
    int d2;
    Complex amp;
};

struct WellFormedReport {
    struct PerOperator {
        SymbolPair op;
        double max_deviation; // max |Gram - I| entry over checked columns
    };
    std::vector<PerOperator> per_operator;
    double worst = 0.0;
    double tol = kDefaultTol;
    bool ok = true; // worst <= tol

    bool well_formed(double t) const { return worst <= t; }
};

/// Parses a machine document (JSON, schema in the README). The result has
/// validated references but operators are NOT yet completed.
///
/// Errors: malformed JSON or schema violations; unknown state/symbol
/// references; duplicate operator entries for one (sigma, tau, from, to);
/// '#'/'$' inside the alphabet; unknown top-level keys.
MachineDef load_machine(const std::string& document);

/// Serializes a machine back to its document form (stable bytes: object keys
/// sorted, arrays in declaration order, amplitudes as their source text).
std::string machine_to_json(const MachineDef& m);

/// Default-reject completion. For every materialized (sigma, tau) each zero
/// column of a non-halting state is redirected to a fresh rejecting state
/// named q_rej<state,sigma,tau> with D = (0,0). Idempotent.
///
/// Errors: a partially specified column with norm strictly between 0 and 1,
/// and specified columns of one operator that are not orthogonal.
MachineDef complete_operators(const MachineDef& m, double tol = kDefaultTol);

/// Per-(sigma, tau) deviation of the column Gram matrix from the identity.
/// Columns checked: non-halting states plus any state with specified entries.
/// Requires completed operators.
WellFormedReport check_well_formed(const MachineDef& m, double tol = kDefaultTol);

/// Nonzero entries of column (sigma, tau, q), tagged with D(target).
/// For a pair with no materialized operator returns the single implicit
/// default-reject entry {kDefaultReject, 0, 0, 1}.
/// Errors: unknown state or symbol outside the working alphabet.
std::vector<DeltaEntry> derive_delta(const MachineDef& m, StateId q, const Symbol& sigma,
                                     const Symbol& tau);

/// Name for the implicit rejecting state of column (q, sigma, tau); only
/// needed for diagnostics.
std::string default_reject_name(const MachineDef& m, StateId q, const Symbol& sigma,
                                const Symbol& tau);

/// True iff rho is an injective function on the upper symbols it mentions:
/// each such symbol has exactly one complement and no lower symbol is shared.
bool is_strong(const MachineDef& m);

} // namespace wkqfa
