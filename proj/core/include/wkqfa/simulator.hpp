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

#include <cstdint>
#include <map>
#include <optional>

#include "wkqfa/machine.hpp"
#include "wkqfa/strand.hpp"
#include "wkqfa/types.hpp"

namespace wkqfa {

/// (state, upper head, lower head); position 0 is '#'.
struct Configuration {
    StateId state;
    std::uint32_t upos;
    std::uint32_t lpos;

    auto operator<=>(const Configuration&) const = default;
};

/// Association configuration -> amplitude, zero entries absent.
using Superposition = std::map<Configuration, Complex>;

enum class HaltReason { AllHalted, StepCap, HeadOverrun };

struct StepResult {
    Superposition next;
    double dp_acc = 0.0;
    double dp_rej = 0.0;
};

/// One transformation + observation. Evolves every configuration by the
/// operator of the symbols under its heads, then projects accepting and
/// rejecting configurations out (their probability accumulates; the residual
/// is not renormalized).
///
/// Requires completed operators and a superposition of non-halting states.
/// Throws SimulationError when amplitude would be assigned beyond '$'.
StepResult step(const MachineDef& m, const TapePair& tapes, const Superposition& s);

struct TraceRecord {
    int step;
    double dp_acc;
    double dp_rej;
    std::vector<std::pair<Configuration, Complex>> configs; // residual after measuring
};

struct RunOptions {
    /// 0 selects the default cap 4 * |Q| * (|w1|+2) * (|w2|+2).
    std::uint64_t step_cap = 0;
    bool trace = false;
};

struct RunOutcome {
    double p_acc = 0.0;
    double p_rej = 0.0;
    double p_residual = 0.0;
    int steps = 0;
    HaltReason halt_reason = HaltReason::AllHalted;
    /// Set when some step changed the total norm by more than 1e-6 outside
    /// measurement; surfaces ill-posed machines instead of probabilities > 1.
    bool norm_anomaly = false;
    double max_norm_drift = 0.0;
    std::vector<TraceRecord> trace;
};

/// Runs w1 against one complementary strand w2 from {(q_0, 0, 0): 1} until
/// the halted probability reaches 1 - 1e-12 or the step cap is hit.
/// Requires is_complementary(w1, w2, rho).
RunOutcome run_strand(const MachineDef& m, const Strand& w1, const Strand& w2,
                      const RunOptions& opts = {});

struct AcceptancePolicy {
    enum class Mode {
        ExistsStrandCertain,  // some strand with p_acc >= 1 - tol
        ExistsStrandCutpoint, // some strand with p_acc >= theta
        BoundedError,         // certain; else all strands must have p_rej >= 1/2 - tol
    };
    Mode mode = Mode::ExistsStrandCertain;
    double theta = 1.0;
    double tol = kDefaultTol;
};

struct AcceptOptions {
    std::uint64_t strand_budget = std::uint64_t{1} << 20;
    unsigned jobs = 1;
    RunOptions run;
};

struct Decision {
    bool accepted = false;
    std::optional<Strand> witness; // first qualifying strand in enumeration order
    double best_p_acc = 0.0;
    std::uint64_t strands_examined = 0;
    /// BoundedError only: the word was not accepted and some strand rejects
    /// with probability below 1/2 - tol.
    bool policy_violation = false;
};

/// Exists-strand acceptance: enumerates complements(w1, rho) and applies the
/// policy. All strands are evaluated (no early exit), so results do not
/// depend on the job count. Throws BudgetError when the strand count exceeds
/// the budget.
Decision accepts(const MachineDef& m, const Strand& w1, const AcceptancePolicy& policy,
                 const AcceptOptions& opts = {});

struct SweepRow {
    Strand word;
    bool accepted = false;
    double best_p_acc = 0.0;
    bool budget_exceeded = false;
};

/// Membership table over all upper words of length <= max_len, in
/// length-then-lex order (lex by alphabet declaration order). Words whose
/// strand count exceeds the budget are marked instead of aborting the sweep.
std::vector<SweepRow> language_sweep(const MachineDef& m, std::size_t max_len,
                                     const AcceptancePolicy& policy,
                                     const AcceptOptions& opts = {});

} // namespace wkqfa
