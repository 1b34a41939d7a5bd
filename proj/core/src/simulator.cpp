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

#include "wkqfa/simulator.hpp"

#include <cmath>
#include <future>
#include <thread>

#include "wkqfa/errors.hpp"

namespace wkqfa {

namespace {

constexpr double kHaltedThreshold = 1e-12;
constexpr double kPruneThreshold = 1e-15; // on |amp|^2
constexpr double kNormDriftLimit = 1e-6;

double total_norm2(const Superposition& s) {
    double n = 0.0;
    for (const auto& [cfg, amp] : s) {
        n += std::norm(amp);
    }
    return n;
}

struct StepStatus {
    bool overrun = false;
};

StepResult step_impl(const MachineDef& m, const TapePair& tapes, const Superposition& s,
                     StepStatus& status) {
    StepResult result;
    for (const auto& [cfg, amp] : s) {
        const Symbol& sigma = tapes.upper[cfg.upos];
        const Symbol& tau = tapes.lower[cfg.lpos];
        for (const auto& entry : derive_delta(m, cfg.state, sigma, tau)) {
            Complex contribution = amp * entry.amp;
            if (entry.target == kDefaultReject) {
                result.dp_rej += std::norm(contribution);
                continue;
            }
            std::uint32_t ni = cfg.upos + static_cast<std::uint32_t>(entry.d1);
            std::uint32_t nj = cfg.lpos + static_cast<std::uint32_t>(entry.d2);
            if (ni >= tapes.upper.size() || nj >= tapes.lower.size()) {
                status.overrun = true;
                return result;
            }
            result.next[Configuration{entry.target, ni, nj}] += contribution;
        }
    }
    // Observe: project halting configurations out, accumulate probability.
    for (auto it = result.next.begin(); it != result.next.end();) {
        double p = std::norm(it->second);
        switch (m.halt_class(it->first.state)) {
            case HaltClass::Accepting:
                result.dp_acc += p;
                it = result.next.erase(it);
                break;
            case HaltClass::Rejecting:
                result.dp_rej += p;
                it = result.next.erase(it);
                break;
            case HaltClass::NonHalting:
                if (p < kPruneThreshold) {
                    it = result.next.erase(it);
                } else {
                    ++it;
                }
                break;
        }
    }
    return result;
}

} // namespace

StepResult step(const MachineDef& m, const TapePair& tapes, const Superposition& s) {
    if (!m.completed) {
        throw ValidationError("step: operators are not completed");
    }
    StepStatus status;
    StepResult result = step_impl(m, tapes, s, status);
    if (status.overrun) {
        throw SimulationError("step: head moved past an endmarker");
    }
    return result;
}

RunOutcome run_strand(const MachineDef& m, const Strand& w1, const Strand& w2,
                      const RunOptions& opts) {
    if (!m.completed) {
        throw ValidationError("run_strand: operators are not completed");
    }
    if (!is_complementary(w1, w2, m.rho)) {
        throw ValidationError("run_strand: strands are not complementary under rho");
    }
    TapePair tapes = make_tapes(w1, w2);
    std::uint64_t cap = opts.step_cap != 0
                            ? opts.step_cap
                            : 4ull * m.states.size() * tapes.upper.size() * tapes.lower.size();

    RunOutcome outcome;
    Superposition s;

    // A halting start state is observed before any transformation applies.
    switch (m.halt_class(m.start)) {
        case HaltClass::Accepting:
            outcome.p_acc = 1.0;
            return outcome;
        case HaltClass::Rejecting:
            outcome.p_rej = 1.0;
            return outcome;
        case HaltClass::NonHalting:
            break;
    }
    s[Configuration{m.start, 0, 0}] = Complex(1.0, 0.0);

    for (std::uint64_t n = 1; n <= cap; ++n) {
        double norm_before = total_norm2(s);
        StepStatus status;
        StepResult result = step_impl(m, tapes, s, status);
        if (status.overrun) {
            outcome.halt_reason = HaltReason::HeadOverrun;
            outcome.p_residual = norm_before;
            return outcome;
        }
        outcome.steps = static_cast<int>(n);
        outcome.p_acc += result.dp_acc;
        outcome.p_rej += result.dp_rej;
        s = std::move(result.next);

        double norm_after = total_norm2(s);
        double drift = std::abs(norm_before - (norm_after + result.dp_acc + result.dp_rej));
        outcome.max_norm_drift = std::max(outcome.max_norm_drift, drift);
        if (drift > kNormDriftLimit) {
            outcome.norm_anomaly = true;
        }

        if (opts.trace) {
            TraceRecord record;
            record.step = static_cast<int>(n);
            record.dp_acc = result.dp_acc;
            record.dp_rej = result.dp_rej;
            record.configs.assign(s.begin(), s.end());
            outcome.trace.push_back(std::move(record));
        }

        if (1.0 - (outcome.p_acc + outcome.p_rej) <= kHaltedThreshold) {
            outcome.p_residual = norm_after;
            outcome.halt_reason = HaltReason::AllHalted;
            return outcome;
        }
    }
    outcome.p_residual = total_norm2(s);
    outcome.halt_reason = HaltReason::StepCap;
    return outcome;
}

namespace {

bool strand_qualifies(const AcceptancePolicy& policy, const RunOutcome& run) {
    switch (policy.mode) {
        case AcceptancePolicy::Mode::ExistsStrandCertain:
        case AcceptancePolicy::Mode::BoundedError:
            return run.p_acc >= 1.0 - policy.tol;
        case AcceptancePolicy::Mode::ExistsStrandCutpoint:
            return run.p_acc >= policy.theta;
    }
    return false;
}

} // namespace

Decision accepts(const MachineDef& m, const Strand& w1, const AcceptancePolicy& policy,
                 const AcceptOptions& opts) {
    std::uint64_t count = count_complements(w1, m.rho);
    if (count > opts.strand_budget) {
        throw BudgetError("strand budget exceeded: word has " + std::to_string(count) +
                          " complementary strands, budget " + std::to_string(opts.strand_budget));
    }

    ComplementEnumerator strands(w1, m.rho);
    Decision decision;
    decision.strands_examined = count;

    std::vector<std::pair<double, double>> probs(count); // (p_acc, p_rej) per index
    auto evaluate = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            RunOutcome run = run_strand(m, w1, strands.at(i), opts.run);
            probs[i] = {run.p_acc, run.p_rej};
        }
    };

    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || count < 2 * jobs) {
        evaluate(0, count);
    } else {
        std::vector<std::future<void>> futures;
        std::uint64_t chunk = (count + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            std::uint64_t begin = j * chunk;
            std::uint64_t end = std::min(count, begin + chunk);
            if (begin >= end) {
                break;
            }
            futures.push_back(std::async(std::launch::async, evaluate, begin, end));
        }
        for (auto& f : futures) {
            f.get();
        }
    }

    // Order-respecting reduction: witness is the lowest qualifying index.
    for (std::uint64_t i = 0; i < count; ++i) {
        RunOutcome summary;
        summary.p_acc = probs[i].first;
        summary.p_rej = probs[i].second;
        decision.best_p_acc = std::max(decision.best_p_acc, summary.p_acc);
        if (!decision.witness && strand_qualifies(policy, summary)) {
            decision.witness = strands.at(i);
            decision.accepted = true;
        }
    }
    if (policy.mode == AcceptancePolicy::Mode::BoundedError && !decision.accepted) {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (probs[i].second < 0.5 - policy.tol) {
                decision.policy_violation = true;
                break;
            }
        }
    }
    return decision;
}

std::vector<SweepRow> language_sweep(const MachineDef& m, std::size_t max_len,
                                     const AcceptancePolicy& policy, const AcceptOptions& opts) {
    std::vector<Symbol> upper = m.upper_alphabet();
    std::vector<SweepRow> rows;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && upper.empty()) {
            break;
        }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < len; ++i) {
            if (total > (std::uint64_t{1} << 32) / upper.size()) {
                throw BudgetError("language sweep: too many words at length " +
                                  std::to_string(len));
            }
            total *= upper.size();
        }
        for (std::uint64_t w = 0; w < total; ++w) {
            Strand word(len);
            std::uint64_t x = w;
            for (std::size_t i = len; i-- > 0;) {
                word[i] = upper[x % upper.size()];
                x /= upper.size();
            }
            SweepRow row;
            row.word = std::move(word);
            try {
                Decision d = accepts(m, row.word, policy, opts);
                row.accepted = d.accepted;
                row.best_p_acc = d.best_p_acc;
            } catch (const BudgetError&) {
                row.budget_exceeded = true;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace wkqfa
