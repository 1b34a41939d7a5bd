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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "wkqfa/errors.hpp"

namespace wkqfa::testing {

DenseOutcome dense_run(const MachineDef& m, const Strand& w1, const Strand& w2,
                       std::uint64_t step_cap) {
    TapePair tapes = make_tapes(w1, w2);
    const std::size_t ulen = tapes.upper.size();
    const std::size_t llen = tapes.lower.size();
    const std::size_t nq = m.states.size();
    const std::size_t dim = nq * ulen * llen;

    auto index = [&](StateId q, std::size_t i, std::size_t j) {
        return (static_cast<std::size_t>(q) * ulen + i) * llen + j;
    };

    // One global evolution matrix; column (q,i,j) holds the images of that
    // configuration under the operator of the symbols at (i, j). Reads of a
    // pair with no operator route the column's mass straight to rejection.
    std::vector<Complex> matrix(dim * dim, Complex(0.0, 0.0));
    std::vector<char> default_reject(dim, 0);
    for (StateId q = 0; q < nq; ++q) {
        if (m.halt[q] != HaltClass::NonHalting) {
            continue;
        }
        for (std::size_t i = 0; i < ulen; ++i) {
            for (std::size_t j = 0; j < llen; ++j) {
                const std::size_t col = index(q, i, j);
                auto it = m.operators.find(SymbolPair{tapes.upper[i], tapes.lower[j]});
                if (it == m.operators.end() || q >= it->second.columns.size() ||
                    it->second.columns[q].empty()) {
                    default_reject[col] = 1;
                    continue;
                }
                for (const auto& e : it->second.columns[q]) {
                    std::size_t ni = i + static_cast<std::size_t>(m.directions[e.to].d1);
                    std::size_t nj = j + static_cast<std::size_t>(m.directions[e.to].d2);
                    if (ni >= ulen || nj >= llen) {
                        throw SimulationError("dense_run: head overrun");
                    }
                    matrix[index(e.to, ni, nj) * dim + col] += e.amp;
                }
            }
        }
    }

    std::vector<Complex> v(dim, Complex(0.0, 0.0));
    std::vector<Complex> next(dim);
    DenseOutcome out;
    switch (m.halt_class(m.start)) {
        case HaltClass::Accepting:
            out.p_acc = 1.0;
            return out;
        case HaltClass::Rejecting:
            out.p_rej = 1.0;
            return out;
        case HaltClass::NonHalting:
            break;
    }
    v[index(m.start, 0, 0)] = Complex(1.0, 0.0);

    std::uint64_t cap = step_cap != 0 ? step_cap : 4ull * nq * ulen * llen;
    for (std::uint64_t n = 1; n <= cap; ++n) {
        std::fill(next.begin(), next.end(), Complex(0.0, 0.0));
        for (std::size_t col = 0; col < dim; ++col) {
            if (v[col] == Complex(0.0, 0.0)) {
                continue;
            }
            if (default_reject[col]) {
                out.p_rej += std::norm(v[col]);
                continue;
            }
            const Complex scale = v[col];
            for (std::size_t row = 0; row < dim; ++row) {
                next[row] += matrix[row * dim + col] * scale;
            }
        }
        out.steps = static_cast<int>(n);
        for (StateId q = 0; q < nq; ++q) {
            if (m.halt[q] == HaltClass::NonHalting) {
                continue;
            }
            for (std::size_t i = 0; i < ulen; ++i) {
                for (std::size_t j = 0; j < llen; ++j) {
                    Complex& a = next[index(q, i, j)];
                    double p = std::norm(a);
                    if (p == 0.0) {
                        continue;
                    }
                    if (m.halt[q] == HaltClass::Accepting) {
                        out.p_acc += p;
                    } else {
                        out.p_rej += p;
                    }
                    a = Complex(0.0, 0.0);
                }
            }
        }
        v.swap(next);
        double residual = 0.0;
        for (const auto& a : v) {
            residual += std::norm(a);
        }
        if (1.0 - (out.p_acc + out.p_rej) <= 1e-12) {
            out.p_residual = residual;
            return out;
        }
    }
    double residual = 0.0;
    for (const auto& a : v) {
        residual += std::norm(a);
    }
    out.p_residual = residual;
    return out;
}

ClassicalResult classical_two_head_run(const MachineDef& m, const Strand& w1, const Strand& w2) {
    TapePair tapes = make_tapes(w1, w2);
    std::set<std::tuple<StateId, std::size_t, std::size_t>> visited;
    StateId q = m.start;
    std::size_t i = 0, j = 0;
    while (true) {
        switch (m.halt_class(q)) {
            case HaltClass::Accepting:
                return ClassicalResult::Accept;
            case HaltClass::Rejecting:
                return ClassicalResult::Reject;
            case HaltClass::NonHalting:
                break;
        }
        if (!visited.insert({q, i, j}).second) {
            return ClassicalResult::Loop;
        }
        auto it = m.operators.find(SymbolPair{tapes.upper[i], tapes.lower[j]});
        if (it == m.operators.end() || q >= it->second.columns.size() ||
            it->second.columns[q].empty()) {
            return ClassicalResult::Reject;
        }
        const auto& column = it->second.columns[q];
        if (column.size() != 1) {
            throw ValidationError("classical_two_head_run: machine is not permutation-like");
        }
        StateId target = column.front().to;
        i += static_cast<std::size_t>(m.directions[target].d1);
        j += static_cast<std::size_t>(m.directions[target].d2);
        if (i >= tapes.upper.size() || j >= tapes.lower.size()) {
            throw SimulationError("classical_two_head_run: head overrun");
        }
        q = target;
    }
}

bool classical_exists_strand_accepts(const MachineDef& m, const Strand& w1) {
    ComplementEnumerator strands(w1, m.rho);
    for (std::uint64_t i = 0; i < strands.count(); ++i) {
        if (classical_two_head_run(m, w1, strands.at(i)) == ClassicalResult::Accept) {
            return true;
        }
    }
    return false;
}

DfaDef random_dfa(std::mt19937& rng, int max_states) {
    std::uniform_int_distribution<int> nstates_dist(1, max_states);
    int n = nstates_dist(rng);
    DfaDef d;
    for (int i = 0; i < n; ++i) {
        d.states.push_back("s" + std::to_string(i));
    }
    d.alphabet = {"a", "b"};
    d.start = d.states[std::uniform_int_distribution<int>(0, n - 1)(rng)];
    for (const auto& q : d.states) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
            d.final_states.push_back(q);
        }
    }
    for (const auto& q : d.states) {
        for (const auto& x : d.alphabet) {
            d.delta[{q, x}] = d.states[std::uniform_int_distribution<int>(0, n - 1)(rng)];
        }
    }
    return d;
}

MachineDef random_permutation_machine(std::mt19937& rng) {
    MachineDef m;
    std::uniform_int_distribution<int> nstates_dist(2, 5);
    int n = nstates_dist(rng);
    for (int i = 0; i < n; ++i) {
        m.states.push_back("p" + std::to_string(i));
    }
    m.alphabet = {"a", "b"};
    // rho: identity plus optionally the crossed pairs, so some words have
    // several strands.
    m.rho = {{"a", "a"}, {"b", "b"}};
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        m.rho.push_back({"a", "b"});
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        m.rho.push_back({"b", "a"});
    }

    m.halt.assign(m.states.size(), HaltClass::NonHalting);
    m.directions.resize(m.states.size());
    for (int i = 0; i < n; ++i) {
        m.directions[i] = HeadDirections{std::uniform_int_distribution<int>(0, 1)(rng),
                                         std::uniform_int_distribution<int>(0, 1)(rng)};
    }
    m.start = 0;
    // Last state accepts; second-to-last (when present) rejects.
    m.halt[n - 1] = HaltClass::Accepting;
    if (n >= 3) {
        m.halt[n - 2] = HaltClass::Rejecting;
    }

    std::vector<Symbol> working = {kLeftEndmarker, "a", "b", kRightEndmarker};
    for (const auto& sigma : working) {
        for (const auto& tau : working) {
            if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
                continue; // leave this pair fully unspecified
            }
            OperatorMatrix matrix;
            matrix.columns.resize(m.states.size());
            // Partial injective map over targets that cannot run off '$'.
            std::vector<StateId> targets;
            for (StateId t = 0; t < m.states.size(); ++t) {
                if (sigma == kRightEndmarker && m.directions[t].d1 != 0) {
                    continue;
                }
                if (tau == kRightEndmarker && m.directions[t].d2 != 0) {
                    continue;
                }
                targets.push_back(t);
            }
            std::shuffle(targets.begin(), targets.end(), rng);
            std::size_t used = 0;
            for (StateId q = 0; q < m.states.size() && used < targets.size(); ++q) {
                if (m.halt[q] != HaltClass::NonHalting) {
                    continue;
                }
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                    continue; // leave this column for completion
                }
                matrix.columns[q].push_back(
                    ColumnEntry{targets[used++], Complex(1.0, 0.0), "1"});
            }
            bool any = false;
            for (const auto& col : matrix.columns) {
                any = any || !col.empty();
            }
            if (any) {
                m.operators.emplace(SymbolPair{sigma, tau}, std::move(matrix));
            }
        }
    }
    return complete_operators(m);
}

MachineDef random_orthonormal_machine(std::mt19937& rng) {
    MachineDef m;
    std::uniform_int_distribution<int> nstates_dist(2, 5);
    int n = nstates_dist(rng);
    for (int i = 0; i < n; ++i) {
        m.states.push_back("r" + std::to_string(i));
    }
    m.alphabet = {"a"};
    m.rho = {{"a", "a"}};
    m.halt.assign(m.states.size(), HaltClass::NonHalting);
    m.halt[n - 1] = HaltClass::Accepting;
    m.directions.resize(m.states.size());
    for (int i = 0; i < n; ++i) {
        m.directions[i] = HeadDirections{std::uniform_int_distribution<int>(0, 1)(rng),
                                         std::uniform_int_distribution<int>(0, 1)(rng)};
    }
    m.start = 0;

    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Symbol> working = {kLeftEndmarker, "a", kRightEndmarker};
    for (const auto& sigma : working) {
        for (const auto& tau : working) {
            int specified = std::uniform_int_distribution<int>(0, n)(rng);
            if (specified == 0) {
                continue;
            }
            // Random orthonormal set of `specified` dense columns.
            std::vector<std::vector<Complex>> cols;
            for (int c = 0; c < specified; ++c) {
                std::vector<Complex> col(n);
                for (int r = 0; r < n; ++r) {
                    col[r] = Complex(gauss(rng), gauss(rng));
                }
                for (const auto& prev : cols) {
                    Complex dot(0.0, 0.0);
                    for (int r = 0; r < n; ++r) {
                        dot += std::conj(prev[r]) * col[r];
                    }
                    for (int r = 0; r < n; ++r) {
                        col[r] -= dot * prev[r];
                    }
                }
                double norm = 0.0;
                for (const auto& a : col) {
                    norm += std::norm(a);
                }
                norm = std::sqrt(norm);
                if (norm < 1e-6) {
                    continue;
                }
                for (auto& a : col) {
                    a /= norm;
                }
                cols.push_back(std::move(col));
            }
            OperatorMatrix matrix;
            matrix.columns.resize(m.states.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                for (int r = 0; r < n; ++r) {
                    if (std::abs(cols[c][r]) > 1e-12) {
                        matrix.columns[c].push_back(
                            ColumnEntry{static_cast<StateId>(r), cols[c][r], ""});
                    }
                }
            }
            m.operators.emplace(SymbolPair{sigma, tau}, std::move(matrix));
        }
    }
    return m;
}

std::vector<Strand> words_up_to(const std::vector<Symbol>& symbols, std::size_t max_len) {
    std::vector<Strand> words;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && symbols.empty()) {
            break;
        }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < len; ++i) {
            total *= symbols.size();
        }
        for (std::uint64_t w = 0; w < total; ++w) {
            Strand word(len);
            std::uint64_t x = w;
            for (std::size_t i = len; i-- > 0;) {
                word[i] = symbols[x % symbols.size()];
                x /= symbols.size();
            }
            words.push_back(std::move(word));
        }
    }
    return words;
}

} // namespace wkqfa::testing
