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

#include "wkqfa/strand.hpp"

#include <algorithm>
#include <limits>

#include "wkqfa/errors.hpp"

namespace wkqfa {

TapePair make_tapes(const Strand& w1, const Strand& w2) {
    TapePair tapes;
    tapes.upper.reserve(w1.size() + 2);
    tapes.upper.push_back(kLeftEndmarker);
    tapes.upper.insert(tapes.upper.end(), w1.begin(), w1.end());
    tapes.upper.push_back(kRightEndmarker);
    tapes.lower.reserve(w2.size() + 2);
    tapes.lower.push_back(kLeftEndmarker);
    tapes.lower.insert(tapes.lower.end(), w2.begin(), w2.end());
    tapes.lower.push_back(kRightEndmarker);
    return tapes;
}

bool is_complementary(const Strand& w1, const Strand& w2, const ComplementarityRelation& rho) {
    if (w1.size() != w2.size()) {
        return false;
    }
    for (std::size_t i = 0; i < w1.size(); ++i) {
        bool found = false;
        for (const auto& [upper, lower] : rho) {
            if (upper == w1[i] && lower == w2[i]) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

std::uint64_t count_complements(const Strand& w1, const ComplementarityRelation& rho) {
    std::uint64_t total = 1;
    for (const auto& sym : w1) {
        std::uint64_t n = 0;
        for (const auto& [upper, lower] : rho) {
            if (upper == sym) {
                ++n;
            }
        }
        if (n == 0) {
            return 0;
        }
        if (total > std::numeric_limits<std::uint64_t>::max() / n) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= n;
    }
    return total;
}

ComplementEnumerator::ComplementEnumerator(const Strand& w1, const ComplementarityRelation& rho) {
    options_.reserve(w1.size());
    for (const auto& sym : w1) {
        std::vector<Symbol> opts;
        for (const auto& [upper, lower] : rho) {
            if (upper == sym) {
                opts.push_back(lower);
            }
        }
        if (opts.empty()) {
            count_ = 0;
        }
        options_.push_back(std::move(opts));
    }
    if (count_ != 0) {
        count_ = 1;
        for (const auto& opts : options_) {
            if (count_ > std::numeric_limits<std::uint64_t>::max() / opts.size()) {
                count_ = std::numeric_limits<std::uint64_t>::max();
                break;
            }
            count_ *= opts.size();
        }
    }
}

Strand ComplementEnumerator::at(std::uint64_t index) const {
    Strand out(options_.size());
    // Mixed-radix decode, last position fastest.
    for (std::size_t pos = options_.size(); pos-- > 0;) {
        std::uint64_t radix = options_[pos].size();
        out[pos] = options_[pos][index % radix];
        index /= radix;
    }
    return out;
}

Strand parse_word(const std::string& text, const std::vector<Symbol>& symbols) {
    const std::size_t n = text.size();
    // feasible[i]: text[i..] decomposes over the symbol set.
    std::vector<char> feasible(n + 1, 0);
    feasible[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
        for (const auto& sym : symbols) {
            if (!sym.empty() && text.compare(i, sym.size(), sym) == 0 &&
                i + sym.size() <= n && feasible[i + sym.size()]) {
                feasible[i] = 1;
                break;
            }
        }
    }
    if (!feasible[0]) {
        throw ParseError("word \"" + text + "\" cannot be tokenized over the machine alphabet");
    }
    Strand out;
    std::size_t i = 0;
    while (i < n) {
        const Symbol* best = nullptr;
        for (const auto& sym : symbols) {
            if (text.compare(i, sym.size(), sym) == 0 && feasible[i + sym.size()] &&
                (best == nullptr || sym.size() > best->size())) {
                best = &sym;
            }
        }
        out.push_back(*best);
        i += best->size();
    }
    return out;
}

std::string format_word(const Strand& word) {
    bool multi = std::any_of(word.begin(), word.end(),
                             [](const Symbol& s) { return s.size() > 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (multi && i > 0) {
            out += ' ';
        }
        out += word[i];
    }
    return out;
}

} // namespace wkqfa
