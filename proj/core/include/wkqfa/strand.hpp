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
#include <optional>

#include "wkqfa/types.hpp"

namespace wkqfa {

/// Endmarked tapes: upper = # w1 $, lower = # w2 $.
struct TapePair {
    std::vector<Symbol> upper;
    std::vector<Symbol> lower;
};

TapePair make_tapes(const Strand& w1, const Strand& w2);

/// True iff |w1| = |w2| and every positionwise pair is in rho.
bool is_complementary(const Strand& w1, const Strand& w2, const ComplementarityRelation& rho);

/// Product over positions of the number of complements of w1[i]; 1 for the
/// empty strand, 0 when some symbol has no complement. Saturates at
/// uint64 max.
std::uint64_t count_complements(const Strand& w1, const ComplementarityRelation& rho);

/// Enumerates the lower strands complementary to w1 in lexicographic order of
/// per-position complement indices (the order complements are declared in rho
/// per upper symbol). The i-th strand is computable directly from i by
/// mixed-radix decoding, so disjoint index ranges can be consumed
/// concurrently.
class ComplementEnumerator {
  public:
    ComplementEnumerator(const Strand& w1, const ComplementarityRelation& rho);

    std::uint64_t count() const { return count_; }
    /// The index-th complementary strand. Requires index < count().
    Strand at(std::uint64_t index) const;

    class Iterator {
      public:
        Iterator(const ComplementEnumerator* owner, std::uint64_t index)
            : owner_(owner), index_(index) {}
        Strand operator*() const { return owner_->at(index_); }
        Iterator& operator++() {
            ++index_;
            return *this;
        }
        bool operator!=(const Iterator& other) const { return index_ != other.index_; }

      private:
        const ComplementEnumerator* owner_;
        std::uint64_t index_;
    };

    Iterator begin() const { return Iterator(this, 0); }
    Iterator end() const { return Iterator(this, count_); }

  private:
    std::vector<std::vector<Symbol>> options_; // per position, declared order
    std::uint64_t count_ = 1;
};

/// Splits display text into a word over the given symbols. Symbols may be
/// multi-character (e.g. "a1"); tokenization is maximal-munch with a
/// feasibility check so "a1b2" over {a, a1, b2} parses as [a1, b2].
/// Errors: text not decomposable over the symbol set.
Strand parse_word(const std::string& text, const std::vector<Symbol>& symbols);

/// Joins a word for display; inserts spaces only when a symbol is
/// multi-character.
std::string format_word(const Strand& word);

} // namespace wkqfa
