// alphabet.hpp -- ordered alphabets, words, and sorted class words
//
// Symbols are integer code points with the natural order.  An Alphabet is a
// strictly sorted set of at least two symbols; all label semantics are
// evaluated against an alphabet supplied by the caller, never stored inside
// labels or graphs.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symspec {

using Symbol = std::uint32_t;

/// A word over some alphabet; order and repetition are significant.
using Word = std::vector<Symbol>;

/// A strictly increasing, duplicate-free run of symbols.  Class labels store
/// their content in this canonical shape so that structural equality of
/// labels coincides with equality of the denoted symbol sets.
class SortedWord {
public:
    SortedWord() = default;

    /// Canonicalizes an arbitrary word: sorts and removes duplicates.
    static SortedWord of(Word w) {
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        SortedWord s;
        s.syms_ = std::move(w);
        return s;
    }

    const std::vector<Symbol>& symbols() const { return syms_; }
    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }

    bool contains(Symbol g) const {
        return std::binary_search(syms_.begin(), syms_.end(), g);
    }

    /// True when every symbol of this word occurs in `other`.
    bool subset_of(const SortedWord& other) const {
        return std::includes(other.syms_.begin(), other.syms_.end(),
                             syms_.begin(), syms_.end());
    }

    SortedWord intersect(const SortedWord& other) const {
        SortedWord r;
        std::set_intersection(syms_.begin(), syms_.end(),
                              other.syms_.begin(), other.syms_.end(),
                              std::back_inserter(r.syms_));
        return r;
    }

    SortedWord minus(const SortedWord& other) const {
        SortedWord r;
        std::set_difference(syms_.begin(), syms_.end(),
                            other.syms_.begin(), other.syms_.end(),
                            std::back_inserter(r.syms_));
        return r;
    }

    SortedWord unite(const SortedWord& other) const {
        SortedWord r;
        std::set_union(syms_.begin(), syms_.end(),
                       other.syms_.begin(), other.syms_.end(),
                       std::back_inserter(r.syms_));
        return r;
    }

    auto operator<=>(const SortedWord&) const = default;

private:
    std::vector<Symbol> syms_;
};

/// Sorts a word and drops duplicates ("word ordering").
inline SortedWord wo(const Word& w) { return SortedWord::of(w); }

/// A finite alphabet of at least two symbols, kept strictly sorted.
class Alphabet {
public:
    /// Builds an alphabet from explicit symbols.  Rejects duplicates and
    /// alphabets with fewer than two symbols.
    explicit Alphabet(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {
        std::sort(syms_.begin(), syms_.end());
        if (std::adjacent_find(syms_.begin(), syms_.end()) != syms_.end())
            throw std::invalid_argument("alphabet: duplicate symbol");
        if (syms_.size() < 2)
            throw std::invalid_argument("alphabet: needs at least two symbols");
    }

    /// The numeric alphabet {0, 1, ..., n-1}.
    static Alphabet range(std::size_t n) {
        std::vector<Symbol> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Symbol>(i);
        return Alphabet(std::move(v));
    }

    const std::vector<Symbol>& symbols() const { return syms_; }
    std::size_t size() const { return syms_.size(); }
    Symbol min() const { return syms_.front(); }

    bool contains(Symbol g) const {
        return std::binary_search(syms_.begin(), syms_.end(), g);
    }

    bool contains(const SortedWord& w) const {
        return std::includes(syms_.begin(), syms_.end(),
                             w.symbols().begin(), w.symbols().end());
    }

    /// All alphabet symbols outside `w`, in increasing order.
    SortedWord complement(const SortedWord& w) const {
        SortedWord all = SortedWord::of(syms_);
        return all.minus(w);
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Symbol> syms_;
};

/// Smallest alphabet symbol not occurring in `w`.  Scans the two sorted
/// sequences in lockstep and stops at the first disagreement, so the cost is
/// O(|w|) rather than O(|alphabet|).
///
/// Preconditions: `w` is over the alphabet and shorter than it.
inline Symbol out_of(const SortedWord& w, const Alphabet& gamma) {
    if (w.size() >= gamma.size())
        throw std::invalid_argument("out_of: word covers the whole alphabet");
    if (!gamma.contains(w))
        throw std::invalid_argument("out_of: word is not over the alphabet");
    const auto& g = gamma.symbols();
    const auto& ws = w.symbols();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (g[i] != ws[i]) return g[i];
    }
    return g[ws.size()];
}

}  // namespace symspec
