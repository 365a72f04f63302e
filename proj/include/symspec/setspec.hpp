// setspec.hpp -- compact set specifications for transition labels
//
// A set spec denotes a subset of an alphabet (or the empty-word marker)
// without enumerating it:
//
//   eps      the empty-word marker; denotes {epsilon}
//   all      every alphabet symbol
//   in(w)    exactly the symbols of the class word w
//   not_in(w)  every alphabet symbol outside w
//
// The intersection operation is partial and purely syntactic: it never needs
// to know the alphabet.  Semantic questions (language, cardinality, element
// queries) take the alphabet as an explicit argument.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphabet.hpp"

namespace symspec {

enum class SetKind { Eps, All, In, NotIn };

class SetSpec {
public:
    SetSpec() = default;  // the empty-word marker

    static SetSpec eps() { return SetSpec(); }
    static SetSpec all() { return SetSpec(SetKind::All, {}); }

    static SetSpec in(SortedWord w) {
        if (w.empty()) throw std::invalid_argument("set spec: empty class word");
        return SetSpec(SetKind::In, std::move(w));
    }

    static SetSpec not_in(SortedWord w) {
        if (w.empty()) throw std::invalid_argument("set spec: empty class word");
        return SetSpec(SetKind::NotIn, std::move(w));
    }

    SetKind kind() const { return kind_; }
    bool is_eps() const { return kind_ == SetKind::Eps; }

    /// Class word of an in/not_in spec (empty for eps/all).
    const SortedWord& word() const { return word_; }

    auto operator<=>(const SetSpec&) const = default;

private:
    SetSpec(SetKind k, SortedWord w) : kind_(k), word_(std::move(w)) {}

    SetKind kind_ = SetKind::Eps;
    SortedWord word_;
};

/// Partial intersection of two set specs.  Absent means the operation is
/// undefined (the specs have provably nothing in common, independently of
/// any alphabet).  Note that not_in/not_in is always defined even though the
/// result may denote the empty set over a small alphabet; `normalize` is the
/// place where that is detected.
inline std::optional<SetSpec> intersect(const SetSpec& f, const SetSpec& g) {
    // The eps marker only meets itself.
    if (f.is_eps() || g.is_eps()) {
        if (f.is_eps() && g.is_eps()) return SetSpec::eps();
        return std::nullopt;
    }
    if (f.kind() == SetKind::All) return g;
    if (g.kind() == SetKind::All) return f;

    const bool fpos = f.kind() == SetKind::In;
    const bool gpos = g.kind() == SetKind::In;
    if (fpos && gpos) {
        SortedWord w = f.word().intersect(g.word());
        if (w.empty()) return std::nullopt;
        return SetSpec::in(std::move(w));
    }
    if (fpos != gpos) {
        const SetSpec& pos = fpos ? f : g;
        const SetSpec& neg = fpos ? g : f;
        SortedWord w = pos.word().minus(neg.word());
        if (w.empty()) return std::nullopt;
        return SetSpec::in(std::move(w));
    }
    return SetSpec::not_in(f.word().unite(g.word()));
}

/// True when the spec is usable over `gamma`: class words must draw their
/// symbols from the alphabet and be strictly shorter than it, so that both
/// the class and its complement are nonempty.
inline bool respects(const SetSpec& f, const Alphabet& gamma) {
    switch (f.kind()) {
        case SetKind::Eps:
        case SetKind::All:
            return true;
        case SetKind::In:
        case SetKind::NotIn:
            return gamma.contains(f.word()) && f.word().size() < gamma.size();
    }
    return false;
}

/// Repairs a spec whose class word grew to cover the whole alphabet: in(w)
/// with w = gamma becomes `all`, not_in(w) with w = gamma denotes the empty
/// set and becomes absent.  Any other spec passes through unchanged.
///
/// Precondition: the class word is over `gamma`.
inline std::optional<SetSpec> normalize(const SetSpec& f, const Alphabet& gamma) {
    if (f.kind() == SetKind::In || f.kind() == SetKind::NotIn) {
        if (!gamma.contains(f.word()))
            throw std::invalid_argument("normalize: class word not over the alphabet");
        if (f.word().size() == gamma.size())
            return f.kind() == SetKind::In ? std::optional<SetSpec>(SetSpec::all())
                                           : std::nullopt;
    }
    return f;
}

/// Number of symbols denoted over `gamma`.  Precondition: f is not the eps
/// marker and its class word is over `gamma`.
inline std::size_t language_size(const SetSpec& f, const Alphabet& gamma) {
    switch (f.kind()) {
        case SetKind::All: return gamma.size();
        case SetKind::In: return f.word().size();
        case SetKind::NotIn: return gamma.size() - f.word().size();
        case SetKind::Eps: break;
    }
    throw std::invalid_argument("language_size: eps marker has no symbol set");
}

/// The denoted symbols, in increasing order.  Precondition: f is not the
/// eps marker.  Intended for small alphabets (tests, expansion); the query
/// helpers below avoid materializing this.
inline std::vector<Symbol> language(const SetSpec& f, const Alphabet& gamma) {
    switch (f.kind()) {
        case SetKind::All: return gamma.symbols();
        case SetKind::In: return f.word().symbols();
        case SetKind::NotIn: return gamma.complement(f.word()).symbols();
        case SetKind::Eps: break;
    }
    throw std::invalid_argument("language: eps marker has no symbol set");
}

/// g in L(f)?  Binary search on the class word (or the alphabet).
inline bool member(const SetSpec& f, Symbol g, const Alphabet& gamma) {
    switch (f.kind()) {
        case SetKind::Eps: return false;
        case SetKind::All: return gamma.contains(g);
        case SetKind::In: return f.word().contains(g);
        case SetKind::NotIn: return gamma.contains(g) && !f.word().contains(g);
    }
    return false;
}

/// |L(f)| >= k, without enumerating L(f).
inline bool card_at_least(const SetSpec& f, std::size_t k, const Alphabet& gamma) {
    return language_size(f, gamma) >= k;
}

/// The unique element of L(f), when L(f) is a singleton.
inline std::optional<Symbol> singleton_value(const SetSpec& f, const Alphabet& gamma) {
    if (language_size(f, gamma) != 1) return std::nullopt;
    switch (f.kind()) {
        case SetKind::All: return gamma.min();
        case SetKind::In: return f.word().symbols().front();
        case SetKind::NotIn: return out_of(f.word(), gamma);
        case SetKind::Eps: break;
    }
    return std::nullopt;
}

/// Deterministic representative of L(f): always the minimum element.
/// Precondition: f is not the eps marker and respects `gamma`.
inline Symbol some_element(const SetSpec& f, const Alphabet& gamma) {
    switch (f.kind()) {
        case SetKind::All: return gamma.min();
        case SetKind::In: return f.word().symbols().front();
        case SetKind::NotIn: return out_of(f.word(), gamma);
        case SetKind::Eps: break;
    }
    throw std::invalid_argument("some_element: eps marker has no symbol set");
}

/// The two smallest elements of L(f), or absent when |L(f)| < 2.
inline std::optional<std::pair<Symbol, Symbol>> two_elements(const SetSpec& f,
                                                             const Alphabet& gamma) {
    if (!card_at_least(f, 2, gamma)) return std::nullopt;
    Symbol first = some_element(f, gamma);
    auto rest = intersect(f, SetSpec::not_in(SortedWord::of({first})));
    auto norm = normalize(*rest, gamma);  // rest is defined: |L(f)| >= 2
    Symbol second = some_element(*norm, gamma);
    return std::make_pair(first, second);
}

}  // namespace symspec
