// transducer.hpp -- algorithms on transducers with pairing-spec labels
//
// Inversion, composition, input/output restriction, witness search,
// identity and functionality decisions, and the independence-property
// check, plus the two built-in property transducers the command line
// exposes.  The decision procedures reject early on label-level evidence
// and defer the exact answer to a residual-tracking pass over the expanded
// standard form.

#pragma once

#include <optional>
#include <utility>

#include "nfa.hpp"

namespace symspec {

/// Swaps the two tapes.
inline LabelledGraph<PairingSpec> inverse(const LabelledGraph<PairingSpec>& t) {
    LabelledGraph<PairingSpec> out;
    out.add_states(t.state_count());
    for (const auto& tr : t.transitions()) out.add_transition(tr.from, inverse(tr.label), tr.to);
    for (int q : t.initial()) out.add_initial(q);
    for (int q : t.final_states()) out.add_final(q);
    return out;
}

/// Relational composition: pairs (u, z) such that some v is an output of
/// `a` on u and an input of `b` producing z.  Disjoint sums arising from
/// label composition become parallel transitions.
inline LabelledGraph<PairingSpec> compose(const LabelledGraph<PairingSpec>& a,
                                          const LabelledGraph<PairingSpec>& b,
                                          const Alphabet& gamma) {
    return product(a, b, ops::compose_specs(gamma));
}

/// Keeps the pairs whose input (respectively output) word the automaton
/// accepts.
inline LabelledGraph<PairingSpec> restrict_input(const LabelledGraph<PairingSpec>& t,
                                                 const LabelledGraph<SetSpec>& lang,
                                                 const Alphabet& gamma) {
    return product(t, lang, ops::restrict_in_specs(gamma));
}

inline LabelledGraph<PairingSpec> restrict_output(const LabelledGraph<PairingSpec>& t,
                                                  const LabelledGraph<SetSpec>& lang,
                                                  const Alphabet& gamma) {
    return product(t, lang, ops::restrict_out_specs(gamma));
}

namespace detail {

/// The smallest pair a label denotes (lexicographically, inputs first), or
/// nothing when it denotes the empty relation.
inline std::optional<std::pair<Word, Word>> min_pair(const PairingSpec& p,
                                                     const Alphabet& gamma) {
    auto minimum = [&gamma](const SetSpec& s) -> std::optional<Symbol> {
        auto n = normalize(s, gamma);
        if (!n) return std::nullopt;
        return some_element(*n, gamma);
    };
    // Smallest element of the class other than `avoid`.
    auto minimum_but = [&](const SetSpec& s, Symbol avoid) -> std::optional<Symbol> {
        auto m = intersect(s, SetSpec::not_in(SortedWord::of({avoid})));
        if (!m) return std::nullopt;
        return minimum(*m);
    };
    auto pair = [](std::optional<Symbol> x, std::optional<Symbol> y) {
        return std::pair{x ? Word{*x} : Word{}, y ? Word{*y} : Word{}};
    };

    switch (p.kind()) {
        case PairKind::EE: return pair({}, {});
        case PairKind::EG:
            if (auto y = minimum(p.rhs())) return pair({}, y);
            return std::nullopt;
        case PairKind::FE:
            if (auto x = minimum(p.lhs())) return pair(x, {});
            return std::nullopt;
        case PairKind::FG: {
            auto x = minimum(p.lhs()), y = minimum(p.rhs());
            if (x && y) return pair(x, y);
            return std::nullopt;
        }
        case PairKind::Same:
            if (auto x = minimum(p.lhs())) return pair(x, x);
            return std::nullopt;
        case PairKind::Diff: {
            auto x = minimum(p.lhs());
            if (!x) return std::nullopt;
            if (auto y = minimum_but(p.rhs(), *x)) return pair(x, y);
            // The output class is exactly {x}; take the next input element.
            if (auto x2 = minimum_but(p.lhs(), *x)) return pair(x2, x);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// A realized pair, or nothing when the relation is empty.  Breadth-first
/// over transitions, each label contributing its smallest pair.
inline std::optional<std::pair<Word, Word>> non_empty_witness_pair(
    const LabelledGraph<PairingSpec>& t, const Alphabet& gamma) {
    struct Step {
        int prev;
        Word in, out;
    };
    std::vector<std::optional<Step>> seen(t.state_count());
    std::deque<int> queue;
    for (int q : t.initial()) {
        if (seen[q]) continue;
        seen[q] = Step{-1, {}, {}};
        queue.push_back(q);
    }

    auto finish = [&](int q) {
        Word u, v;
        for (int at = q; seen[at]->prev >= 0; at = seen[at]->prev) {
            const Step& s = *seen[at];
            u.insert(u.end(), s.in.rbegin(), s.in.rend());
            v.insert(v.end(), s.out.rbegin(), s.out.rend());
        }
        std::reverse(u.begin(), u.end());
        std::reverse(v.begin(), v.end());
        return std::pair{u, v};
    };

    for (int q : t.initial())
        if (t.is_final(q)) return std::pair{Word{}, Word{}};
    auto adj = t.adjacency();
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto* tr : adj[q]) {
            if (seen[tr->to]) continue;
            auto mp = detail::min_pair(tr->label, gamma);
            if (!mp) continue;  // label denotes the empty relation
            seen[tr->to] = Step{q, std::move(mp->first), std::move(mp->second)};
            if (t.is_final(tr->to)) return finish(tr->to);
            queue.push_back(tr->to);
        }
    }
    return std::nullopt;
}

/// Whether the pair (u, v) is realized; both words must be over the
/// alphabet.
inline bool pair_member(const LabelledGraph<PairingSpec>& t, const Word& u, const Word& v,
                        const Alphabet& gamma) {
    for (Symbol x : u)
        if (!gamma.contains(x))
            throw std::invalid_argument("pair_member: word not over the alphabet");
    for (Symbol x : v)
        if (!gamma.contains(x))
            throw std::invalid_argument("pair_member: word not over the alphabet");
    auto confined = restrict_output(restrict_input(t, line_automaton(u), gamma),
                                    line_automaton(v), gamma);
    return non_empty_witness_pair(confined, gamma).has_value();
}

/// Whether a standard-form transducer only relates words to themselves.
/// Along every path the input and output read so far must keep one a prefix
/// of the other; the pending excess is tracked per state.  On a trim graph
/// any positional mismatch, any state reachable with two different
/// excesses, and any final state with a nonzero excess each yield a
/// realizable non-identity pair, so the pass is exact.
inline bool identityP(const LabelledGraph<LetterPair>& t) {
    auto g = trim(t);

    struct Residual {
        bool output_ahead = false;
        Word excess;
        bool operator==(const Residual&) const = default;
    };
    // Appends one letter to one side, cancelling against the excess of the
    // other side; nothing is returned on a mismatch.
    auto feed = [](Residual r, Symbol c, bool output_side) -> std::optional<Residual> {
        if (r.excess.empty()) {
            r.output_ahead = output_side;
            r.excess = {c};
            return r;
        }
        if (r.output_ahead == output_side) {
            r.excess.push_back(c);
            return r;
        }
        if (r.excess.front() != c) return std::nullopt;
        r.excess.erase(r.excess.begin());
        if (r.excess.empty()) r.output_ahead = false;
        return r;
    };
    auto step = [&feed](Residual r, const LetterPair& l) -> std::optional<Residual> {
        std::optional<Residual> out = r;
        if (l.in) out = feed(*out, *l.in, false);
        if (out && l.out) out = feed(*out, *l.out, true);
        return out;
    };

    std::vector<std::optional<Residual>> res(g.state_count());
    std::deque<int> queue;
    for (int q : g.initial()) {
        if (res[q]) continue;
        res[q] = Residual{};
        queue.push_back(q);
    }
    auto adj = g.adjacency();
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto* tr : adj[q]) {
            auto next = step(*res[q], tr->label);
            if (!next) return false;
            if (!res[tr->to]) {
                res[tr->to] = *next;
                queue.push_back(tr->to);
            } else if (*res[tr->to] != *next) {
                return false;
            }
        }
    }
    for (int q : g.final_states())
        if (res[q] && !res[q]->excess.empty()) return false;
    return true;
}

namespace detail {

/// Label-level evidence that some realizable pair cannot be an identity
/// pair: a one-sided neutral or rectangular label with a choice of more
/// than one element on a side, or an off-diagonal label whose class sizes
/// force two elements to differ.  Exact up to the residual pass that
/// follows; rejecting here is always sound on a trim graph.
inline bool identity_rejected(const PairingSpec& p, const Alphabet& gamma) {
    auto class_size_capped = [&gamma](const SetSpec& s) -> int {  // 1, 2, or 3 for "more"
        if (card_at_least(s, 3, gamma)) return 3;
        return card_at_least(s, 2, gamma) ? 2 : 1;
    };
    switch (p.kind()) {
        case PairKind::EE:
        case PairKind::Same: return false;
        case PairKind::EG: return class_size_capped(p.rhs()) > 1;
        case PairKind::FE: return class_size_capped(p.lhs()) > 1;
        case PairKind::FG:
            return class_size_capped(p.lhs()) > 1 || class_size_capped(p.rhs()) > 1;
        case PairKind::Diff: {
            const int nf = class_size_capped(p.lhs());
            const int ng = class_size_capped(p.rhs());
            if (nf > 2 || ng > 2) return true;
            if (nf == 2 && ng == 2) return true;
            if (nf + ng == 3) {  // sizes one and two: reject when disjoint
                auto m = intersect(p.lhs(), p.rhs());
                return !m || !normalize(*m, gamma);
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

/// Whether every realized pair relates a word to itself.
inline bool realizes_identity(const LabelledGraph<PairingSpec>& t, const Alphabet& gamma) {
    auto s = trim(t);
    for (const auto& tr : s.transitions())
        if (detail::identity_rejected(tr.label, gamma)) return false;
    return identityP(expand(s, gamma));
}

/// Whether the relation is a partial function of its input.  Equivalent to
/// the inverse composed with the transducer realizing an identity: two
/// outputs of the same input land in one pair of that composition.
inline bool is_functional(const LabelledGraph<PairingSpec>& t, const Alphabet& gamma) {
    auto s = trim(t);
    return realizes_identity(compose(inverse(s), s, gamma), gamma);
}

/// Property transducer `sub2`: relates words that agree everywhere except
/// in at least one and at most two positions.
inline LabelledGraph<PairingSpec> builtin_sub2() {
    LabelledGraph<PairingSpec> t;
    t.add_states(3);
    for (int q = 0; q < 3; ++q) t.add_transition(q, PairingSpec::same(SetSpec::all()), q);
    t.add_transition(0, PairingSpec::diff(SetSpec::all(), SetSpec::all()), 1);
    t.add_transition(1, PairingSpec::diff(SetSpec::all(), SetSpec::all()), 2);
    t.add_initial(0);
    t.add_final(1);
    t.add_final(2);
    return t;
}

/// Property transducer `px`: erases a nonempty suffix, so it relates every
/// word to each of its proper prefixes.
inline LabelledGraph<PairingSpec> builtin_px() {
    LabelledGraph<PairingSpec> t;
    t.add_states(2);
    t.add_transition(0, PairingSpec::same(SetSpec::all()), 0);
    t.add_transition(0, PairingSpec::fe(SetSpec::all()), 1);
    t.add_transition(1, PairingSpec::fe(SetSpec::all()), 1);
    t.add_initial(0);
    t.add_final(1);
    return t;
}

/// Independence check: a language satisfies the property described by an
/// input-altering transducer iff no word of the language maps to another
/// word of the language.  Returns nothing when the property holds, else a
/// witness pair of distinct language words.  A witness with equal
/// components would mean the transducer was not input-altering, which is a
/// contract violation reported as such.
inline std::optional<std::pair<Word, Word>> satisfies_property(
    const LabelledGraph<PairingSpec>& t, const LabelledGraph<SetSpec>& lang,
    const Alphabet& gamma) {
    auto confined = restrict_output(restrict_input(t, lang, gamma), lang, gamma);
    auto w = non_empty_witness_pair(confined, gamma);
    if (!w) return std::nullopt;
    if (w->first == w->second)
        throw std::invalid_argument("satisfies_property: transducer is not input-altering");
    return w;
}

}  // namespace symspec
