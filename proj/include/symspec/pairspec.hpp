// pairspec.hpp -- pairing specifications: compact labels for word relations
//
// A pairing spec denotes a set of pairs (x, y) with x, y ranging over an
// alphabet or the empty word.  Six forms exist:
//
//   ee          {(eps, eps)}
//   eg(G)       {eps} x L(G)          (insertions)
//   fe(F)       L(F) x {eps}          (deletions)
//   fg(F, G)    L(F) x L(G)           (full rectangle)
//   same(F)     {(x, x) : x in L(F)}  (diagonal)
//   diff(F, G)  {(x, y) : x in L(F), y in L(G), x != y}
//
// Set-spec components of eg/fe/fg/same/diff are never the eps marker.  As
// with set specs, the algebra itself (inverse, restriction, composition)
// works on the compact forms; only the cardinality-style queries consult the
// alphabet.

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "setspec.hpp"

namespace symspec {

enum class PairKind { EE, EG, FE, FG, Same, Diff };

class PairingSpec {
public:
    PairingSpec() = default;  // ee

    static PairingSpec ee() { return PairingSpec(); }

    static PairingSpec eg(SetSpec g) {
        require_set(g);
        return PairingSpec(PairKind::EG, SetSpec::eps(), std::move(g));
    }

    static PairingSpec fe(SetSpec f) {
        require_set(f);
        return PairingSpec(PairKind::FE, std::move(f), SetSpec::eps());
    }

    static PairingSpec fg(SetSpec f, SetSpec g) {
        require_set(f);
        require_set(g);
        return PairingSpec(PairKind::FG, std::move(f), std::move(g));
    }

    static PairingSpec same(SetSpec f) {
        require_set(f);
        return PairingSpec(PairKind::Same, std::move(f), SetSpec::eps());
    }

    static PairingSpec diff(SetSpec f, SetSpec g) {
        require_set(f);
        require_set(g);
        return PairingSpec(PairKind::Diff, std::move(f), std::move(g));
    }

    PairKind kind() const { return kind_; }

    /// Left / right stored component.  Meaningful positions per kind:
    /// eg: rhs; fe: lhs; fg: both; same: lhs; diff: both.
    const SetSpec& lhs() const { return lhs_; }
    const SetSpec& rhs() const { return rhs_; }

    auto operator<=>(const PairingSpec&) const = default;

private:
    PairingSpec(PairKind k, SetSpec l, SetSpec r)
        : kind_(k), lhs_(std::move(l)), rhs_(std::move(r)) {}

    static void require_set(const SetSpec& s) {
        if (s.is_eps())
            throw std::invalid_argument("pairing spec: component must denote symbols");
    }

    PairKind kind_ = PairKind::EE;
    SetSpec lhs_, rhs_;
};

/// A disjoint sum of one to three pairing specs, needed because composition
/// can split a single pair of labels into up to three disjoint rectangles.
using DisjointSum = std::vector<PairingSpec>;

/// Projection of the input side: the eps marker for ee/eg, a set spec
/// otherwise.  The denoted inputs are exactly L(left_set(p)).
inline SetSpec left_set(const PairingSpec& p) {
    switch (p.kind()) {
        case PairKind::EE:
        case PairKind::EG: return SetSpec::eps();
        case PairKind::FE:
        case PairKind::FG:
        case PairKind::Same:
        case PairKind::Diff: return p.lhs();
    }
    return SetSpec::eps();
}

/// Projection of the output side; for same(F) this is F itself.
inline SetSpec right_set(const PairingSpec& p) {
    switch (p.kind()) {
        case PairKind::EE:
        case PairKind::FE: return SetSpec::eps();
        case PairKind::EG:
        case PairKind::FG: return p.rhs();
        case PairKind::Same: return p.lhs();
        case PairKind::Diff: return p.rhs();
    }
    return SetSpec::eps();
}

/// Swaps the two sides; an involution, and same/diff stay same/diff.
inline PairingSpec inverse(const PairingSpec& p) {
    switch (p.kind()) {
        case PairKind::EE: return PairingSpec::ee();
        case PairKind::EG: return PairingSpec::fe(p.rhs());
        case PairKind::FE: return PairingSpec::eg(p.lhs());
        case PairKind::FG: return PairingSpec::fg(p.rhs(), p.lhs());
        case PairKind::Same: return p;
        case PairKind::Diff: return PairingSpec::diff(p.rhs(), p.lhs());
    }
    return p;
}

/// Alphabet-invariant specs mention no concrete symbols, so they can be
/// interpreted over any alphabet.  Exactly six forms qualify.
inline bool is_alphabet_invariant(const PairingSpec& p) {
    auto inv = [](const SetSpec& s) {
        return s.is_eps() || s.kind() == SetKind::All;
    };
    switch (p.kind()) {
        case PairKind::EE: return true;
        case PairKind::EG: return inv(p.rhs());
        case PairKind::FE: return inv(p.lhs());
        case PairKind::FG: return inv(p.lhs()) && inv(p.rhs());
        case PairKind::Same: return inv(p.lhs());
        case PairKind::Diff: return inv(p.lhs()) && inv(p.rhs());
    }
    return false;
}

inline bool respects(const PairingSpec& p, const Alphabet& gamma) {
    switch (p.kind()) {
        case PairKind::EE: return true;
        case PairKind::EG: return respects(p.rhs(), gamma);
        case PairKind::FE: return respects(p.lhs(), gamma);
        case PairKind::FG:
        case PairKind::Diff:
            return respects(p.lhs(), gamma) && respects(p.rhs(), gamma);
        case PairKind::Same: return respects(p.lhs(), gamma);
    }
    return false;
}

/// The denoted relation is empty only for diff(F, G) with both components
/// denoting the same singleton; every other respecting spec relates
/// something.  O(|p|): two singleton queries.
inline bool is_empty_relation(const PairingSpec& p, const Alphabet& gamma) {
    if (p.kind() != PairKind::Diff) return false;
    auto a = singleton_value(p.lhs(), gamma);
    auto b = singleton_value(p.rhs(), gamma);
    return a && b && *a == *b;
}

/// Explicit listing of the denoted pairs; components are words of length
/// <= 1 (the empty word for an eps side).  Intended for small alphabets.
inline std::set<std::pair<Word, Word>> relation(const PairingSpec& p,
                                                const Alphabet& gamma) {
    std::set<std::pair<Word, Word>> out;
    auto words = [&](const SetSpec& s) {
        std::vector<Word> ws;
        if (s.is_eps()) {
            ws.push_back(Word{});
        } else {
            for (Symbol g : language(s, gamma)) ws.push_back(Word{g});
        }
        return ws;
    };
    switch (p.kind()) {
        case PairKind::Same:
            for (Symbol g : language(p.lhs(), gamma))
                out.emplace(Word{g}, Word{g});
            break;
        case PairKind::Diff:
            for (Symbol x : language(p.lhs(), gamma))
                for (Symbol y : language(p.rhs(), gamma))
                    if (x != y) out.emplace(Word{x}, Word{y});
            break;
        default:
            for (const auto& x : words(left_set(p)))
                for (const auto& y : words(right_set(p))) out.emplace(x, y);
            break;
    }
    return out;
}

namespace detail {

/// Assembles a spec from two independent sides (either may be the eps
/// marker), i.e. the plain rectangle forms.
inline PairingSpec make_rect(const SetSpec& l, const SetSpec& r) {
    if (l.is_eps() && r.is_eps()) return PairingSpec::ee();
    if (l.is_eps()) return PairingSpec::eg(r);
    if (r.is_eps()) return PairingSpec::fe(l);
    return PairingSpec::fg(l, r);
}

/// normalize(intersect(...)), the only way intersections are consumed here.
inline std::optional<SetSpec> meet(const SetSpec& a, const SetSpec& b,
                                   const Alphabet& gamma) {
    auto i = intersect(a, b);
    if (!i) return std::nullopt;
    return normalize(*i, gamma);
}

inline std::optional<SetSpec> without(const SetSpec& a, Symbol g,
                                      const Alphabet& gamma) {
    return meet(a, SetSpec::not_in(SortedWord::of({g})), gamma);
}

}  // namespace detail

/// Keeps only the pairs whose input is x (a symbol, or the empty word when
/// absent).  The result collapses same/diff to rectangle forms because a
/// single input pins the shape:
///
///   same(F)    -> in{x}/in{x}            when x in L(F)
///   diff(F, G) -> in{x}/(G minus x)      when x in L(F), absent if that
///                                        difference is empty
///
/// Absent whenever x cannot appear on the input side at all.
inline std::optional<PairingSpec> restrict_in(const PairingSpec& p,
                                              std::optional<Symbol> x,
                                              const Alphabet& gamma) {
    const SetSpec left = left_set(p);
    if (!x) return left.is_eps() ? std::optional<PairingSpec>(p) : std::nullopt;
    if (left.is_eps() || !member(left, *x, gamma)) return std::nullopt;
    const SetSpec just_x = SetSpec::in(SortedWord::of({*x}));
    switch (p.kind()) {
        case PairKind::FE: return PairingSpec::fe(just_x);
        case PairKind::FG: return PairingSpec::fg(just_x, p.rhs());
        case PairKind::Same: return PairingSpec::fg(just_x, just_x);
        case PairKind::Diff: {
            auto g = detail::without(p.rhs(), *x, gamma);
            if (!g) return std::nullopt;
            return PairingSpec::fg(just_x, *g);
        }
        default: return std::nullopt;  // ee/eg handled above
    }
}

/// Mirror image of restrict_in, obtained by conjugation with inverse.
inline std::optional<PairingSpec> restrict_out(const PairingSpec& p,
                                               std::optional<Symbol> x,
                                               const Alphabet& gamma) {
    auto r = restrict_in(inverse(p), x, gamma);
    if (!r) return std::nullopt;
    return inverse(*r);
}

/// Restriction of the input side to a whole set spec (used when the
/// restricting automaton itself carries set-spec labels).  Same/diff keep
/// their shape with a narrowed component; empty results are absent.
inline std::optional<PairingSpec> restrict_in(const PairingSpec& p,
                                              const SetSpec& s,
                                              const Alphabet& gamma) {
    const SetSpec left = left_set(p);
    if (s.is_eps()) return left.is_eps() ? std::optional<PairingSpec>(p) : std::nullopt;
    if (left.is_eps()) return std::nullopt;
    auto m = detail::meet(left, s, gamma);
    if (!m) return std::nullopt;
    switch (p.kind()) {
        case PairKind::FE: return PairingSpec::fe(*m);
        case PairKind::FG: return PairingSpec::fg(*m, p.rhs());
        case PairKind::Same: return PairingSpec::same(*m);
        case PairKind::Diff: {
            PairingSpec d = PairingSpec::diff(*m, p.rhs());
            if (is_empty_relation(d, gamma)) return std::nullopt;
            return d;
        }
        default: return std::nullopt;
    }
}

inline std::optional<PairingSpec> restrict_out(const PairingSpec& p,
                                               const SetSpec& s,
                                               const Alphabet& gamma) {
    auto r = restrict_in(inverse(p), s, gamma);
    if (!r) return std::nullopt;
    return inverse(*r);
}

/// Composition of two pairing specs: the relation {(x, z) : (x, y) in R(p1)
/// and (y, z) in R(p2) for some y}.  Undefined (absent) when the output side
/// of p1 shares nothing with the input side of p2.  The result is a disjoint
/// sum because composing two diff labels through a two-element middle splits
/// into up to three rectangles.
///
/// Preconditions: class words over `gamma`; components with a nonempty
/// denotation (respecting specs always qualify).
inline std::optional<DisjointSum> compose(const PairingSpec& p1,
                                          const PairingSpec& p2,
                                          const Alphabet& gamma) {
    const SetSpec mid_l = right_set(p1);
    const SetSpec mid_r = left_set(p2);
    if (mid_l.is_eps() != mid_r.is_eps()) return std::nullopt;

    auto one = [](PairingSpec p) { return DisjointSum{std::move(p)}; };

    // Both middles are the empty word: p1 and p2 are rectangle forms with an
    // eps inner side, and the outer sides simply combine.
    if (mid_l.is_eps()) return one(detail::make_rect(left_set(p1), right_set(p2)));

    auto m = detail::meet(mid_l, mid_r, gamma);
    if (!m) return std::nullopt;

    const bool s1 = p1.kind() == PairKind::Same;
    const bool d1 = p1.kind() == PairKind::Diff;
    const bool s2 = p2.kind() == PairKind::Same;
    const bool d2 = p2.kind() == PairKind::Diff;

    if (!s1 && !d1) {
        const SetSpec w = left_set(p1);
        if (!s2 && !d2) return one(detail::make_rect(w, right_set(p2)));
        if (s2) return one(detail::make_rect(w, *m));
        // p2 = diff(F, G): the middle must dodge the output.
        const SetSpec& g = p2.rhs();
        if (card_at_least(*m, 2, gamma)) return one(detail::make_rect(w, g));
        Symbol b = *singleton_value(*m, gamma);
        auto g2 = detail::without(g, b, gamma);
        if (!g2) return std::nullopt;
        return one(detail::make_rect(w, *g2));
    }

    if (s1) {
        if (!s2 && !d2) return one(detail::make_rect(*m, right_set(p2)));
        if (s2) return one(PairingSpec::same(*m));
        const SetSpec& g = p2.rhs();
        auto sm = singleton_value(*m, gamma);
        auto sg = singleton_value(g, gamma);
        if (sm && sg && *sm == *sg) return std::nullopt;
        return one(PairingSpec::diff(*m, g));
    }

    // p1 = diff(A, B).
    const SetSpec& a = p1.lhs();
    if (!s2 && !d2) {
        const SetSpec z = right_set(p2);
        if (card_at_least(*m, 2, gamma)) return one(detail::make_rect(a, z));
        Symbol b = *singleton_value(*m, gamma);
        auto a2 = detail::without(a, b, gamma);
        if (!a2) return std::nullopt;
        return one(detail::make_rect(*a2, z));
    }
    if (s2) {
        auto sa = singleton_value(a, gamma);
        auto sm = singleton_value(*m, gamma);
        if (sa && sm && *sa == *sm) return std::nullopt;
        return one(PairingSpec::diff(a, *m));
    }

    // diff o diff: everything hinges on how many symbols the middle offers.
    const SetSpec& g = p2.rhs();
    if (card_at_least(*m, 3, gamma)) return one(PairingSpec::fg(a, g));
    if (!card_at_least(*m, 2, gamma)) {
        Symbol b = *singleton_value(*m, gamma);
        auto a2 = detail::without(a, b, gamma);
        auto g2 = detail::without(g, b, gamma);
        if (!a2 || !g2) return std::nullopt;
        return one(PairingSpec::fg(*a2, *g2));
    }
    auto [b1, b2] = *two_elements(*m, gamma);
    DisjointSum sum;
    auto a12 = detail::meet(a, SetSpec::not_in(SortedWord::of({b1, b2})), gamma);
    if (a12) sum.push_back(PairingSpec::fg(*a12, g));
    if (member(a, b1, gamma)) {
        auto g2 = detail::without(g, b2, gamma);
        if (g2) sum.push_back(PairingSpec::fg(SetSpec::in(SortedWord::of({b1})), *g2));
    }
    if (member(a, b2, gamma)) {
        auto g1 = detail::without(g, b1, gamma);
        if (g1) sum.push_back(PairingSpec::fg(SetSpec::in(SortedWord::of({b2})), *g1));
    }
    if (sum.empty()) return std::nullopt;
    return sum;
}

}  // namespace symspec
