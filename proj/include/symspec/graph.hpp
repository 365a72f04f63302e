// graph.hpp -- labelled graphs: the common chassis for automata and transducers
//
// A labelled graph is (states, transitions, initial set, final set) with an
// arbitrary label type.  The same template carries:
//
//   LabelledGraph<SetSpec>      automata with set-spec labels
//   LabelledGraph<PairingSpec>  transducers with pairing-spec labels
//   LabelledGraph<Letter>       plain epsilon-NFAs
//   LabelledGraph<LetterPair>   transducers in standard form
//
// plus regex-labelled graphs used transiently by state elimination.  The
// product construction is generic over a polymorphic label operation, so one
// worklist drives intersection, input/output restriction, and composition on
// both the compact and the expanded representations.

#pragma once

#include <compare>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "pairspec.hpp"
#include "setspec.hpp"

namespace symspec {

/// A single alphabet symbol or the empty word.
using Letter = std::optional<Symbol>;

/// A transition label of a transducer in standard form.
struct LetterPair {
    Letter in, out;
    auto operator<=>(const LetterPair&) const = default;
};

template <class L>
struct Transition {
    int from;
    L label;
    int to;
    auto operator<=>(const Transition&) const = default;
};

template <class L>
class LabelledGraph {
public:
    int add_state() { return n_++; }

    void add_states(int count) { n_ += count; }

    int state_count() const { return n_; }

    /// Adds a transition unless an identical one is already present.
    void add_transition(int from, L label, int to) {
        check_state(from);
        check_state(to);
        Transition<L> t{from, std::move(label), to};
        if (seen_.insert(t).second) transitions_.push_back(std::move(t));
    }

    void add_initial(int q) { check_state(q); insert_sorted(initial_, q); }
    void add_final(int q) { check_state(q); insert_sorted(final_, q); }

    const std::vector<Transition<L>>& transitions() const { return transitions_; }
    const std::vector<int>& initial() const { return initial_; }
    const std::vector<int>& final_states() const { return final_; }

    bool is_initial(int q) const {
        return std::binary_search(initial_.begin(), initial_.end(), q);
    }
    bool is_final(int q) const {
        return std::binary_search(final_.begin(), final_.end(), q);
    }

    /// Outgoing transitions indexed by source state.
    std::vector<std::vector<const Transition<L>*>> adjacency() const {
        std::vector<std::vector<const Transition<L>*>> adj(n_);
        for (const auto& t : transitions_) adj[t.from].push_back(&t);
        return adj;
    }

private:
    void check_state(int q) const {
        if (q < 0 || q >= n_) throw std::invalid_argument("graph: unknown state");
    }

    static void insert_sorted(std::vector<int>& v, int q) {
        auto it = std::lower_bound(v.begin(), v.end(), q);
        if (it == v.end() || *it != q) v.insert(it, q);
    }

    int n_ = 0;
    std::vector<Transition<L>> transitions_;
    std::set<Transition<L>> seen_;
    std::vector<int> initial_, final_;
};

// ---------------------------------------------------------------------------
// Label traits: the neutral label of each kind and the test whether a label
// can be traversed without consuming anything (i.e. its denotation contains
// the neutral monoid element on at least one side).  The product construction
// consults the latter to decide where neutral self-loops are needed.

template <class L>
L neutral_label();

template <>
inline SetSpec neutral_label<SetSpec>() { return SetSpec::eps(); }
template <>
inline PairingSpec neutral_label<PairingSpec>() { return PairingSpec::ee(); }
template <>
inline Letter neutral_label<Letter>() { return std::nullopt; }
template <>
inline LetterPair neutral_label<LetterPair>() { return {std::nullopt, std::nullopt}; }

inline bool contains_neutral(const SetSpec& f) { return f.is_eps(); }
inline bool contains_neutral(const PairingSpec& p) {
    return p.kind() == PairKind::EE || p.kind() == PairKind::EG ||
           p.kind() == PairKind::FE;
}
inline bool contains_neutral(const Letter& x) { return !x.has_value(); }
inline bool contains_neutral(const LetterPair& p) {
    return !p.in.has_value() || !p.out.has_value();
}

/// Adds a neutral self-loop on every state; idempotent, and the behaviour is
/// unchanged because neutral labels contribute nothing along a path.
template <class L>
LabelledGraph<L> add_neutral_loops(const LabelledGraph<L>& g) {
    LabelledGraph<L> out = g;
    for (int q = 0; q < out.state_count(); ++q)
        out.add_transition(q, neutral_label<L>(), q);
    return out;
}

// ---------------------------------------------------------------------------
// Trim

/// Keeps exactly the states lying on some accepting path, with one
/// refinement: states that are both initial and final accept the empty word
/// while possibly touching no surviving transition, and only the smallest
/// such isolated state is kept.  Surviving states are renumbered in
/// increasing order of their old ids, so a trim input comes back unchanged.
template <class L>
LabelledGraph<L> trim(const LabelledGraph<L>& g) {
    const int n = g.state_count();
    std::vector<char> reach(n, 0), coreach(n, 0);

    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (const auto& t : g.transitions()) {
        fwd[t.from].push_back(t.to);
        bwd[t.to].push_back(t.from);
    }
    auto sweep = [&](const std::vector<int>& seeds,
                     const std::vector<std::vector<int>>& next, std::vector<char>& mark) {
        std::deque<int> queue(seeds.begin(), seeds.end());
        for (int q : seeds) mark[q] = 1;
        while (!queue.empty()) {
            int q = queue.front();
            queue.pop_front();
            for (int r : next[q])
                if (!mark[r]) {
                    mark[r] = 1;
                    queue.push_back(r);
                }
        }
    };
    sweep(g.initial(), fwd, reach);
    sweep(g.final_states(), bwd, coreach);

    std::vector<char> useful(n, 0);
    for (int q = 0; q < n; ++q) useful[q] = reach[q] && coreach[q];

    // Transitions with useful endpoints lie on accepting paths themselves.
    std::vector<char> touched(n, 0);
    std::vector<const Transition<L>*> kept_edges;
    for (const auto& t : g.transitions())
        if (useful[t.from] && useful[t.to]) {
            kept_edges.push_back(&t);
            touched[t.from] = touched[t.to] = 1;
        }

    std::vector<char> keep(n, 0);
    bool have_isolated = false;
    for (int q = 0; q < n; ++q) {
        if (!useful[q]) continue;
        if (touched[q]) {
            keep[q] = 1;
        } else if (!have_isolated && g.is_initial(q) && g.is_final(q)) {
            keep[q] = 1;  // the single isolated empty-word acceptor
            have_isolated = true;
        }
    }

    std::vector<int> newid(n, -1);
    LabelledGraph<L> out;
    for (int q = 0; q < n; ++q)
        if (keep[q]) newid[q] = out.add_state();
    for (const auto* t : kept_edges) out.add_transition(newid[t->from], t->label, newid[t->to]);
    for (int q : g.initial())
        if (keep[q]) out.add_initial(newid[q]);
    for (int q : g.final_states())
        if (keep[q]) out.add_final(newid[q]);
    return out;
}

// ---------------------------------------------------------------------------
// Rational operations.  Each one splices whole graphs together and adds at
// most one fresh state with neutral-labelled glue edges.

namespace detail {

/// Copies `src` into `dst` with all state ids shifted; returns the shift.
template <class L>
int splice(LabelledGraph<L>& dst, const LabelledGraph<L>& src) {
    int base = dst.state_count();
    dst.add_states(src.state_count());
    for (const auto& t : src.transitions())
        dst.add_transition(base + t.from, t.label, base + t.to);
    return base;
}

}  // namespace detail

/// Union: a fresh start state feeds both initial sets through neutral edges;
/// the final sets simply combine.
template <class L>
LabelledGraph<L> graph_union(const LabelledGraph<L>& a, const LabelledGraph<L>& b) {
    LabelledGraph<L> out;
    int ba = detail::splice(out, a);
    int bb = detail::splice(out, b);
    int s = out.add_state();
    out.add_initial(s);
    for (int q : a.initial()) out.add_transition(s, neutral_label<L>(), ba + q);
    for (int q : b.initial()) out.add_transition(s, neutral_label<L>(), bb + q);
    for (int q : a.final_states()) out.add_final(ba + q);
    for (int q : b.final_states()) out.add_final(bb + q);
    return out;
}

/// Concatenation: a bridge state between the finals of `a` and the initials
/// of `b`.
template <class L>
LabelledGraph<L> graph_concat(const LabelledGraph<L>& a, const LabelledGraph<L>& b) {
    LabelledGraph<L> out;
    int ba = detail::splice(out, a);
    int bb = detail::splice(out, b);
    int bridge = out.add_state();
    for (int q : a.final_states()) out.add_transition(ba + q, neutral_label<L>(), bridge);
    for (int q : b.initial()) out.add_transition(bridge, neutral_label<L>(), bb + q);
    for (int q : a.initial()) out.add_initial(ba + q);
    for (int q : b.final_states()) out.add_final(bb + q);
    return out;
}

/// Star: a fresh state that is both the start and an acceptor, wired back
/// and forth so the body can repeat.
template <class L>
LabelledGraph<L> graph_star(const LabelledGraph<L>& a) {
    LabelledGraph<L> out;
    int ba = detail::splice(out, a);
    int s = out.add_state();
    out.add_initial(s);
    out.add_final(s);
    for (int q : a.initial()) out.add_transition(s, neutral_label<L>(), ba + q);
    for (int q : a.final_states()) out.add_transition(ba + q, neutral_label<L>(), s);
    for (int q : a.final_states()) out.add_final(ba + q);
    return out;
}

// ---------------------------------------------------------------------------
// Product

/// Generic product of two labelled graphs under a polymorphic label
/// operation.  `op(l1, l2)` returns the labels the combined step carries --
/// usually zero (undefined) or one, and up to three when a composition
/// splits into a disjoint sum.
///
/// Before pairing, neutral self-loops are added on one side whenever a label
/// on the *other* side can be traversed without consuming anything there;
/// this lets one machine idle while the other moves.  Only pairs reachable
/// from I x I' are materialized.  `origin`, when supplied, receives the
/// (left state, right state) pair behind each product state.
template <class L1, class L2, class Op>
auto product(const LabelledGraph<L1>& a, const LabelledGraph<L2>& b, Op&& op,
             std::vector<std::pair<int, int>>* origin = nullptr) {
    using L3 = typename std::invoke_result_t<Op, const L1&, const L2&>::value_type;

    bool a_idles = false, b_idles = false;
    for (const auto& t : a.transitions()) a_idles |= contains_neutral(t.label);
    for (const auto& t : b.transitions()) b_idles |= contains_neutral(t.label);
    const LabelledGraph<L1> ga = b_idles ? add_neutral_loops(a) : a;
    const LabelledGraph<L2> gb = a_idles ? add_neutral_loops(b) : b;

    auto adja = ga.adjacency();
    auto adjb = gb.adjacency();

    LabelledGraph<L3> out;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    if (origin) origin->clear();

    auto state_of = [&](int p, int q) {
        auto [it, fresh] = index.try_emplace({p, q}, out.state_count());
        if (fresh) {
            out.add_state();
            if (origin) origin->emplace_back(p, q);
            if (ga.is_final(p) && gb.is_final(q)) out.add_final(it->second);
            queue.emplace_back(p, q);
        }
        return it->second;
    };

    for (int p : ga.initial())
        for (int q : gb.initial()) out.add_initial(state_of(p, q));

    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        int from = index.at({p, q});
        for (const auto* t1 : adja[p])
            for (const auto* t2 : adjb[q])
                for (L3& l : op(t1->label, t2->label))
                    out.add_transition(from, std::move(l), state_of(t1->to, t2->to));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polymorphic label operations, in both the compact (spec-level) and the
// expanded (letter-level) worlds.  Each returns the zero to three labels of
// the combined step.

namespace ops {

/// Set-spec intersection (automaton product).
inline auto intersect_specs(const Alphabet& gamma) {
    return [&gamma](const SetSpec& f, const SetSpec& g) -> std::vector<SetSpec> {
        auto i = intersect(f, g);
        if (!i) return {};
        auto n = normalize(*i, gamma);
        if (!n) return {};
        return {*n};
    };
}

/// Pairing-spec composition (transducer product); flattens the disjoint sum
/// into parallel transitions.
inline auto compose_specs(const Alphabet& gamma) {
    return [&gamma](const PairingSpec& p1, const PairingSpec& p2) -> std::vector<PairingSpec> {
        auto sum = compose(p1, p2, gamma);
        if (!sum) return {};
        return *sum;
    };
}

/// Input restriction of a pairing spec by an automaton label (set-spec or
/// letter flavour), and the output-side mirror.
inline auto restrict_in_specs(const Alphabet& gamma) {
    return [&gamma](const PairingSpec& p, const SetSpec& s) -> std::vector<PairingSpec> {
        auto r = restrict_in(p, s, gamma);
        if (!r) return {};
        return {*r};
    };
}

inline auto restrict_out_specs(const Alphabet& gamma) {
    return [&gamma](const PairingSpec& p, const SetSpec& s) -> std::vector<PairingSpec> {
        auto r = restrict_out(p, s, gamma);
        if (!r) return {};
        return {*r};
    };
}

inline auto restrict_in_letters(const Alphabet& gamma) {
    return [&gamma](const PairingSpec& p, const Letter& x) -> std::vector<PairingSpec> {
        auto r = restrict_in(p, x, gamma);
        if (!r) return {};
        return {*r};
    };
}

inline auto restrict_out_letters(const Alphabet& gamma) {
    return [&gamma](const PairingSpec& p, const Letter& x) -> std::vector<PairingSpec> {
        auto r = restrict_out(p, x, gamma);
        if (!r) return {};
        return {*r};
    };
}

/// Letter-level counterparts, used on expanded graphs.
inline std::vector<Letter> intersect_letters(const Letter& x, const Letter& y) {
    if (x == y) return {x};
    return {};
}

inline std::vector<LetterPair> compose_letter_pairs(const LetterPair& a, const LetterPair& b) {
    if (a.out == b.in) return {LetterPair{a.in, b.out}};
    return {};
}

inline std::vector<LetterPair> restrict_pair_in(const LetterPair& a, const Letter& x) {
    if (a.in == x) return {a};
    return {};
}

inline std::vector<LetterPair> restrict_pair_out(const LetterPair& a, const Letter& x) {
    if (a.out == x) return {a};
    return {};
}

}  // namespace ops

// ---------------------------------------------------------------------------
// Expansion: replacing each compact label by all the atomic steps it
// denotes.  The class words must be over the alphabet; a label denoting
// nothing simply contributes no transitions.

inline LabelledGraph<Letter> expand(const LabelledGraph<SetSpec>& g, const Alphabet& gamma) {
    LabelledGraph<Letter> out;
    out.add_states(g.state_count());
    for (const auto& t : g.transitions()) {
        if (t.label.is_eps()) {
            out.add_transition(t.from, std::nullopt, t.to);
        } else {
            if (!gamma.contains(t.label.word()))
                throw std::invalid_argument("expand: class word not over the alphabet");
            for (Symbol s : language(t.label, gamma)) out.add_transition(t.from, s, t.to);
        }
    }
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    return out;
}

inline LabelledGraph<LetterPair> expand(const LabelledGraph<PairingSpec>& g,
                                        const Alphabet& gamma) {
    auto check = [&gamma](const SetSpec& s) {
        if (!s.is_eps() && !gamma.contains(s.word()))
            throw std::invalid_argument("expand: class word not over the alphabet");
    };
    LabelledGraph<LetterPair> out;
    out.add_states(g.state_count());
    for (const auto& t : g.transitions()) {
        check(t.label.lhs());
        check(t.label.rhs());
        for (const auto& [u, v] : relation(t.label, gamma)) {
            Letter x = u.empty() ? Letter{} : Letter{u[0]};
            Letter y = v.empty() ? Letter{} : Letter{v[0]};
            out.add_transition(t.from, LetterPair{x, y}, t.to);
        }
    }
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    return out;
}

/// Lifts a plain epsilon-NFA to set-spec labels (each letter becomes a
/// singleton class), so the compact algorithms apply uniformly.
inline LabelledGraph<SetSpec> lift(const LabelledGraph<Letter>& g) {
    LabelledGraph<SetSpec> out;
    out.add_states(g.state_count());
    for (const auto& t : g.transitions())
        out.add_transition(t.from,
                           t.label ? SetSpec::in(SortedWord::of({*t.label})) : SetSpec::eps(),
                           t.to);
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    return out;
}

/// Lifts a standard-form transducer to pairing-spec labels.
inline LabelledGraph<PairingSpec> lift(const LabelledGraph<LetterPair>& g) {
    auto spec = [](const Letter& x) {
        return x ? SetSpec::in(SortedWord::of({*x})) : SetSpec::eps();
    };
    LabelledGraph<PairingSpec> out;
    out.add_states(g.state_count());
    for (const auto& t : g.transitions()) {
        SetSpec l = spec(t.label.in), r = spec(t.label.out);
        PairingSpec p = l.is_eps() ? (r.is_eps() ? PairingSpec::ee() : PairingSpec::eg(r))
                                   : (r.is_eps() ? PairingSpec::fe(l) : PairingSpec::fg(l, r));
        out.add_transition(t.from, p, t.to);
    }
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    return out;
}

}  // namespace symspec
