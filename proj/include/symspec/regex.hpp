// regex.hpp -- regular expressions over arbitrary transition labels
//
// Expressions are immutable trees of shared nodes: the empty set, the
// neutral word, a single label, union, concatenation, and star.  The label
// type is the same one the graphs carry (set specs for languages, pairing
// specs for relations), so conversions in both directions stay label-
// agnostic:
//
//   thompson             expression -> graph, linearly many states
//   state_eliminate      graph -> expression
//   pd_automaton         expression -> graph via partial derivatives,
//                        at most (number of labels) + 1 states
//
// Concatenation absorbs neutral operands at construction time; this is the
// convention that keeps partial-derivative tails in canonical shape.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace symspec {

enum class RegexKind { Empty, Neutral, Label, Union, Concat, Star };

/// A label whose denotation is exactly the neutral behaviour collapses to
/// the Neutral leaf when a regex is built from it.
template <class L>
bool regex_label_is_neutral(const L&) { return false; }
inline bool regex_label_is_neutral(const SetSpec& f) { return f.is_eps(); }
inline bool regex_label_is_neutral(const PairingSpec& p) { return p.kind() == PairKind::EE; }

template <class L>
class Regex {
public:
    static Regex empty() { return Regex(Node{RegexKind::Empty, {}, nullptr, nullptr}); }
    static Regex neutral() { return Regex(Node{RegexKind::Neutral, {}, nullptr, nullptr}); }

    static Regex label(L l) {
        if (regex_label_is_neutral(l)) return neutral();
        return Regex(Node{RegexKind::Label, std::move(l), nullptr, nullptr});
    }

    static Regex alt(Regex a, Regex b) {
        return Regex(Node{RegexKind::Union, {}, std::move(a.node_), std::move(b.node_)});
    }

    /// Concatenation; a neutral operand disappears.
    static Regex seq(Regex a, Regex b) {
        if (a.kind() == RegexKind::Neutral) return b;
        if (b.kind() == RegexKind::Neutral) return a;
        return Regex(Node{RegexKind::Concat, {}, std::move(a.node_), std::move(b.node_)});
    }

    static Regex star(Regex a) {
        return Regex(Node{RegexKind::Star, {}, std::move(a.node_), nullptr});
    }

    RegexKind kind() const { return node_->kind; }

    const L& label() const {
        if (kind() != RegexKind::Label) throw std::logic_error("regex: not a label node");
        return *node_->payload;
    }

    Regex left() const { return sub_at(node_->a); }
    Regex right() const { return sub_at(node_->b); }
    Regex sub() const { return sub_at(node_->a); }

private:
    struct Node {
        RegexKind kind;
        std::optional<L> payload;
        std::shared_ptr<const Node> a, b;
    };

    explicit Regex(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Regex sub_at(const std::shared_ptr<const Node>& n) {
        if (!n) throw std::logic_error("regex: node has no such child");
        return Regex(n);
    }

    std::shared_ptr<const Node> node_;
};

/// Whether the neutral word belongs to the denotation.
template <class L>
bool nullable(const Regex<L>& r) {
    switch (r.kind()) {
        case RegexKind::Empty:
        case RegexKind::Label: return false;
        case RegexKind::Neutral:
        case RegexKind::Star: return true;
        case RegexKind::Union: return nullable(r.left()) || nullable(r.right());
        case RegexKind::Concat: return nullable(r.left()) && nullable(r.right());
    }
    return false;
}

/// Number of label occurrences, the size measure behind the
/// partial-derivative state bound.
template <class L>
std::size_t label_count(const Regex<L>& r) {
    switch (r.kind()) {
        case RegexKind::Empty:
        case RegexKind::Neutral: return 0;
        case RegexKind::Label: return 1;
        case RegexKind::Union:
        case RegexKind::Concat: return label_count(r.left()) + label_count(r.right());
        case RegexKind::Star: return label_count(r.sub());
    }
    return 0;
}

namespace detail {

/// Canonical key for deduplicating syntactically equal expressions:
/// concatenation is flattened (it is built right-absorbed anyway), union is
/// not reordered, and labels are interned through the shared map so keys
/// from different expressions stay comparable.
template <class L>
void canon_key(const Regex<L>& r, std::map<L, int>& intern, std::string& out) {
    switch (r.kind()) {
        case RegexKind::Empty: out += '0'; break;
        case RegexKind::Neutral: out += 'e'; break;
        case RegexKind::Label: {
            auto [it, fresh] = intern.try_emplace(r.label(), static_cast<int>(intern.size()));
            (void)fresh;
            out += 'l';
            out += std::to_string(it->second);
            break;
        }
        case RegexKind::Union:
            out += "(+";
            canon_key(r.left(), intern, out);
            out += ' ';
            canon_key(r.right(), intern, out);
            out += ')';
            break;
        case RegexKind::Concat: {
            out += "(.";
            auto parts = [&](auto&& self, const Regex<L>& e) -> void {
                if (e.kind() == RegexKind::Concat) {
                    self(self, e.left());
                    self(self, e.right());
                } else {
                    out += ' ';
                    canon_key(e, intern, out);
                }
            };
            parts(parts, r);
            out += ')';
            break;
        }
        case RegexKind::Star:
            out += "(*";
            canon_key(r.sub(), intern, out);
            out += ')';
            break;
    }
}

template <class L>
std::string canon_key(const Regex<L>& r, std::map<L, int>& intern) {
    std::string out;
    canon_key(r, intern, out);
    return out;
}

}  // namespace detail

/// One monomial of a linear form: a leading label and the expression that
/// remains after consuming it (Neutral when nothing remains).
template <class L>
using Monomial = std::pair<L, Regex<L>>;

namespace detail {

template <class L>
void linear_form_rec(const Regex<L>& r, std::map<L, int>& intern,
                     std::map<std::pair<int, std::string>, bool>& seen,
                     std::vector<Monomial<L>>& out) {
    auto emit = [&](const L& head, const Regex<L>& tail) {
        auto [it, fresh] = intern.try_emplace(head, static_cast<int>(intern.size()));
        if (seen.try_emplace({it->second, canon_key(tail, intern)}, true).second)
            out.emplace_back(head, tail);
    };
    switch (r.kind()) {
        case RegexKind::Empty:
        case RegexKind::Neutral: break;
        case RegexKind::Label: emit(r.label(), Regex<L>::neutral()); break;
        case RegexKind::Union:
            linear_form_rec(r.left(), intern, seen, out);
            linear_form_rec(r.right(), intern, seen, out);
            break;
        case RegexKind::Concat: {
            std::vector<Monomial<L>> head;
            std::map<std::pair<int, std::string>, bool> head_seen;
            linear_form_rec(r.left(), intern, head_seen, head);
            for (const auto& [l, tail] : head) emit(l, Regex<L>::seq(tail, r.right()));
            if (nullable(r.left())) linear_form_rec(r.right(), intern, seen, out);
            break;
        }
        case RegexKind::Star: {
            std::vector<Monomial<L>> body;
            std::map<std::pair<int, std::string>, bool> body_seen;
            linear_form_rec(r.sub(), intern, body_seen, body);
            for (const auto& [l, tail] : body) emit(l, Regex<L>::seq(tail, r));
            break;
        }
    }
}

}  // namespace detail

/// The linear form of `r`: monomials (label, remainder) whose union, plus
/// the neutral word when `r` is nullable, denotes exactly what `r` does.
/// Order follows the left-to-right derivation; duplicates are dropped.
template <class L>
std::vector<Monomial<L>> linear_form(const Regex<L>& r) {
    std::map<L, int> intern;
    std::map<std::pair<int, std::string>, bool> seen;
    std::vector<Monomial<L>> out;
    detail::linear_form_rec(r, intern, seen, out);
    return out;
}

/// Partial derivative of a set-spec expression by a set spec: the remainders
/// of all monomials whose head class meets `f` somewhere in the alphabet.
inline std::vector<Regex<SetSpec>> deriv(const Regex<SetSpec>& r, const SetSpec& f,
                                         const Alphabet& gamma) {
    std::vector<Regex<SetSpec>> out;
    std::map<SetSpec, int> intern;
    std::map<std::string, bool> seen;
    for (const auto& [g, tail] : linear_form(r)) {
        auto meet = intersect(f, g);
        if (!meet || !normalize(*meet, gamma)) continue;
        if (seen.try_emplace(detail::canon_key(tail, intern), true).second) out.push_back(tail);
    }
    return out;
}

/// All expressions reachable from `r` by repeatedly taking linear-form
/// remainders; `r` itself comes first.  The set has at most
/// label_count(r) + 1 elements.
template <class L>
std::vector<Regex<L>> partial_derivatives(const Regex<L>& r) {
    std::map<L, int> intern;
    std::map<std::string, int> seen;
    std::vector<Regex<L>> out;

    auto visit = [&](const Regex<L>& e) {
        auto [it, fresh] = seen.try_emplace(detail::canon_key(e, intern),
                                            static_cast<int>(out.size()));
        (void)it;
        if (fresh) out.push_back(e);
        return fresh;
    };
    visit(r);
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto ms = linear_form(out[i]);  // out may reallocate; don't hold a reference
        for (const auto& [l, tail] : ms) visit(tail);
    }
    return out;
}

/// The partial-derivative automaton: one state per element of the closure,
/// the expression itself initial, nullable states final, and one transition
/// per linear-form monomial.  No neutral labels are ever produced.
template <class L>
LabelledGraph<L> pd_automaton(const Regex<L>& r) {
    std::map<L, int> label_intern;
    std::map<std::string, int> index;
    std::vector<Regex<L>> states;

    auto state_of = [&](const Regex<L>& e) {
        auto [it, fresh] = index.try_emplace(detail::canon_key(e, label_intern),
                                             static_cast<int>(states.size()));
        if (fresh) states.push_back(e);
        return it->second;
    };

    LabelledGraph<L> g;
    state_of(r);
    g.add_state();
    g.add_initial(0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto ms = linear_form(states[i]);
        for (const auto& [l, tail] : ms) {
            int to = state_of(tail);
            while (g.state_count() < static_cast<int>(states.size())) g.add_state();
            g.add_transition(static_cast<int>(i), l, to);
        }
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        if (nullable(states[i])) g.add_final(static_cast<int>(i));
    return g;
}

/// Thompson-style translation: structural recursion where each operator
/// splices subgraphs with at most one fresh state, so the result is linear
/// in the size of the expression.
template <class L>
LabelledGraph<L> thompson(const Regex<L>& r) {
    LabelledGraph<L> g;
    switch (r.kind()) {
        case RegexKind::Empty:
            g.add_states(2);
            g.add_initial(0);
            g.add_final(1);
            return g;
        case RegexKind::Neutral:
            g.add_state();
            g.add_initial(0);
            g.add_final(0);
            return g;
        case RegexKind::Label:
            g.add_states(2);
            g.add_transition(0, r.label(), 1);
            g.add_initial(0);
            g.add_final(1);
            return g;
        case RegexKind::Union: return graph_union(thompson(r.left()), thompson(r.right()));
        case RegexKind::Concat: return graph_concat(thompson(r.left()), thompson(r.right()));
        case RegexKind::Star: return graph_star(thompson(r.sub()));
    }
    return g;
}

/// Graph-to-expression conversion by state elimination.  Fresh endpoints
/// are added first so no path re-enters the start or leaves the finish;
/// states are then eliminated in increasing id order, merging parallel
/// edges by union and routing through self-loops with a star.
template <class L>
Regex<L> state_eliminate(const LabelledGraph<L>& g) {
    using R = Regex<L>;
    const int n = g.state_count();
    const int start = n, finish = n + 1;

    std::map<std::pair<int, int>, R> edge;
    auto merge = [&](int p, int q, R r) {
        auto it = edge.find({p, q});
        if (it == edge.end())
            edge.emplace(std::pair{p, q}, std::move(r));
        else
            it->second = R::alt(it->second, std::move(r));
    };

    for (const auto& t : g.transitions()) merge(t.from, t.to, R::label(t.label));
    for (int q : g.initial()) merge(start, q, R::neutral());
    for (int q : g.final_states()) merge(q, finish, R::neutral());

    for (int q = 0; q < n; ++q) {
        std::optional<R> loop;
        if (auto it = edge.find({q, q}); it != edge.end()) {
            loop = R::star(it->second);
            edge.erase(it);
        }
        std::vector<std::pair<int, R>> in, out;
        for (auto it = edge.begin(); it != edge.end();) {
            if (it->first.second == q && it->first.first != q)
                in.emplace_back(it->first.first, it->second), it = edge.erase(it);
            else if (it->first.first == q)
                out.emplace_back(it->first.second, it->second), it = edge.erase(it);
            else
                ++it;
        }
        for (const auto& [p, rin] : in)
            for (const auto& [s, rout] : out)
                merge(p, s, R::seq(rin, loop ? R::seq(*loop, rout) : rout));
    }

    auto it = edge.find({start, finish});
    return it == edge.end() ? R::empty() : it->second;
}

}  // namespace symspec
