// nfa.hpp -- decision algorithms on automata with set-spec labels
//
// Emptiness, a shortest witness, membership, and intersection.  Everything
// works on the compact labels directly; the only per-label queries needed
// are emptiness of the denoted class and a smallest element.

#pragma once

#include <optional>

#include "graph.hpp"

namespace symspec {

/// A word accepted by the automaton, or nothing if its language is empty.
/// The walk is breadth-first, so the witness uses as few transitions as
/// possible, and every class is crossed at its smallest element.
inline std::optional<Word> non_empty_witness(const LabelledGraph<SetSpec>& g,
                                             const Alphabet& gamma) {
    struct Step {
        int prev;
        std::optional<Symbol> letter;
    };
    std::vector<std::optional<Step>> seen(g.state_count());
    std::deque<int> queue;
    for (int q : g.initial()) {
        if (seen[q]) continue;
        seen[q] = Step{-1, std::nullopt};
        queue.push_back(q);
    }

    auto adj = g.adjacency();
    auto finish = [&](int q) {
        Word w;
        int at = q;
        while (seen[at]->prev >= 0) {
            if (seen[at]->letter) w.push_back(*seen[at]->letter);
            at = seen[at]->prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (int q : g.initial())
        if (g.is_final(q)) return Word{};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto* t : adj[q]) {
            if (seen[t->to]) continue;
            std::optional<Symbol> letter;
            if (!t->label.is_eps()) {
                auto cls = normalize(t->label, gamma);
                if (!cls) continue;  // the class denotes nothing
                letter = some_element(*cls, gamma);
            }
            seen[t->to] = Step{q, letter};
            if (g.is_final(t->to)) return finish(t->to);
            queue.push_back(t->to);
        }
    }
    return std::nullopt;
}

inline bool is_empty(const LabelledGraph<SetSpec>& g, const Alphabet& gamma) {
    return !non_empty_witness(g, gamma);
}

/// Product automaton accepting exactly the common words.
inline LabelledGraph<SetSpec> intersect(const LabelledGraph<SetSpec>& a,
                                        const LabelledGraph<SetSpec>& b,
                                        const Alphabet& gamma) {
    return product(a, b, ops::intersect_specs(gamma));
}

/// The straight-line automaton accepting exactly `w`.
inline LabelledGraph<SetSpec> line_automaton(const Word& w) {
    LabelledGraph<SetSpec> g;
    g.add_states(static_cast<int>(w.size()) + 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        g.add_transition(static_cast<int>(i), SetSpec::in(SortedWord::of({w[i]})),
                         static_cast<int>(i) + 1);
    g.add_initial(0);
    g.add_final(static_cast<int>(w.size()));
    return g;
}

/// Whether the automaton accepts `w`; the word must be over the alphabet.
inline bool member(const LabelledGraph<SetSpec>& g, const Word& w, const Alphabet& gamma) {
    for (Symbol x : w)
        if (!gamma.contains(x)) throw std::invalid_argument("member: word not over the alphabet");
    return !is_empty(intersect(g, line_automaton(w), gamma), gamma);
}

}  // namespace symspec
