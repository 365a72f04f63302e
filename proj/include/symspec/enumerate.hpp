// enumerate.hpp -- bounded behaviours of labelled graphs
//
// Exhaustive listings of all accepted words (or word pairs) up to a length
// bound.  The graphs involved may have cycles and neutral labels, so the
// walk memoizes (state, payload) configurations instead of paths.  Intended
// for small bounds: these listings back up equivalence checks in tests and
// diagnostics, not production-size queries.

#pragma once

#include <deque>
#include <set>
#include <utility>

#include "graph.hpp"

namespace symspec {

namespace detail {

/// Worklist over (state, payload) configurations.  `extend` maps a label and
/// a payload to the payloads after taking one such transition (empty when
/// the step is impossible or exceeds the caller's bound).
template <class L, class P, class Extend>
std::set<P> bounded_behaviour(const LabelledGraph<L>& g, const P& start, Extend&& extend) {
    std::set<P> accepted;
    std::set<std::pair<int, P>> visited;
    std::deque<std::pair<int, P>> queue;

    auto push = [&](int q, const P& p) {
        if (visited.emplace(q, p).second) {
            if (g.is_final(q)) accepted.insert(p);
            queue.emplace_back(q, p);
        }
    };
    for (int q : g.initial()) push(q, start);

    auto adj = g.adjacency();
    while (!queue.empty()) {
        auto [q, p] = queue.front();
        queue.pop_front();
        for (const auto* t : adj[q])
            for (const P& next : extend(t->label, p)) push(t->to, next);
    }
    return accepted;
}

inline std::vector<Word> extend_word(const Word& w, const Letter& x, std::size_t maxlen) {
    if (!x) return {w};
    if (w.size() >= maxlen) return {};
    Word next = w;
    next.push_back(*x);
    return {next};
}

}  // namespace detail

/// All words of length at most `maxlen` accepted by an epsilon-NFA.
inline std::set<Word> enumerate_words(const LabelledGraph<Letter>& g, std::size_t maxlen) {
    return detail::bounded_behaviour(g, Word{}, [&](const Letter& x, const Word& w) {
        return detail::extend_word(w, x, maxlen);
    });
}

/// All words of length at most `maxlen` accepted by a set-spec automaton.
inline std::set<Word> enumerate_words(const LabelledGraph<SetSpec>& g, const Alphabet& gamma,
                                      std::size_t maxlen) {
    return detail::bounded_behaviour(g, Word{}, [&](const SetSpec& f, const Word& w) {
        std::vector<Word> out;
        if (f.is_eps()) {
            out.push_back(w);
        } else if (w.size() < maxlen) {
            for (Symbol s : language(f, gamma)) {
                Word next = w;
                next.push_back(s);
                out.push_back(std::move(next));
            }
        }
        return out;
    });
}

/// All pairs with both words of length at most `maxlen` realized by a
/// standard-form transducer.
inline std::set<std::pair<Word, Word>> enumerate_pairs(const LabelledGraph<LetterPair>& g,
                                                       std::size_t maxlen) {
    using P = std::pair<Word, Word>;
    return detail::bounded_behaviour(g, P{}, [&](const LetterPair& l, const P& p) {
        std::vector<P> out;
        for (const Word& u : detail::extend_word(p.first, l.in, maxlen))
            for (const Word& v : detail::extend_word(p.second, l.out, maxlen))
                out.emplace_back(u, v);
        return out;
    });
}

/// All pairs with both words of length at most `maxlen` realized by a
/// pairing-spec transducer.
inline std::set<std::pair<Word, Word>> enumerate_pairs(const LabelledGraph<PairingSpec>& g,
                                                       const Alphabet& gamma,
                                                       std::size_t maxlen) {
    using P = std::pair<Word, Word>;
    return detail::bounded_behaviour(g, P{}, [&](const PairingSpec& spec, const P& p) {
        std::vector<P> out;
        for (const auto& [x, y] : relation(spec, gamma)) {
            if (p.first.size() + x.size() > maxlen) continue;
            if (p.second.size() + y.size() > maxlen) continue;
            P next = p;
            next.first.insert(next.first.end(), x.begin(), x.end());
            next.second.insert(next.second.end(), y.begin(), y.end());
            out.push_back(std::move(next));
        }
        return out;
    });
}

}  // namespace symspec
