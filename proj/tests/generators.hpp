// generators.hpp -- seeded random instances for property tests
//
// Every generator takes the RNG by reference, so a fixed seed reproduces the
// whole sequence of instances.  Distributions are chosen to exercise edge
// cases (empty final sets, self-loops, neutral labels) rather than to be
// uniform in any technical sense.

#pragma once

#include <random>

#include "symspec/graph.hpp"
#include "symspec/regex.hpp"

namespace gen {

using namespace symspec;

/// Nonempty subset of the alphabet; proper (not all of it) unless
/// `allow_full` is set.
inline SortedWord random_subset(std::mt19937& rng, const Alphabet& gamma,
                                bool allow_full = false) {
    const auto n = gamma.size();
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(1, top);
    std::uint64_t mask = pick(rng);
    while (!allow_full && mask == top) mask = pick(rng);
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) w.push_back(gamma.symbols()[i]);
    return SortedWord::of(w);
}

inline SetSpec random_setspec(std::mt19937& rng, const Alphabet& gamma, bool allow_eps) {
    std::uniform_int_distribution<int> kind(allow_eps ? 0 : 1, 3);
    switch (kind(rng)) {
        case 0: return SetSpec::eps();
        case 1: return SetSpec::all();
        case 2: return SetSpec::in(random_subset(rng, gamma));
        default: return SetSpec::not_in(random_subset(rng, gamma));
    }
}

/// A non-neutral set spec, as required for pairing-spec components.
inline SetSpec random_component(std::mt19937& rng, const Alphabet& gamma) {
    return random_setspec(rng, gamma, false);
}

inline PairingSpec random_pairspec(std::mt19937& rng, const Alphabet& gamma) {
    std::uniform_int_distribution<int> kind(0, 5);
    switch (kind(rng)) {
        case 0: return PairingSpec::ee();
        case 1: return PairingSpec::eg(random_component(rng, gamma));
        case 2: return PairingSpec::fe(random_component(rng, gamma));
        case 3:
            return PairingSpec::fg(random_component(rng, gamma), random_component(rng, gamma));
        case 4: return PairingSpec::same(random_component(rng, gamma));
        default:
            return PairingSpec::diff(random_component(rng, gamma), random_component(rng, gamma));
    }
}

/// Random graph skeleton shared by the automaton and transducer generators:
/// `labels` supplies one label per requested transition.
template <class L, class MakeLabel>
LabelledGraph<L> random_graph(std::mt19937& rng, int max_states, int max_transitions,
                              MakeLabel&& label) {
    LabelledGraph<L> g;
    std::uniform_int_distribution<int> nstates(1, max_states);
    const int n = nstates(rng);
    g.add_states(n);

    std::uniform_int_distribution<int> ntrans(0, max_transitions);
    std::uniform_int_distribution<int> state(0, n - 1);
    const int t = ntrans(rng);
    for (int i = 0; i < t; ++i) g.add_transition(state(rng), label(), state(rng));

    g.add_initial(state(rng));
    std::bernoulli_distribution extra(0.2);
    if (extra(rng)) g.add_initial(state(rng));
    std::bernoulli_distribution final_p(0.4);
    for (int q = 0; q < n; ++q)
        if (final_p(rng)) g.add_final(q);
    return g;
}

inline LabelledGraph<SetSpec> random_set_automaton(std::mt19937& rng, const Alphabet& gamma,
                                                   int max_states, int max_transitions,
                                                   bool allow_eps = true) {
    return random_graph<SetSpec>(rng, max_states, max_transitions,
                                 [&] { return random_setspec(rng, gamma, allow_eps); });
}

inline LabelledGraph<PairingSpec> random_pair_transducer(std::mt19937& rng,
                                                         const Alphabet& gamma, int max_states,
                                                         int max_transitions) {
    return random_graph<PairingSpec>(rng, max_states, max_transitions,
                                     [&] { return random_pairspec(rng, gamma); });
}

/// A letter or the empty word, for standard-form transducer labels.
inline Letter random_letter(std::mt19937& rng, const Alphabet& gamma) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gamma.size()));
    const int v = pick(rng);
    if (v == 0) return std::nullopt;
    return gamma.symbols()[static_cast<std::size_t>(v) - 1];
}

inline LabelledGraph<LetterPair> random_std_transducer(std::mt19937& rng, const Alphabet& gamma,
                                                       int max_states, int max_transitions) {
    return random_graph<LetterPair>(rng, max_states, max_transitions, [&] {
        return LetterPair{random_letter(rng, gamma), random_letter(rng, gamma)};
    });
}

/// Standard-form transducer whose labels all copy a letter or idle, so the
/// realized relation is a subset of the identity by construction.
inline LabelledGraph<LetterPair> random_copying_transducer(std::mt19937& rng,
                                                           const Alphabet& gamma, int max_states,
                                                           int max_transitions) {
    return random_graph<LetterPair>(rng, max_states, max_transitions, [&] {
        Letter x = random_letter(rng, gamma);
        return LetterPair{x, x};
    });
}

/// Random set-spec expression with at most `label_budget` label occurrences.
/// The budget shrinks through binary operators, guaranteeing termination;
/// `depth` caps star/operator nesting.
inline Regex<SetSpec> random_regex(std::mt19937& rng, const Alphabet& gamma, int label_budget,
                                   int depth = 0) {
    using R = Regex<SetSpec>;
    if (label_budget <= 0) return R::neutral();
    std::uniform_int_distribution<int> shape(0, depth >= 6 ? 1 : 9);
    const int pick = shape(rng);
    if (pick <= 1 || label_budget == 1) {
        if (pick == 0 && depth > 0) return R::neutral();
        return R::label(random_setspec(rng, gamma, false));
    }
    if (pick <= 4) {  // union
        std::uniform_int_distribution<int> split(1, label_budget - 1);
        const int lhs = split(rng);
        return R::alt(random_regex(rng, gamma, lhs, depth + 1),
                      random_regex(rng, gamma, label_budget - lhs, depth + 1));
    }
    if (pick <= 7) {  // concatenation
        std::uniform_int_distribution<int> split(1, label_budget - 1);
        const int lhs = split(rng);
        return R::seq(random_regex(rng, gamma, lhs, depth + 1),
                      random_regex(rng, gamma, label_budget - lhs, depth + 1));
    }
    return R::star(random_regex(rng, gamma, label_budget, depth + 1));
}

}  // namespace gen
