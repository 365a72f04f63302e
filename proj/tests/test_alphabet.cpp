#include <catch2/catch_amalgamated.hpp>

#include <symspec/alphabet.hpp>

using namespace symspec;

TEST_CASE("wo sorts and deduplicates") {
    CHECK(wo({3, 1, 3, 0, 1}).symbols() == std::vector<Symbol>{0, 1, 3});
    CHECK(wo({}).empty());
    CHECK(wo({7}).symbols() == std::vector<Symbol>{7});
}

TEST_CASE("sorted word set operations") {
    SortedWord a = wo({0, 2, 5});
    SortedWord b = wo({2, 3, 5, 8});
    CHECK(a.intersect(b).symbols() == std::vector<Symbol>{2, 5});
    CHECK(a.minus(b).symbols() == std::vector<Symbol>{0});
    CHECK(a.unite(b).symbols() == std::vector<Symbol>{0, 2, 3, 5, 8});
    CHECK(wo({2, 5}).subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(4));
}

TEST_CASE("alphabet construction") {
    Alphabet g({5, 1, 9});
    CHECK(g.symbols() == std::vector<Symbol>{1, 5, 9});
    CHECK(g.min() == 1);
    CHECK(g.contains(9));
    CHECK_FALSE(g.contains(2));
    CHECK_THROWS_AS(Alphabet({3}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({3, 3, 4}), std::invalid_argument);
    CHECK(Alphabet::range(4).symbols() == std::vector<Symbol>{0, 1, 2, 3});
}

TEST_CASE("out_of finds the smallest missing symbol") {
    Alphabet g = Alphabet::range(6);
    // Brute-force oracle: the least alphabet symbol not in the word.
    auto least_missing = [&](const SortedWord& w) {
        for (Symbol s : g.symbols())
            if (!w.contains(s)) return s;
        FAIL("word covers the alphabet");
        return Symbol{0};
    };
    // Every strict subset of the alphabet.
    for (unsigned mask = 0; mask < (1u << 6) - 1; ++mask) {
        Word w;
        for (unsigned i = 0; i < 6; ++i)
            if (mask & (1u << i)) w.push_back(i);
        SortedWord sw = wo(w);
        CHECK(out_of(sw, g) == least_missing(sw));
    }
    CHECK_THROWS_AS(out_of(wo({0, 1, 2, 3, 4, 5}), g), std::invalid_argument);
    CHECK_THROWS_AS(out_of(wo({0, 7}), g), std::invalid_argument);
}

TEST_CASE("out_of touches only a prefix of the alphabet") {
    // The scan stops at the first disagreement, so the result for a word
    // missing its first symbol is independent of the alphabet size.
    Alphabet g({10, 20, 30, 40});
    CHECK(out_of(wo({20, 30}), g) == 10);
    CHECK(out_of(wo({10, 20, 30}), g) == 40);
    CHECK(out_of(wo({10, 30}), g) == 20);
}
