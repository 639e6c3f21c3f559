#include <aplang/words.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace aplang;

TEST(BorderTable, KnownTables) {
    EXPECT_EQ(border_table("abab"), (std::vector<int>{0, 0, 0, 1, 2}));
    EXPECT_EQ(border_table("aaaa"), (std::vector<int>{0, 0, 1, 2, 3}));
    EXPECT_EQ(border_table("abcab"), (std::vector<int>{0, 0, 0, 0, 1, 2}));
    EXPECT_EQ(border_table(""), (std::vector<int>{0}));
}

TEST(SmallestPeriod, Basics) {
    EXPECT_EQ(smallest_period("a"), 1);
    EXPECT_EQ(smallest_period("ab"), 2);
    EXPECT_EQ(smallest_period("abab"), 2);
    EXPECT_EQ(smallest_period("aab"), 3);
    EXPECT_EQ(smallest_period("aabaa"), 3);
    try {
        smallest_period("");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::empty_word);
    }
}

TEST(PrimitiveRoot, Examples) {
    RootDecomposition r = primitive_root("ababab");
    EXPECT_EQ(r.root, "ab");
    EXPECT_EQ(r.exponent, 3);
    r = primitive_root("aab");
    EXPECT_EQ(r.root, "aab");
    EXPECT_EQ(r.exponent, 1);
    r = primitive_root("aa");
    EXPECT_EQ(r.root, "a");
    EXPECT_EQ(r.exponent, 2);
    // aabaa has smallest period 3, which does not divide 5.
    r = primitive_root("aabaa");
    EXPECT_EQ(r.root, "aabaa");
    EXPECT_EQ(r.exponent, 1);
}

// Exhaustive over all binary words up to length 8: the decomposition
// reconstructs the word and the root passes a brute-force primitivity
// check.
TEST(PrimitiveRoot, ExhaustiveAgainstBruteForce) {
    for (const Word& w : oracles::all_words(Alphabet("ab"), 8)) {
        if (w.empty()) continue;
        RootDecomposition r = primitive_root(w);
        EXPECT_EQ(repeat_to_length(r.root, static_cast<int>(w.size())), w);
        EXPECT_EQ(static_cast<int>(w.size()) % static_cast<int>(r.root.size()), 0);
        EXPECT_EQ(r.exponent, static_cast<int>(w.size() / r.root.size()));
        EXPECT_TRUE(oracles::naive_is_primitive(r.root)) << w;
        EXPECT_EQ(is_primitive(w), r.exponent == 1);
    }
}

TEST(Commute, Examples) {
    EXPECT_TRUE(commute("ab", "abab"));
    EXPECT_FALSE(commute("ab", "ba"));
    EXPECT_TRUE(commute("", "xyz"));
    EXPECT_TRUE(commute("aa", "aaa"));
}

// uv = vu iff one word is empty or both are powers of one primitive word.
TEST(Commute, CharacterizationUpToFive) {
    std::vector<Word> words = oracles::all_words(Alphabet("ab"), 5);
    for (const Word& u : words)
        for (const Word& v : words) {
            bool lhs = commute(u, v);
            bool rhs = u.empty() || v.empty() || primitive_root(u).root == primitive_root(v).root;
            EXPECT_EQ(lhs, rhs) << u << " vs " << v;
        }
}

TEST(FactorRelation, Examples) {
    EXPECT_TRUE(is_factor("ba", "abab"));
    EXPECT_FALSE(is_factor("aa", "abab"));
    EXPECT_TRUE(is_factor("", "abab"));
    EXPECT_TRUE(is_factor("", ""));
    EXPECT_TRUE(is_prefix("ab", "abab"));
    EXPECT_FALSE(is_prefix("ba", "abab"));
    EXPECT_TRUE(is_suffix("bab", "abab"));
    EXPECT_FALSE(is_suffix("aba", "abab"));
}

TEST(FactorRelation, AgreesWithNaiveScanOnRandomWords) {
    std::mt19937 rng(20260823);
    Alphabet ab("ab");
    for (int round = 0; round < 200; ++round) {
        Word x = oracles::random_word(rng, ab, 6);
        Word y = oracles::random_word(rng, ab, 50);
        bool naive = false;
        for (std::size_t i = 0; i + x.size() <= y.size() && !naive; ++i)
            naive = y.compare(i, x.size(), x) == 0;
        EXPECT_EQ(is_factor(x, y), naive) << x << " in " << y;
    }
}

// Reflexive, antisymmetric, transitive on all binary words up to length 6.
TEST(FactorRelation, PartialOrderUpToSix) {
    std::vector<Word> words = oracles::all_words(Alphabet("ab"), 6);
    for (const Word& x : words) EXPECT_TRUE(is_factor(x, x));
    for (const Word& x : words)
        for (const Word& y : words)
            if (is_factor(x, y) && is_factor(y, x)) EXPECT_EQ(x, y);
    for (const Word& x : words)
        for (const Word& y : words) {
            if (!is_factor(x, y)) continue;
            for (const Word& z : words)
                if (is_factor(y, z)) EXPECT_TRUE(is_factor(x, z)) << x << "<" << y << "<" << z;
        }
}

TEST(PrefixesSuffixes, Shape) {
    EXPECT_EQ(prefixes("abc"), (std::vector<Word>{"", "a", "ab", "abc"}));
    EXPECT_EQ(suffixes("abc"), (std::vector<Word>{"", "c", "bc", "abc"}));
    EXPECT_EQ(prefixes(""), (std::vector<Word>{""}));
}

TEST(RepeatToLength, Basics) {
    EXPECT_EQ(repeat_to_length("ab", 5), "ababa");
    EXPECT_EQ(repeat_to_length("ab", 0), "");
    EXPECT_EQ(repeat_to_length("", 0), "");
    try {
        repeat_to_length("", 3);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::empty_period);
    }
}

TEST(OccursInPower, Basics) {
    EXPECT_TRUE(occurs_in_power("bab", "ab"));
    EXPECT_FALSE(occurs_in_power("aa", "ab"));
    EXPECT_TRUE(occurs_in_power("", "ab"));
    EXPECT_TRUE(occurs_in_power("aabaa", "aab"));
    EXPECT_FALSE(occurs_in_power("a", ""));
}
