#include <aplang/sequence.hpp>

#include <gtest/gtest.h>

#include <bit>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace aplang;

namespace {

// Independent generator: letter i of the fixed point of 0->01, 1->10 is
// the parity of the population count of i.
Word parity_word(int n) {
    Word out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::popcount(static_cast<unsigned>(i)) % 2 == 0 ? '0' : '1');
    return out;
}

// Brute-force recurrence value: least m such that every length-m window
// of the prefix contains every word of ws.
std::optional<int> brute_recurrence(const Word& p, const std::vector<Word>& ws, int least_m) {
    const int len = static_cast<int>(p.size());
    for (int m = least_m; m <= len; ++m) {
        bool ok = true;
        for (int i = 0; ok && i + m <= len; ++i) {
            Word window = p.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(m));
            for (const Word& w : ws)
                if (window.find(w) == Word::npos) {
                    ok = false;
                    break;
                }
        }
        if (ok) return m;
    }
    return std::nullopt;
}

SequenceSpec fibonacci() {
    Morphism m(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}});
    return SequenceSpec::morphic_fixed_point(std::move(m), 'a');
}

}  // namespace

TEST(Morphism, ValidatesImages) {
    EXPECT_THROW(Morphism(Alphabet("ab"), {{'a', "ab"}}), Error);           // missing image
    EXPECT_THROW(Morphism(Alphabet("ab"), {{'a', "ab"}, {'b', ""}}), Error);  // erasing
    EXPECT_THROW(Morphism(Alphabet("ab"), {{'a', "ab"}, {'b', "ac"}}), Error);
    EXPECT_THROW(Morphism(Alphabet("ab"), {{'a', "a"}, {'b', "a"}, {'c', "a"}}), Error);
    Morphism m(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}});
    EXPECT_EQ(m.apply("aba"), "abaab");
    EXPECT_TRUE(m.prolongable_at('a'));
    EXPECT_FALSE(m.prolongable_at('b'));
}

TEST(SequenceSpec, ConstructorsValidate) {
    try {
        SequenceSpec::periodic("");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::empty_period);
    }
    Morphism m(Alphabet("ab"), {{'a', "ba"}, {'b', "a"}});
    try {
        SequenceSpec::morphic_fixed_point(m, 'a');
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_prolongable);
    }
    SequenceSpec tm = thue_morse();
    EXPECT_EQ(tm.kind(), SequenceSpec::Kind::morphic_fixed_point);
    EXPECT_EQ(tm.alphabet().letters(), "01");
    EXPECT_EQ(tm.seed(), '0');
}

TEST(Prefix, ThueMorseMatchesParityOracle) {
    SequenceSpec tm = thue_morse();
    EXPECT_EQ(prefix(tm, 8), "01101001");
    EXPECT_EQ(prefix(tm, 4096), parity_word(4096));
}

TEST(Prefix, PeriodicIsTruncatedRepetition) {
    SequenceSpec s = SequenceSpec::periodic("aab");
    EXPECT_EQ(prefix(s, 0), "");
    EXPECT_EQ(prefix(s, 7), "aabaaba");
    EXPECT_EQ(prefix(s, 3), "aab");
}

TEST(Prefix, MorphicPrefixesAreCoherent) {
    SequenceSpec fib = fibonacci();
    EXPECT_EQ(prefix(fib, 13), "abaababaabaab");
    Word longest = prefix(fib, 233);
    for (int n : {1, 2, 5, 21, 89, 233})
        EXPECT_EQ(prefix(fib, n), longest.substr(0, static_cast<std::size_t>(n)));
    SequenceSpec tm = thue_morse();
    Word tm_long = prefix(tm, 512);
    for (int n = 0; n <= 512; n += 37)
        EXPECT_EQ(prefix(tm, n), tm_long.substr(0, static_cast<std::size_t>(n)));
}

TEST(Prefix, RejectsNegativeAndOversizeRequests) {
    SequenceSpec tm = thue_morse();
    EXPECT_THROW(prefix(tm, -1), Error);
    try {
        prefix(tm, sequence_capacity + 1);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::capacity_exceeded);
    }
    EXPECT_EQ(static_cast<int>(prefix(tm, sequence_capacity).size()), sequence_capacity);
}

TEST(FactorsOfLength, ThueMorseComplexity) {
    SequenceSpec tm = thue_morse();
    const std::vector<int> expected_counts = {2, 4, 6, 10, 12, 16};
    Word oracle_prefix = parity_word(512);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Word> got = factors_of_length(tm, n, 512);
        EXPECT_EQ(static_cast<int>(got.size()), expected_counts[static_cast<std::size_t>(n - 1)]);
        std::set<Word> oracle;
        for (int i = 0; i + n <= 512; ++i)
            oracle.insert(oracle_prefix.substr(static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(n)));
        EXPECT_EQ(got, std::vector<Word>(oracle.begin(), oracle.end()));
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
}

TEST(FactorsOfLength, PeriodicMatchesRotationOracle) {
    for (const Word& beta : {Word("a"), Word("ab"), Word("aab"), Word("aabb")}) {
        SequenceSpec s = SequenceSpec::periodic(beta);
        Word power = repeat_to_length(beta, 64);
        for (int n = 0; n <= 6; ++n) {
            std::set<Word> oracle;
            for (int i = 0; i < static_cast<int>(beta.size()); ++i)
                oracle.insert(power.substr(static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(n)));
            EXPECT_EQ(factors_of_length(s, n, 64),
                      std::vector<Word>(oracle.begin(), oracle.end()))
                << "period " << beta << ", n " << n;
        }
    }
    EXPECT_THROW(factors_of_length(thue_morse(), 5, 4), Error);
    EXPECT_THROW(factors_of_length(thue_morse(), -1, 4), Error);
}

TEST(RecurrenceForFactor, Examples) {
    SequenceSpec ab = SequenceSpec::periodic("ab");
    RecurrenceReport r = recurrence_for_factor(ab, "a", 64);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, 2);
    EXPECT_EQ(r.n, 1);
    EXPECT_EQ(r.prefix_len, 64);
    EXPECT_EQ(exactness_name(r.exactness), "ESTIMATE");

    r = recurrence_for_factor(ab, "", 64);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, 0);

    SequenceSpec tm = thue_morse();
    r = recurrence_for_factor(tm, "0", 256);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, 3);  // runs have length at most 2, so a 0 in every 3-window

    try {
        recurrence_for_factor(tm, "000", 256);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::factor_not_found);  // the fixed point is cube free
    }
}

TEST(RecurrenceForFactor, MatchesBruteWindowScan) {
    SequenceSpec tm = thue_morse();
    Word p = prefix(tm, 128);
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : factors_of_length(tm, n, 128)) {
            RecurrenceReport r = recurrence_for_factor(tm, w, 128);
            EXPECT_EQ(r.value, brute_recurrence(p, {w}, n)) << w;
        }
}

TEST(RecurrenceFunction, MatchesBruteWindowScan) {
    SequenceSpec tm = thue_morse();
    Word p = prefix(tm, 128);
    for (int n = 1; n <= 4; ++n) {
        RecurrenceReport r = recurrence_function(tm, n, 128);
        EXPECT_EQ(r.value, brute_recurrence(p, factors_of_length(tm, n, 128), n));
    }
    SequenceSpec aab = SequenceSpec::periodic("aab");
    Word q = prefix(aab, 64);
    for (int n = 1; n <= 4; ++n) {
        RecurrenceReport r = recurrence_function(aab, n, 64);
        EXPECT_EQ(r.value, brute_recurrence(q, factors_of_length(aab, n, 64), n));
    }
}

TEST(RecurrenceFunction, FrozenValues) {
    EXPECT_EQ(recurrence_function(SequenceSpec::periodic("ab"), 2, 64).value,
              std::optional<int>(3));
    EXPECT_EQ(recurrence_function(SequenceSpec::periodic("ab"), 1, 64).value,
              std::optional<int>(2));
    // aabb: the two length-1 factors both recur within every 3-window,
    // so the value sits below period + n - 1 here.
    EXPECT_EQ(recurrence_function(SequenceSpec::periodic("aabb"), 1, 4096).value,
              std::optional<int>(3));
    EXPECT_EQ(recurrence_function(SequenceSpec::periodic("aabb"), 2, 4096).value,
              std::optional<int>(5));
    EXPECT_EQ(recurrence_function(thue_morse(), 1, 4096).value, std::optional<int>(3));
}

TEST(EventualPeriodicityProbe, FindsShortPeriods) {
    Decision d = eventual_periodicity_probe(SequenceSpec::periodic("ab"), 2, 6, 64);
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::bounded);
    EXPECT_EQ(d.bound, 2);
    ASSERT_EQ(d.witness.size(), 1u);
    EXPECT_EQ(d.witness.front(), "ab");
    ASSERT_EQ(d.notes.size(), 1u);  // failure notes are dropped on success
    EXPECT_NE(d.notes.front().find("(ab)^ω"), std::string::npos);
}

TEST(EventualPeriodicityProbe, RefutesWithPerCandidateFactors) {
    Decision d = eventual_periodicity_probe(SequenceSpec::periodic("aab"), 2, 3, 64);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::bounded);
    EXPECT_EQ(d.bound, 2);
    ASSERT_EQ(d.notes.size(), 7u);  // summary + one line per candidate (2 + 4)
    EXPECT_NE(d.notes.front().find("no period word up to length 2"), std::string::npos);
    for (std::size_t i = 1; i < d.notes.size(); ++i)
        EXPECT_EQ(d.notes[i].rfind("candidate ", 0), 0u) << d.notes[i];
}

TEST(EventualPeriodicityProbe, ThueMorseIsNotEventuallyPeriodic) {
    Decision d = eventual_periodicity_probe(thue_morse(), 4, 8, 1024);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.notes.size(), 31u);  // summary + 2 + 4 + 8 + 16 candidates
    EXPECT_THROW(eventual_periodicity_probe(thue_morse(), 0, 8, 1024), Error);
    EXPECT_THROW(eventual_periodicity_probe(thue_morse(), 4, 0, 1024), Error);
}
