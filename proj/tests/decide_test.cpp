#include <aplang/decide.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <set>

#include <aplang/regex.hpp>

#include "oracles.hpp"

using namespace aplang;

namespace {

const Alphabet kAB("ab");

Automaton re(const std::string& pattern) { return compile_regex(pattern, kAB); }

// Labels of all simple cycles (no repeated intermediate state) in the
// trimmed canonical form, found by exhaustive path search. Used to check
// that the almost-periodicity verdict does not depend on the cycle choice.
std::vector<Word> all_simple_cycle_labels(const Automaton& a) {
    Automaton d = trim(determinize_minimize(a));
    std::set<Word> labels;
    for (int start = 0; start < d.state_count(); ++start) {
        std::function<void(int, Word&, std::vector<bool>&)> walk =
            [&](int s, Word& label, std::vector<bool>& visited) {
                for (char c : d.alphabet()) {
                    for (int t : d.next(s, c)) {
                        label.push_back(c);
                        if (t == start) {
                            labels.insert(label);
                        } else if (!visited[static_cast<std::size_t>(t)]) {
                            visited[static_cast<std::size_t>(t)] = true;
                            walk(t, label, visited);
                            visited[static_cast<std::size_t>(t)] = false;
                        }
                        label.pop_back();
                    }
                }
            };
        std::vector<bool> visited(static_cast<std::size_t>(d.state_count()), false);
        visited[static_cast<std::size_t>(start)] = true;
        Word label;
        walk(start, label, visited);
    }
    return std::vector<Word>(labels.begin(), labels.end());
}

}  // namespace

TEST(ExtractPumpingWord, Examples) {
    EXPECT_EQ(extract_pumping_word(re("(ab)*")).w, "ab");
    EXPECT_EQ(extract_pumping_word(re("a*")).w, "a");
    // Both one-letter cycles exist in a*b*; the tie-break picks a.
    EXPECT_EQ(extract_pumping_word(re("a*b*")).w, "a");
    EXPECT_EQ(extract_pumping_word(re("(a|b)*")).w, "a");
}

TEST(ExtractPumpingWord, FiniteLanguageRejected) {
    try {
        extract_pumping_word(re("ab|ba"));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::finite_language);
    }
}

TEST(ExtractPumpingWord, PowersAreFactorsOnRandomAutomata) {
    std::mt19937 rng(1001);
    int infinite_seen = 0;
    for (int round = 0; round < 200 && infinite_seen < 60; ++round) {
        Automaton a = oracles::random_automaton(rng, kAB, 5);
        if (is_finite(a)) continue;
        ++infinite_seen;
        PumpingWitness p = extract_pumping_word(a);
        EXPECT_FALSE(p.w.empty());
        EXPECT_FALSE(p.cycle_states.empty());
        EXPECT_GE(p.entry_path_len, 0);
        for (int n = 1; n <= 5; ++n)
            EXPECT_TRUE(is_factor_of_language(a, repeat_to_length(
                                                     p.w, n * static_cast<int>(p.w.size()))))
                << p.w;
    }
    EXPECT_GE(infinite_seen, 30);
}

TEST(IsAlmostPeriodic, AlternatingWordsAreAlmostPeriodic) {
    Decision d = is_almost_periodic(build_periodic_factor_automaton("ab", kAB));
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    ASSERT_EQ(d.witness.size(), 1u);
    EXPECT_EQ(d.witness.front(), "ab");
}

TEST(IsAlmostPeriodic, ClosedInfiniteButNotPeriodicFactors) {
    Decision d = is_almost_periodic(re("a*b*"));
    EXPECT_FALSE(d.yes());
    ASSERT_EQ(d.counterexample.size(), 1u);
    EXPECT_EQ(d.counterexample.front(), "b");
    d = is_almost_periodic(re("(a|b)*"));
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.counterexample.front(), "b");
    d = is_almost_periodic(re("a*|b*"));
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.counterexample.front(), "b");
}

TEST(IsAlmostPeriodic, FiniteClosedLanguagesAreVacuouslyAlmostPeriodic) {
    Decision d = is_almost_periodic(re("()|a"));
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    ASSERT_FALSE(d.notes.empty());
    EXPECT_NE(d.notes.front().find("vacuous"), std::string::npos);
    // Degenerate cases are flagged.
    d = is_almost_periodic(re("[]"));
    EXPECT_TRUE(d.yes());
    bool degenerate_note = false;
    for (const std::string& note : d.notes)
        if (note.find("degenerate") != std::string::npos) degenerate_note = true;
    EXPECT_TRUE(degenerate_note);
    d = is_almost_periodic(re("()"));
    EXPECT_TRUE(d.yes());
}

TEST(IsAlmostPeriodic, NotClosedIsRejectedWithClosureCounterexample) {
    Decision d = is_almost_periodic(re("(ab)*"));
    EXPECT_FALSE(d.yes());
    ASSERT_EQ(d.counterexample.size(), 1u);
    EXPECT_EQ(d.counterexample.front(), "a");
}

TEST(IsAlmostPeriodic, VerdictIndependentOfPumpingWordChoice) {
    std::mt19937 rng(1002);
    int closed_infinite_seen = 0;
    for (int round = 0; round < 400 && closed_infinite_seen < 50; ++round) {
        Automaton a = oracles::random_automaton(rng, kAB, 4);
        Automaton sub = determinize_minimize(build_factor_automaton(a).factors);
        if (is_finite(sub)) continue;
        ++closed_infinite_seen;
        Decision canonical = is_almost_periodic(sub);
        for (const Word& cycle : all_simple_cycle_labels(sub)) {
            Decision alt = is_almost_periodic_with_pump(sub, cycle);
            EXPECT_EQ(alt.yes(), canonical.yes()) << "cycle " << cycle;
        }
    }
    EXPECT_GE(closed_infinite_seen, 30);
}

TEST(IsAlmostPeriodic, YesWitnessSatisfiesTheIdentity) {
    std::mt19937 rng(1003);
    for (int round = 0; round < 100; ++round) {
        Automaton a = oracles::random_automaton(rng, kAB, 4);
        Automaton sub = build_factor_automaton(a).factors;
        Decision d = is_almost_periodic(sub);
        if (!d.yes() || is_finite(sub)) continue;
        ASSERT_EQ(d.witness.size(), 1u);
        const Word& beta = d.witness.front();
        EXPECT_TRUE(are_equivalent(sub, build_periodic_factor_automaton(beta, kAB)));
        for (int n = 1; n <= 5; ++n)
            EXPECT_TRUE(is_factor_of_language(
                sub, repeat_to_length(beta, n * static_cast<int>(beta.size()))));
    }
}

TEST(FactorLanguageOfAlmostPeriodicWord, Examples) {
    Decision d = is_factor_language_of_almost_periodic_word(
        build_periodic_factor_automaton("ab", kAB));
    EXPECT_TRUE(d.yes());
    ASSERT_EQ(d.witness.size(), 1u);
    EXPECT_EQ(d.witness.front(), "ab");
    bool alpha_note = false;
    for (const std::string& note : d.notes)
        if (note.find("(ab)^ω") != std::string::npos) alpha_note = true;
    EXPECT_TRUE(alpha_note);

    d = is_factor_language_of_almost_periodic_word(re("()|a"));
    EXPECT_FALSE(d.yes());
    EXPECT_NE(d.notes.front().find("finite"), std::string::npos);

    EXPECT_FALSE(is_factor_language_of_almost_periodic_word(re("a*b*")).yes());
}

TEST(PairHasCommonSuperword, Examples) {
    Decision d = pair_has_common_superword(re("a*b*"), "a", "b");
    EXPECT_TRUE(d.yes());
    ASSERT_EQ(d.witness.size(), 1u);
    EXPECT_EQ(d.witness.front(), "ab");

    d = pair_has_common_superword(re("a*|b*"), "a", "b");
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    ASSERT_EQ(d.counterexample.size(), 2u);
    EXPECT_EQ(d.counterexample[0], "a");
    EXPECT_EQ(d.counterexample[1], "b");

    d = pair_has_common_superword(re("a*b*"), "", "");
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.witness.front(), "");
}

TEST(PairHasCommonSuperword, ForeignLettersRejected) {
    try {
        pair_has_common_superword(re("a*"), "ax", "b");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::letter_not_in_alphabet);
    }
}

TEST(BoundedConfluence, Examples) {
    Decision d = bounded_confluence(re("a*|b*"), 1);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    ASSERT_EQ(d.counterexample.size(), 2u);
    EXPECT_EQ(d.counterexample[0], "a");
    EXPECT_EQ(d.counterexample[1], "b");

    d = bounded_confluence(re("a*b*"), 6);
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::bounded);
    EXPECT_EQ(d.bound, 6);

    d = bounded_confluence(re("[]"), 3);
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::bounded);
    bool empty_note = false;
    for (const std::string& note : d.notes)
        if (note.find("empty") != std::string::npos) empty_note = true;
    EXPECT_TRUE(empty_note);
}

TEST(BoundedConfluence, RefutationsAreRecheckable) {
    std::mt19937 rng(1004);
    for (int round = 0; round < 40; ++round) {
        Automaton a = oracles::random_automaton(rng, kAB, 4);
        Decision d = bounded_confluence(a, 3);
        if (d.yes()) continue;
        ASSERT_EQ(d.counterexample.size(), 2u);
        const Word& x = d.counterexample[0];
        const Word& y = d.counterexample[1];
        EXPECT_TRUE(is_factor_of_language(a, x));
        EXPECT_TRUE(is_factor_of_language(a, y));
        EXPECT_FALSE(pair_has_common_superword(a, x, y).yes());
    }
}

TEST(BiinfiniteFactorLanguage, Fixtures) {
    Decision d = is_biinfinite_factor_language(re("a*b*"), 6);
    EXPECT_TRUE(d.yes());
    EXPECT_EQ(d.status, Status::bounded);
    EXPECT_EQ(d.bound, 6);
    bool alpha_note = false;
    for (const std::string& note : d.notes)
        if (note.find("^ω a · b^ω") != std::string::npos) alpha_note = true;
    EXPECT_TRUE(alpha_note);

    d = is_biinfinite_factor_language(re("a*|b*"), 6);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    ASSERT_EQ(d.counterexample.size(), 2u);
    EXPECT_EQ(d.counterexample[0], "a");
    EXPECT_EQ(d.counterexample[1], "b");

    d = is_biinfinite_factor_language(re("()|a"), 6);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    EXPECT_NE(d.notes.front().find("finite"), std::string::npos);

    // Not closed: rejected exactly, before any confluence work.
    d = is_biinfinite_factor_language(re("(ab)*"), 6);
    EXPECT_FALSE(d.yes());
    EXPECT_EQ(d.status, Status::exact);
    EXPECT_EQ(d.counterexample.front(), "a");
}

TEST(BiinfiniteFactorLanguage, PeriodicModelNoteForAlternatingWords) {
    Decision d = is_biinfinite_factor_language(build_periodic_factor_automaton("ab", kAB), 6);
    EXPECT_TRUE(d.yes());
    bool alpha_note = false;
    for (const std::string& note : d.notes)
        if (note.find("^ω ab · ab^ω") != std::string::npos) alpha_note = true;
    EXPECT_TRUE(alpha_note);
}

TEST(BiinfiniteFactorLanguage, ConsistentWithSequenceRepresentability) {
    std::mt19937 rng(1005);
    for (int round = 0; round < 50; ++round) {
        Automaton a = oracles::random_automaton(rng, kAB, 4);
        Automaton sub = build_factor_automaton(a).factors;
        if (!is_factor_language_of_almost_periodic_word(sub).yes()) continue;
        Decision bi = is_biinfinite_factor_language(sub, 4);
        EXPECT_TRUE(bi.yes()) << "almost periodic languages are confluent";
    }
}
