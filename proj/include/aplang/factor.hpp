// factor.hpp - the factor algebra over regular languages: Sub(L),
// closedness under taking factors, superword automata V*xV*, and the
// factor language of a periodic infinite word.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aplang/automaton.hpp"
#include "aplang/decision.hpp"
#include "aplang/words.hpp"

namespace aplang {

struct FactorAutomaton {
    Automaton base;     // trimmed copy of the input
    Automaton factors;  // accepts Sub(L(base))
};

// Automaton for Sub(L): trim, then make every useful state both initial
// and accepting. A word is a factor of some accepted word exactly when it
// labels a path between two useful states.
inline FactorAutomaton build_factor_automaton(const Automaton& a) {
    Automaton t = trim(a);
    std::vector<int> all;
    for (int s = 0; s < t.state_count(); ++s) all.push_back(s);
    Automaton factors(t.alphabet(), t.state_count(), all, all, t.transitions());
    return {std::move(t), std::move(factors)};
}

// Accepts V* x V*: words containing x as a factor. Built on the failure
// function of x, state i = longest prefix of x matched so far, state |x|
// absorbing.
inline Automaton superword_automaton(const Alphabet& alphabet, const Word& x) {
    if (!alphabet.contains_all(x))
        throw Error(errc::letter_not_in_alphabet, "pattern uses letters outside the alphabet");
    const int n = static_cast<int>(x.size());
    std::vector<int> border = border_table(x);
    std::vector<Transition> transitions;
    for (int i = 0; i <= n; ++i) {
        for (char c : alphabet) {
            if (i == n) {
                transitions.push_back({i, c, i});
                continue;
            }
            int j = i;
            while (j > 0 && x[static_cast<std::size_t>(j)] != c)
                j = border[static_cast<std::size_t>(j)];
            if (x[static_cast<std::size_t>(j)] == c) ++j;
            transitions.push_back({i, c, j});
        }
    }
    return Automaton(alphabet, n + 1, {0}, {n}, std::move(transitions));
}

// Membership of x in Sub(L) without constructing Sub(L): emptiness of the
// product L ∩ V*xV*. Deliberately a different route than the factor
// automaton so the two can cross-check each other.
inline bool is_factor_of_language(const Automaton& a, const Word& x) {
    return !is_empty(intersect(a, superword_automaton(a.alphabet(), x)));
}

// Decides whether L is closed under factors, i.e. L = Sub(L). On NO the
// counterexample is the shortlex-least member of Sub(L) \ L.
inline Decision is_closed(const Automaton& a) {
    FactorAutomaton fa = build_factor_automaton(a);
    Automaton missing = intersect(fa.factors, complement(a));
    auto cex = shortlex_least_word(missing);
    Decision d;
    d.status = Status::exact;
    if (!cex) {
        d.verdict = Verdict::yes;
        d.notes.push_back("language equals its own factor set");
    } else {
        d.verdict = Verdict::no;
        d.counterexample.push_back(*cex);
        d.notes.push_back("factor " + display_word(*cex) + " is not in the language");
    }
    return d;
}

// Automaton for Sub(w^omega) where w is ultimately traversed as its
// primitive root beta: a cycle on |beta| states with every state initial
// and accepting. Factors of the periodic word are exactly the path labels
// around the cycle.
inline Automaton build_periodic_factor_automaton(const Word& w,
                                                 std::optional<Alphabet> alphabet = std::nullopt) {
    if (w.empty()) throw Error(errc::empty_word, "periodic word must be nonempty");
    Alphabet sigma = alphabet ? *alphabet : alphabet_of(w);
    if (!sigma.contains_all(w))
        throw Error(errc::letter_not_in_alphabet, "word uses letters outside the alphabet");
    Word beta = primitive_root(w).root;
    const int p = static_cast<int>(beta.size());
    std::vector<int> all;
    std::vector<Transition> transitions;
    for (int i = 0; i < p; ++i) {
        all.push_back(i);
        transitions.push_back({i, beta[static_cast<std::size_t>(i)], (i + 1) % p});
    }
    return Automaton(sigma, p, all, all, std::move(transitions));
}

}  // namespace aplang
