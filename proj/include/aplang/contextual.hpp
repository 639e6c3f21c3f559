// contextual.hpp - bounded generation for contextual grammars and the
// desk-scale consistency probe for the letter-star characterization of
// almost periodic contextual languages.
//
// Family mapping used throughout: EXTERNAL without selector, EXTERNAL with
// selector, INTERNAL without selector, INTERNAL with selector. Selectors
// restrict, per context, which word (external) or which replaced factor
// (internal) a context may wrap.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aplang/alphabet.hpp"
#include "aplang/automaton.hpp"
#include "aplang/error.hpp"
#include "aplang/words.hpp"

namespace aplang {

struct Context {
    Word left;
    Word right;

    friend auto operator<=>(const Context&, const Context&) = default;
};

enum class GrammarMode { external, internal };

inline std::string grammar_mode_name(GrammarMode m) {
    return m == GrammarMode::external ? "external" : "internal";
}

class ContextualGrammar {
public:
    ContextualGrammar(Alphabet alphabet, std::vector<Word> base, std::vector<Context> contexts,
                      GrammarMode mode, std::map<int, Automaton> selector = {})
        : alphabet_(std::move(alphabet)),
          base_(std::move(base)),
          contexts_(std::move(contexts)),
          mode_(mode),
          selector_(std::move(selector)) {
        for (const Word& w : base_)
            if (!alphabet_.contains_all(w))
                throw Error(errc::letter_not_in_alphabet, "base word " + display_word(w));
        for (const Context& c : contexts_)
            if (!alphabet_.contains_all(c.left) || !alphabet_.contains_all(c.right))
                throw Error(errc::letter_not_in_alphabet,
                            "context (" + display_word(c.left) + ", " + display_word(c.right) + ")");
        for (const auto& [index, automaton] : selector_) {
            if (index < 0 || index >= static_cast<int>(contexts_.size()))
                throw Error(errc::invalid_argument,
                            "selector index " + std::to_string(index) + " has no context");
            if (!(automaton.alphabet() == alphabet_))
                throw Error(errc::alphabet_mismatch, "selector automaton alphabet differs");
        }
        std::sort(base_.begin(), base_.end(), ShortlexLess{&alphabet_});
        base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& base() const { return base_; }
    const std::vector<Context>& contexts() const { return contexts_; }
    GrammarMode mode() const { return mode_; }
    const std::map<int, Automaton>& selector() const { return selector_; }

    // Missing selector entries leave the context unrestricted.
    bool selector_admits(int context_index, const Word& w) const {
        auto it = selector_.find(context_index);
        return it == selector_.end() || accepts(it->second, w);
    }

private:
    Alphabet alphabet_;
    std::vector<Word> base_;
    std::vector<Context> contexts_;
    GrammarMode mode_;
    std::map<int, Automaton> selector_;
};

// One derivation step from x. External mode wraps the whole word, u x v;
// internal mode wraps any factor z of any factorization x = x1 z x2,
// giving x1 u z v x2. The selector, when present for a context, must
// accept x (external) or z (internal).
inline std::vector<Word> derive_step(const ContextualGrammar& g, const Word& x) {
    if (!g.alphabet().contains_all(x))
        throw Error(errc::letter_not_in_alphabet, "word " + display_word(x));
    std::set<Word> out;
    const auto& contexts = g.contexts();
    for (int ci = 0; ci < static_cast<int>(contexts.size()); ++ci) {
        const Context& c = contexts[static_cast<std::size_t>(ci)];
        if (g.mode() == GrammarMode::external) {
            if (g.selector_admits(ci, x)) out.insert(c.left + x + c.right);
            continue;
        }
        const int n = static_cast<int>(x.size());
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Word z = x.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i));
                if (!g.selector_admits(ci, z)) continue;
                out.insert(x.substr(0, static_cast<std::size_t>(i)) + c.left + z + c.right +
                           x.substr(static_cast<std::size_t>(j)));
            }
    }
    std::vector<Word> result(out.begin(), out.end());
    std::sort(result.begin(), result.end(), ShortlexLess{&g.alphabet()});
    return result;
}

struct GenerationReport {
    std::vector<Word> words;  // shortlex ordered
    int max_len = 0;
    bool truncated = false;  // word budget ran out before the closure was complete
};

// Closure of the base under derive_step, keeping words of length at most
// max_len. The worklist is processed in shortlex order, so the output is
// identical run to run; hitting max_words stops the closure and flags the
// report as truncated instead of failing.
inline GenerationReport generate(const ContextualGrammar& g, int max_len, int max_words) {
    if (max_len < 0) throw Error(errc::invalid_argument, "max_len must be >= 0");
    GenerationReport report;
    report.max_len = max_len;
    ShortlexLess less{&g.alphabet()};
    std::set<Word, ShortlexLess> known(less);
    std::set<Word, ShortlexLess> pending(less);
    for (const Word& w : g.base())
        if (static_cast<int>(w.size()) <= max_len) {
            if (static_cast<int>(known.size()) >= max_words) {
                report.truncated = true;
                break;
            }
            known.insert(w);
            pending.insert(w);
        }
    while (!pending.empty() && !report.truncated) {
        Word x = *pending.begin();
        pending.erase(pending.begin());
        for (const Word& y : derive_step(g, x)) {
            if (static_cast<int>(y.size()) > max_len || known.count(y)) continue;
            if (static_cast<int>(known.size()) >= max_words) {
                report.truncated = true;
                break;
            }
            known.insert(y);
            pending.insert(y);
        }
    }
    report.words.assign(known.begin(), known.end());
    return report;
}

// Minimum length added by a single context application.
inline int min_context_growth(const ContextualGrammar& g) {
    if (g.contexts().empty()) throw Error(errc::no_contexts, "grammar has no contexts");
    int best = -1;
    for (const Context& c : g.contexts()) {
        int growth = static_cast<int>(c.left.size() + c.right.size());
        if (best < 0 || growth < best) best = growth;
    }
    return best;
}

struct LetterStarAudit {
    int max_len = 0;
    int k = 0;
    int word_count = 0;
    bool generation_truncated = false;
    bool closed_up_to_k = false;      // every factor <= k of a generated word is generated
    bool redundant_up_to_k = false;   // every generated word <= k occurs in every long word
    bool redundancy_vacuous = false;  // no generated word of length >= max_len - k to test against
    bool is_letter_star = false;      // generated set is exactly {a}^<=max_len for some letter a
    std::optional<char> letter;       // that letter, when is_letter_star holds
    bool consistent = false;          // ! (closed && redundant && ! letter_star)
    std::optional<Word> closure_gap;        // witness factor missing from the generated set
    std::optional<std::pair<Word, Word>> redundancy_gap;  // (short word, long word missing it)
    bool growth_warning = false;      // some context adds fewer than 2 letters
};

// Generates words up to max_len and audits the letter-star
// characterization: an infinite almost periodic contextual language should
// be a* for a single letter a. Closedness and redundancy are sampled up to
// the margin k; a probe observing closed and redundant but not letter-star
// would be a finding worth escalating, and the consistent flag says so.
inline LetterStarAudit letter_star_probe(const ContextualGrammar& g, int max_len, int k) {
    if (k < 0 || k > max_len - 2)
        throw Error(errc::invalid_argument, "need 0 <= k <= max_len - 2");
    GenerationReport gen = generate(g, max_len, 1 << 17);
    LetterStarAudit report;
    report.max_len = max_len;
    report.k = k;
    report.word_count = static_cast<int>(gen.words.size());
    report.generation_truncated = gen.truncated;
    report.growth_warning = !g.contexts().empty() && min_context_growth(g) < 2;

    ShortlexLess less{&g.alphabet()};
    std::set<Word, ShortlexLess> generated(gen.words.begin(), gen.words.end(), less);

    report.closed_up_to_k = true;
    for (const Word& x : gen.words) {
        const int n = static_cast<int>(x.size());
        for (int len = 0; len <= std::min(k, n) && report.closed_up_to_k; ++len)
            for (int i = 0; i + len <= n; ++i) {
                Word f = x.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(len));
                if (!generated.count(f)) {
                    report.closed_up_to_k = false;
                    report.closure_gap = f;
                    break;
                }
            }
        if (!report.closed_up_to_k) break;
    }

    std::vector<Word> short_words, long_words;
    for (const Word& x : gen.words) {
        if (static_cast<int>(x.size()) <= k) short_words.push_back(x);
        if (static_cast<int>(x.size()) >= max_len - k) long_words.push_back(x);
    }
    report.redundancy_vacuous = long_words.empty();
    report.redundant_up_to_k = true;
    for (const Word& x : short_words) {
        for (const Word& y : long_words)
            if (!is_factor(x, y)) {
                report.redundant_up_to_k = false;
                report.redundancy_gap = {x, y};
                break;
            }
        if (!report.redundant_up_to_k) break;
    }

    for (char a : g.alphabet()) {
        if (static_cast<int>(gen.words.size()) != max_len + 1) break;
        bool all = true;
        for (int i = 0; i <= max_len && all; ++i)
            all = generated.count(Word(static_cast<std::size_t>(i), a)) > 0;
        if (all) {
            report.is_letter_star = true;
            report.letter = a;
            break;
        }
    }

    report.consistent =
        !(report.closed_up_to_k && report.redundant_up_to_k && !report.is_letter_star);
    return report;
}

}  // namespace aplang
