// automaton.hpp - nondeterministic finite automata over character
// alphabets, with the decision toolbox built on top: trimming, canonical
// determinization + minimization, equivalence, emptiness, finiteness,
// boolean operations, and shortlex enumeration.
//
// Automata are immutable values; every operation is a pure function of its
// inputs, so concurrent use needs no locking.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "aplang/alphabet.hpp"
#include "aplang/error.hpp"
#include "aplang/words.hpp"

namespace aplang {

struct Transition {
    int from = 0;
    char letter = 0;
    int to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

// NFA with dense integer states. Multiple initial states are allowed and
// there are no epsilon transitions. The zero-state automaton is the
// canonical acceptor of the empty language.
class Automaton {
public:
    Automaton() = default;

    Automaton(Alphabet alphabet, int state_count, std::vector<int> initial,
              std::vector<int> accepting, std::vector<Transition> transitions)
        : alphabet_(std::move(alphabet)),
          state_count_(state_count),
          initial_(std::move(initial)),
          accepting_(std::move(accepting)),
          transitions_(std::move(transitions)) {
        if (state_count_ < 0)
            throw Error(errc::invalid_automaton, "negative state count");
        normalize(initial_);
        normalize(accepting_);
        check_states(initial_);
        check_states(accepting_);
        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                           transitions_.end());
        delta_.assign(static_cast<std::size_t>(state_count_), {});
        for (const Transition& t : transitions_) {
            if (t.from < 0 || t.from >= state_count_ || t.to < 0 || t.to >= state_count_)
                throw Error(errc::invalid_automaton, "transition state out of range");
            if (!alphabet_.contains(t.letter))
                throw Error(errc::letter_not_in_alphabet,
                            std::string("transition letter '") + t.letter + "'");
            delta_[static_cast<std::size_t>(t.from)][t.letter].push_back(t.to);
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    const std::vector<int>& initial() const { return initial_; }
    const std::vector<int>& accepting() const { return accepting_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    bool is_accepting(int s) const {
        return std::binary_search(accepting_.begin(), accepting_.end(), s);
    }

    // Successors of a state on a letter (sorted, possibly empty).
    const std::vector<int>& next(int state, char letter) const {
        static const std::vector<int> none;
        const auto& row = delta_[static_cast<std::size_t>(state)];
        auto it = row.find(letter);
        return it == row.end() ? none : it->second;
    }

    bool operator==(const Automaton& other) const {
        return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
               initial_ == other.initial_ && accepting_ == other.accepting_ &&
               transitions_ == other.transitions_;
    }

private:
    static void normalize(std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    void check_states(const std::vector<int>& v) const {
        for (int s : v)
            if (s < 0 || s >= state_count_)
                throw Error(errc::invalid_automaton, "state index out of range");
    }

    Alphabet alphabet_;
    int state_count_ = 0;
    std::vector<int> initial_;
    std::vector<int> accepting_;
    std::vector<Transition> transitions_;
    std::vector<std::map<char, std::vector<int>>> delta_;
};

namespace detail {

inline void require_same_alphabet(const Automaton& a, const Automaton& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw Error(errc::alphabet_mismatch,
                    "'" + a.alphabet().letters() + "' vs '" + b.alphabet().letters() + "'");
}

inline std::vector<bool> reachable_states(const Automaton& a) {
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count()), false);
    std::deque<int> queue;
    for (int s : a.initial()) {
        seen[static_cast<std::size_t>(s)] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (const Transition& t : a.transitions()) {
            if (t.from == s && !seen[static_cast<std::size_t>(t.to)]) {
                seen[static_cast<std::size_t>(t.to)] = true;
                queue.push_back(t.to);
            }
        }
    }
    return seen;
}

inline std::vector<bool> coreachable_states(const Automaton& a) {
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count()), false);
    std::deque<int> queue;
    for (int s : a.accepting()) {
        seen[static_cast<std::size_t>(s)] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (const Transition& t : a.transitions()) {
            if (t.to == s && !seen[static_cast<std::size_t>(t.from)]) {
                seen[static_cast<std::size_t>(t.from)] = true;
                queue.push_back(t.from);
            }
        }
    }
    return seen;
}

}  // namespace detail

// States that lie on some initial-to-accepting path.
struct TrimInfo {
    std::vector<int> useful;
};

inline TrimInfo compute_trim_info(const Automaton& a) {
    auto reach = detail::reachable_states(a);
    auto coreach = detail::coreachable_states(a);
    TrimInfo info;
    for (int s = 0; s < a.state_count(); ++s)
        if (reach[static_cast<std::size_t>(s)] && coreach[static_cast<std::size_t>(s)])
            info.useful.push_back(s);
    return info;
}

// Restricts to useful states, renumbering densely in ascending order.
// Preserves the language; the result may have zero states.
inline Automaton trim(const Automaton& a) {
    TrimInfo info = compute_trim_info(a);
    std::vector<int> renumber(static_cast<std::size_t>(a.state_count()), -1);
    for (std::size_t i = 0; i < info.useful.size(); ++i)
        renumber[static_cast<std::size_t>(info.useful[i])] = static_cast<int>(i);

    auto keep = [&](int s) { return renumber[static_cast<std::size_t>(s)] >= 0; };
    std::vector<int> initial, accepting;
    std::vector<Transition> transitions;
    for (int s : a.initial())
        if (keep(s)) initial.push_back(renumber[static_cast<std::size_t>(s)]);
    for (int s : a.accepting())
        if (keep(s)) accepting.push_back(renumber[static_cast<std::size_t>(s)]);
    for (const Transition& t : a.transitions())
        if (keep(t.from) && keep(t.to))
            transitions.push_back({renumber[static_cast<std::size_t>(t.from)], t.letter,
                                   renumber[static_cast<std::size_t>(t.to)]});
    return Automaton(a.alphabet(), static_cast<int>(info.useful.size()), std::move(initial),
                     std::move(accepting), std::move(transitions));
}

// Membership by direct subset simulation; the reference path used by the
// brute-force oracles, independent of determinization.
inline bool accepts(const Automaton& a, const Word& w) {
    std::set<int> current(a.initial().begin(), a.initial().end());
    for (char c : w) {
        if (!a.alphabet().contains(c)) return false;
        std::set<int> next;
        for (int s : current)
            for (int t : a.next(s, c)) next.insert(t);
        current.swap(next);
        if (current.empty()) return false;
    }
    return std::any_of(current.begin(), current.end(), [&](int s) { return a.is_accepting(s); });
}

inline bool is_empty(const Automaton& a) { return compute_trim_info(a).useful.empty(); }

// True iff the accepted set is finite: no cycle survives trimming.
inline bool is_finite(const Automaton& a) {
    Automaton t = trim(a);
    const int n = t.state_count();
    // Iterative DFS with colors; a back edge is a pumpable cycle.
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (const Transition& tr : t.transitions()) succ[static_cast<std::size_t>(tr.from)].push_back(tr.to);
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        color[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [s, idx] = stack.back();
            if (idx < succ[static_cast<std::size_t>(s)].size()) {
                int to = succ[static_cast<std::size_t>(s)][idx++];
                if (color[static_cast<std::size_t>(to)] == 1) return false;
                if (color[static_cast<std::size_t>(to)] == 0) {
                    color[static_cast<std::size_t>(to)] = 1;
                    stack.push_back({to, 0});
                }
            } else {
                color[static_cast<std::size_t>(s)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// Canonical minimal complete DFA: subset construction (with the empty
// subset as sink), Moore partition refinement, then breadth-first
// renumbering in alphabet order. Equal languages over the same alphabet
// produce structurally identical automata, so canonical forms decide
// equivalence and make every report reproducible bit for bit.
inline Automaton determinize_minimize(const Automaton& a) {
    const Alphabet& alphabet = a.alphabet();
    const int k = alphabet.size();

    // Subset construction; subsets discovered breadth-first in alphabet order.
    std::map<std::vector<int>, int> subset_id;
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<int>> dtrans;  // dtrans[state][letter index]
    std::vector<bool> daccept;

    auto intern = [&](std::vector<int> subset) {
        auto [it, inserted] = subset_id.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
        if (inserted) {
            subsets.push_back(it->first);
            dtrans.emplace_back(static_cast<std::size_t>(k), -1);
            bool acc = std::any_of(it->first.begin(), it->first.end(),
                                   [&](int s) { return a.is_accepting(s); });
            daccept.push_back(acc);
        }
        return it->second;
    };

    std::vector<int> start(a.initial());
    int start_id = intern(std::move(start));
    for (int s = 0; s < static_cast<int>(subsets.size()); ++s) {
        for (int ci = 0; ci < k; ++ci) {
            char c = alphabet.letter(ci);
            std::set<int> next_set;
            for (int q : subsets[static_cast<std::size_t>(s)])
                for (int t : a.next(q, c)) next_set.insert(t);
            int to = intern(std::vector<int>(next_set.begin(), next_set.end()));
            dtrans[static_cast<std::size_t>(s)][static_cast<std::size_t>(ci)] = to;
        }
    }

    // Moore refinement to the coarsest stable partition.
    const int m = static_cast<int>(subsets.size());
    std::vector<int> cls(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) cls[static_cast<std::size_t>(s)] = daccept[static_cast<std::size_t>(s)] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_id;
        std::vector<int> next_cls(static_cast<std::size_t>(m));
        for (int s = 0; s < m; ++s) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(k) + 1);
            sig.push_back(cls[static_cast<std::size_t>(s)]);
            for (int ci = 0; ci < k; ++ci)
                sig.push_back(cls[static_cast<std::size_t>(
                    dtrans[static_cast<std::size_t>(s)][static_cast<std::size_t>(ci)])]);
            auto [it, _] = sig_id.try_emplace(std::move(sig), static_cast<int>(sig_id.size()));
            next_cls[static_cast<std::size_t>(s)] = it->second;
        }
        if (next_cls == cls) break;
        cls = std::move(next_cls);
    }

    // Breadth-first canonical numbering of the quotient from the start class.
    std::vector<int> canon(static_cast<std::size_t>(m), -1);
    std::vector<int> order;  // quotient representatives in canonical order
    std::deque<int> queue;
    auto visit = [&](int rep_subset) {
        int c = cls[static_cast<std::size_t>(rep_subset)];
        for (int s : order)
            if (cls[static_cast<std::size_t>(s)] == c) return;  // class already numbered
        order.push_back(rep_subset);
        queue.push_back(rep_subset);
    };
    visit(start_id);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int ci = 0; ci < k; ++ci)
            visit(dtrans[static_cast<std::size_t>(s)][static_cast<std::size_t>(ci)]);
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        canon[static_cast<std::size_t>(cls[static_cast<std::size_t>(order[i])])] = static_cast<int>(i);

    std::vector<int> accepting;
    std::vector<Transition> transitions;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int rep = order[i];
        if (daccept[static_cast<std::size_t>(rep)]) accepting.push_back(static_cast<int>(i));
        for (int ci = 0; ci < k; ++ci) {
            int to = dtrans[static_cast<std::size_t>(rep)][static_cast<std::size_t>(ci)];
            transitions.push_back({static_cast<int>(i), alphabet.letter(ci),
                                   canon[static_cast<std::size_t>(cls[static_cast<std::size_t>(to)])]});
        }
    }
    return Automaton(alphabet, static_cast<int>(order.size()), {0}, std::move(accepting),
                     std::move(transitions));
}

// Equality of languages, decided by comparing canonical minimal forms.
inline bool are_equivalent(const Automaton& a, const Automaton& b) {
    detail::require_same_alphabet(a, b);
    return determinize_minimize(a) == determinize_minimize(b);
}

// Product automaton for the intersection of two languages.
inline Automaton intersect(const Automaton& a, const Automaton& b) {
    detail::require_same_alphabet(a, b);
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> pairs;
    std::deque<int> queue;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, inserted] = id.try_emplace(p, static_cast<int>(pairs.size()));
        if (inserted) {
            pairs.push_back(p);
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (int sa : a.initial())
        for (int sb : b.initial()) intern({sa, sb});
    std::vector<int> initial;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) initial.push_back(i);

    std::vector<Transition> transitions;
    std::vector<int> accepting;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        auto [sa, sb] = pairs[static_cast<std::size_t>(s)];
        if (a.is_accepting(sa) && b.is_accepting(sb)) accepting.push_back(s);
        for (char c : a.alphabet())
            for (int ta : a.next(sa, c))
                for (int tb : b.next(sb, c))
                    transitions.push_back({s, c, intern({ta, tb})});
    }
    return Automaton(a.alphabet(), static_cast<int>(pairs.size()), std::move(initial),
                     std::move(accepting), std::move(transitions));
}

// Disjoint union of two automata; accepts the union of the languages.
inline Automaton unite(const Automaton& a, const Automaton& b) {
    detail::require_same_alphabet(a, b);
    const int shift = a.state_count();
    std::vector<int> initial(a.initial());
    std::vector<int> accepting(a.accepting());
    std::vector<Transition> transitions(a.transitions());
    for (int s : b.initial()) initial.push_back(s + shift);
    for (int s : b.accepting()) accepting.push_back(s + shift);
    for (const Transition& t : b.transitions())
        transitions.push_back({t.from + shift, t.letter, t.to + shift});
    return Automaton(a.alphabet(), a.state_count() + b.state_count(), std::move(initial),
                     std::move(accepting), std::move(transitions));
}

// Complement w.r.t. the automaton's own alphabet, via the canonical
// complete DFA with accepting states flipped.
inline Automaton complement(const Automaton& a) {
    Automaton d = determinize_minimize(a);
    std::vector<int> accepting;
    for (int s = 0; s < d.state_count(); ++s)
        if (!d.is_accepting(s)) accepting.push_back(s);
    return Automaton(d.alphabet(), d.state_count(), d.initial(), std::move(accepting),
                     d.transitions());
}

inline bool accepts_empty_word(const Automaton& a) {
    return std::any_of(a.initial().begin(), a.initial().end(),
                       [&](int s) { return a.is_accepting(s); });
}

// Chain acceptor of the single word w (accepts {w}; {λ} when w is empty).
inline Automaton word_automaton(const Alphabet& alphabet, const Word& w) {
    if (!alphabet.contains_all(w))
        throw Error(errc::letter_not_in_alphabet, "word uses letters outside the alphabet");
    const int n = static_cast<int>(w.size());
    std::vector<Transition> transitions;
    for (int i = 0; i < n; ++i)
        transitions.push_back({i, w[static_cast<std::size_t>(i)], i + 1});
    return Automaton(alphabet, n + 1, {0}, {n}, std::move(transitions));
}

// Epsilon-free concatenation: bridge transitions jump from accepting
// states of a into b just after b's initial states.
inline Automaton concatenate(const Automaton& a, const Automaton& b) {
    detail::require_same_alphabet(a, b);
    const int shift = a.state_count();
    std::vector<int> initial(a.initial());
    if (accepts_empty_word(a))
        for (int s : b.initial()) initial.push_back(s + shift);
    std::vector<int> accepting;
    for (int s : b.accepting()) accepting.push_back(s + shift);
    if (accepts_empty_word(b))
        for (int s : a.accepting()) accepting.push_back(s);
    std::vector<Transition> transitions(a.transitions());
    for (const Transition& t : b.transitions()) {
        transitions.push_back({t.from + shift, t.letter, t.to + shift});
        if (std::binary_search(b.initial().begin(), b.initial().end(), t.from))
            for (int f : a.accepting())
                transitions.push_back({f, t.letter, t.to + shift});
    }
    return Automaton(a.alphabet(), a.state_count() + b.state_count(), std::move(initial),
                     std::move(accepting), std::move(transitions));
}

// Epsilon-free Kleene star: loop-back edges restart the machine whenever a
// word of L completes, and a fresh isolated state accepts the empty word.
inline Automaton star(const Automaton& a) {
    const int fresh = a.state_count();
    std::vector<int> initial(a.initial());
    initial.push_back(fresh);
    std::vector<int> accepting(a.accepting());
    accepting.push_back(fresh);
    std::vector<Transition> transitions(a.transitions());
    for (const Transition& t : a.transitions())
        if (a.is_accepting(t.to))
            for (int i : a.initial())
                transitions.push_back({t.from, t.letter, i});
    return Automaton(a.alphabet(), fresh + 1, std::move(initial), std::move(accepting),
                     std::move(transitions));
}

// Accepted words in shortlex order, cut off at max_len / max_count.
// Works on the trimmed canonical DFA so every explored prefix extends to
// some accepted word.
inline std::vector<Word> enumerate_shortlex(const Automaton& a, int max_len, int max_count) {
    if (max_len < 0) throw Error(errc::invalid_argument, "max_len must be >= 0");
    std::vector<Word> out;
    if (max_count <= 0) return out;
    Automaton d = trim(determinize_minimize(a));
    if (d.state_count() == 0) return out;
    const Alphabet& alphabet = d.alphabet();

    std::vector<std::pair<Word, int>> layer;
    for (int s : d.initial()) layer.push_back({Word{}, s});
    for (int len = 0; len <= max_len && !layer.empty(); ++len) {
        for (const auto& [w, s] : layer) {
            if (d.is_accepting(s)) {
                out.push_back(w);
                if (static_cast<int>(out.size()) >= max_count) return out;
            }
        }
        if (len == max_len) break;
        std::vector<std::pair<Word, int>> next_layer;
        for (const auto& [w, s] : layer) {
            for (int ci = 0; ci < alphabet.size(); ++ci) {
                char c = alphabet.letter(ci);
                const auto& succ = d.next(s, c);
                if (!succ.empty()) next_layer.push_back({w + c, succ.front()});
            }
        }
        layer.swap(next_layer);
    }
    return out;
}

// Shortlex-least accepted word, if any. Breadth-first over subsets with
// letters taken in alphabet order, so the first accepting subset found is
// reached by the least word.
inline std::optional<Word> shortlex_least_word(const Automaton& a) {
    const Alphabet& alphabet = a.alphabet();
    std::set<std::vector<int>> seen;
    std::deque<std::pair<std::vector<int>, Word>> queue;
    std::vector<int> start(a.initial());
    auto accepting_subset = [&](const std::vector<int>& subset) {
        return std::any_of(subset.begin(), subset.end(), [&](int s) { return a.is_accepting(s); });
    };
    if (accepting_subset(start)) return Word{};
    seen.insert(start);
    queue.push_back({start, Word{}});
    while (!queue.empty()) {
        auto [subset, word] = std::move(queue.front());
        queue.pop_front();
        for (int ci = 0; ci < alphabet.size(); ++ci) {
            char c = alphabet.letter(ci);
            std::set<int> next_set;
            for (int s : subset)
                for (int t : a.next(s, c)) next_set.insert(t);
            std::vector<int> next(next_set.begin(), next_set.end());
            if (next.empty() || seen.count(next)) continue;
            Word next_word = word + c;
            if (accepting_subset(next)) return next_word;
            seen.insert(next);
            queue.push_back({std::move(next), std::move(next_word)});
        }
    }
    return std::nullopt;
}

// Shortlex-least word accepted by exactly one of the two automata.
inline std::optional<Word> shortlex_least_difference(const Automaton& a, const Automaton& b) {
    detail::require_same_alphabet(a, b);
    Automaton only_a = intersect(a, complement(b));
    Automaton only_b = intersect(b, complement(a));
    auto wa = shortlex_least_word(only_a);
    auto wb = shortlex_least_word(only_b);
    if (!wa) return wb;
    if (!wb) return wa;
    ShortlexLess less{&a.alphabet()};
    return less(*wa, *wb) ? wa : wb;
}

}  // namespace aplang
