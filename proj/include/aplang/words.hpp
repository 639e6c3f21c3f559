// words.hpp - combinatorics on finite words: borders, primitive roots,
// commutation, the factor relation
#pragma once

#include <string>
#include <vector>

#include "aplang/alphabet.hpp"
#include "aplang/error.hpp"

namespace aplang {

// Decomposition w = root^exponent with a primitive root (a word that is
// not a proper power) and maximal exponent.
struct RootDecomposition {
    Word root;
    int exponent = 0;
};

// border[i] = length of the longest proper border (prefix that is also a
// suffix) of w[0..i). border[0] = 0 by convention. This is the classic
// failure function.
inline std::vector<int> border_table(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> border(static_cast<std::size_t>(n) + 1, 0);
    int k = 0;
    for (int i = 1; i < n; ++i) {
        while (k > 0 && w[static_cast<std::size_t>(k)] != w[static_cast<std::size_t>(i)])
            k = border[static_cast<std::size_t>(k)];
        if (w[static_cast<std::size_t>(k)] == w[static_cast<std::size_t>(i)]) ++k;
        border[static_cast<std::size_t>(i) + 1] = k;
    }
    return border;
}

// Smallest period of w, via |w| minus the longest border length.
inline int smallest_period(const Word& w) {
    if (w.empty()) throw Error(errc::empty_word, "smallest_period of the empty word");
    const int n = static_cast<int>(w.size());
    return n - border_table(w)[static_cast<std::size_t>(n)];
}

// Unique primitive root and maximal exponent. The smallest period p yields
// the root iff p divides |w|; otherwise w itself is primitive.
inline RootDecomposition primitive_root(const Word& w) {
    if (w.empty()) throw Error(errc::empty_word, "primitive_root of the empty word");
    const int n = static_cast<int>(w.size());
    const int p = smallest_period(w);
    if (n % p == 0) return {w.substr(0, static_cast<std::size_t>(p)), n / p};
    return {w, 1};
}

inline bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

// uv == vu. Nonempty solutions are exactly the pairs of powers of one
// common primitive word.
inline bool commute(const Word& u, const Word& v) { return u + v == v + u; }

// Contiguous-factor relation: true iff x occurs as a block of y. The empty
// word is a factor of everything.
inline bool is_factor(const Word& x, const Word& y) { return y.find(x) != Word::npos; }

inline bool is_prefix(const Word& x, const Word& y) {
    return x.size() <= y.size() && y.compare(0, x.size(), x) == 0;
}

inline bool is_suffix(const Word& x, const Word& y) {
    return x.size() <= y.size() && y.compare(y.size() - x.size(), x.size(), x) == 0;
}

// All prefixes of w from lambda up to w itself, shortest first.
inline std::vector<Word> prefixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size() + 1);
    for (std::size_t len = 0; len <= w.size(); ++len) out.push_back(w.substr(0, len));
    return out;
}

// All suffixes of w from lambda up to w itself, shortest first.
inline std::vector<Word> suffixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size() + 1);
    for (std::size_t len = 0; len <= w.size(); ++len) out.push_back(w.substr(w.size() - len));
    return out;
}

// w repeated end to end until the result has the requested length.
inline Word repeat_to_length(const Word& w, int length) {
    if (length < 0) throw Error(errc::invalid_argument, "negative length");
    if (w.empty()) {
        if (length == 0) return {};
        throw Error(errc::empty_period, "cannot repeat the empty word");
    }
    Word out;
    out.reserve(static_cast<std::size_t>(length));
    while (static_cast<int>(out.size()) < length) out += w;
    out.resize(static_cast<std::size_t>(length));
    return out;
}

// Does x occur as a factor of the one-sided infinite word w^omega?
// Any occurrence starts within the first |w| positions, so a prefix of
// length |w| + |x| is enough to decide.
inline bool occurs_in_power(const Word& x, const Word& w) {
    if (x.empty()) return true;
    if (w.empty()) return false;
    return is_factor(x, repeat_to_length(w, static_cast<int>(w.size() + x.size())));
}

}  // namespace aplang
