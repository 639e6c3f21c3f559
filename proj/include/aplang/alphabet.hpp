// alphabet.hpp - finite character alphabets, words, and shortlex ordering
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aplang/error.hpp"

namespace aplang {

// A finite word over a character alphabet. The empty string denotes the
// empty word (lambda).
using Word = std::string;

// Ordered set of distinct single characters. The order of the letters is
// fixed at construction and defines the shortlex order used everywhere
// (enumeration, witnesses, tie-breaking).
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view letters) : letters_(letters) {
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            for (std::size_t j = i + 1; j < letters_.size(); ++j) {
                if (letters_[i] == letters_[j])
                    throw Error(errc::invalid_alphabet,
                                std::string("duplicate letter '") + letters_[i] + "'");
            }
        }
    }

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    bool contains(char c) const { return letters_.find(c) != std::string::npos; }

    bool contains_all(const Word& w) const {
        return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
    }

    // Position of a letter in the alphabet order.
    int index_of(char c) const {
        auto pos = letters_.find(c);
        if (pos == std::string::npos)
            throw Error(errc::letter_not_in_alphabet, std::string("letter '") + c + "'");
        return static_cast<int>(pos);
    }

    char letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }

    const std::string& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    bool operator==(const Alphabet& other) const = default;

private:
    std::string letters_;
};

// Derives an alphabet from the distinct letters of a word, in ascending
// character order so the result is canonical.
inline Alphabet alphabet_of(const Word& w) {
    std::set<char> distinct(w.begin(), w.end());
    return Alphabet(std::string(distinct.begin(), distinct.end()));
}

// Shortlex: shorter words first, equal lengths compared by alphabet order.
// Without an alphabet the per-letter comparison falls back to byte order.
struct ShortlexLess {
    const Alphabet* alphabet = nullptr;

    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        if (alphabet == nullptr) return a < b;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return alphabet->index_of(a[i]) < alphabet->index_of(b[i]);
        }
        return false;
    }
};

inline bool shortlex_less(const Word& a, const Word& b) { return ShortlexLess{}(a, b); }

// Human-readable rendering; the empty word prints as the lambda glyph.
inline std::string display_word(const Word& w) { return w.empty() ? std::string("λ") : w; }

}  // namespace aplang
