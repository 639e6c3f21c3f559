// regex.hpp - a deliberately small regular-expression dialect for typing
// research-scale languages on the command line.
//
// Grammar:   union:  concat ('|' concat)*
//            concat: star+
//            star:   atom '*'?
//            atom:   letter | '(' union ')' | '()' | '[]'
// '()' denotes the empty word, '[]' the empty set; whitespace is ignored.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aplang/alphabet.hpp"
#include "aplang/automaton.hpp"
#include "aplang/error.hpp"

namespace aplang {

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
    enum class Kind { empty_set, epsilon, literal, concat, alternation, star };

    Kind kind;
    char letter = 0;                // literal
    std::vector<RegexPtr> children;  // concat, alternation, star (one child)

    static RegexPtr empty_set() {
        return std::make_shared<RegexNode>(RegexNode{Kind::empty_set, 0, {}});
    }
    static RegexPtr epsilon() {
        return std::make_shared<RegexNode>(RegexNode{Kind::epsilon, 0, {}});
    }
    static RegexPtr literal(char c) {
        return std::make_shared<RegexNode>(RegexNode{Kind::literal, c, {}});
    }
    static RegexPtr concat(std::vector<RegexPtr> parts) {
        return std::make_shared<RegexNode>(RegexNode{Kind::concat, 0, std::move(parts)});
    }
    static RegexPtr alternation(std::vector<RegexPtr> parts) {
        return std::make_shared<RegexNode>(RegexNode{Kind::alternation, 0, std::move(parts)});
    }
    static RegexPtr star(RegexPtr child) {
        return std::make_shared<RegexNode>(RegexNode{Kind::star, 0, std::vector<RegexPtr>{std::move(child)}});
    }
};

namespace detail {

class RegexParser {
public:
    RegexParser(const std::string& text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    RegexPtr parse() {
        RegexPtr r = parse_union();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(errc::parse_error, what + " at position " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    RegexPtr parse_union() {
        std::vector<RegexPtr> parts{parse_concat()};
        while (consume('|')) parts.push_back(parse_concat());
        return parts.size() == 1 ? parts.front() : RegexNode::alternation(std::move(parts));
    }

    RegexPtr parse_concat() {
        std::vector<RegexPtr> parts;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') break;
            parts.push_back(parse_star());
        }
        if (parts.empty()) fail("expected an atom");
        return parts.size() == 1 ? parts.front() : RegexNode::concat(std::move(parts));
    }

    RegexPtr parse_star() {
        RegexPtr atom = parse_atom();
        if (consume('*')) return RegexNode::star(std::move(atom));
        return atom;
    }

    RegexPtr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected an atom");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            if (consume(')')) return RegexNode::epsilon();
            RegexPtr inner = parse_union();
            if (!consume(')')) fail("missing ')'");
            return inner;
        }
        if (c == '[') {
            ++pos_;
            if (!consume(']')) fail("expected ']'");
            return RegexNode::empty_set();
        }
        if (c == '*' || c == ')' || c == ']' || c == '|') fail("unexpected character");
        if (!alphabet_.contains(c))
            throw Error(errc::letter_not_in_alphabet,
                        std::string("letter '") + c + "' at position " + std::to_string(pos_));
        ++pos_;
        return RegexNode::literal(c);
    }

    const std::string& text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RegexPtr parse_regex(const std::string& text, const Alphabet& alphabet) {
    if (text.empty()) throw Error(errc::parse_error, "empty pattern");
    return detail::RegexParser(text, alphabet).parse();
}

// Compositional automaton construction over the epsilon-free combinators.
inline Automaton regex_to_automaton(const RegexPtr& r, const Alphabet& alphabet) {
    if (!r) throw Error(errc::invalid_argument, "null syntax tree");
    switch (r->kind) {
        case RegexNode::Kind::empty_set:
            return Automaton(alphabet, 0, {}, {}, {});
        case RegexNode::Kind::epsilon:
            return word_automaton(alphabet, Word{});
        case RegexNode::Kind::literal:
            return word_automaton(alphabet, Word(1, r->letter));
        case RegexNode::Kind::concat: {
            Automaton acc = regex_to_automaton(r->children.front(), alphabet);
            for (std::size_t i = 1; i < r->children.size(); ++i)
                acc = concatenate(acc, regex_to_automaton(r->children[i], alphabet));
            return acc;
        }
        case RegexNode::Kind::alternation: {
            Automaton acc = regex_to_automaton(r->children.front(), alphabet);
            for (std::size_t i = 1; i < r->children.size(); ++i)
                acc = unite(acc, regex_to_automaton(r->children[i], alphabet));
            return acc;
        }
        case RegexNode::Kind::star:
            return star(regex_to_automaton(r->children.front(), alphabet));
    }
    throw Error(errc::invalid_argument, "corrupt syntax tree");
}

inline Automaton compile_regex(const std::string& text, const Alphabet& alphabet) {
    return regex_to_automaton(parse_regex(text, alphabet), alphabet);
}

}  // namespace aplang
