// error.hpp - error codes shared by the whole library
#pragma once

#include <stdexcept>
#include <string>

namespace aplang {

enum class errc {
    alphabet_mismatch,
    letter_not_in_alphabet,
    invalid_alphabet,
    invalid_automaton,
    empty_word,
    empty_period,
    finite_language,
    no_contexts,
    capacity_exceeded,
    parse_error,
    not_prolongable,
    factor_not_found,
    invalid_argument,
    bad_format,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::alphabet_mismatch: return "ALPHABET_MISMATCH";
        case errc::letter_not_in_alphabet: return "LETTER_NOT_IN_ALPHABET";
        case errc::invalid_alphabet: return "INVALID_ALPHABET";
        case errc::invalid_automaton: return "INVALID_AUTOMATON";
        case errc::empty_word: return "EMPTY_WORD";
        case errc::empty_period: return "EMPTY_PERIOD";
        case errc::finite_language: return "FINITE_LANGUAGE";
        case errc::no_contexts: return "NO_CONTEXTS";
        case errc::capacity_exceeded: return "CAPACITY";
        case errc::parse_error: return "PARSE_ERROR";
        case errc::not_prolongable: return "NOT_PROLONGABLE";
        case errc::factor_not_found: return "FACTOR_NOT_FOUND";
        case errc::invalid_argument: return "INVALID_ARGUMENT";
        case errc::bad_format: return "BAD_FORMAT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace aplang
