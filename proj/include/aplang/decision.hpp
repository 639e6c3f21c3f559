// decision.hpp - the common result record for every decision procedure.
// A Decision carries the verdict, whether it is exact or only certified up
// to a bound, the witness or counterexample words, and free-form notes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aplang/alphabet.hpp"

namespace aplang {

enum class Verdict { yes, no };

// exact: the answer holds for the whole language.
// bounded: the answer was only verified up to the stated bound.
enum class Status { exact, bounded };

struct Decision {
    Verdict verdict = Verdict::no;
    Status status = Status::exact;
    std::optional<int> bound;            // set when status is bounded
    std::vector<Word> witness;           // words supporting a YES
    std::vector<Word> counterexample;    // words refuting, on NO
    std::vector<std::string> notes;

    bool yes() const { return verdict == Verdict::yes; }
};

inline std::string verdict_name(Verdict v) { return v == Verdict::yes ? "YES" : "NO"; }

inline std::string status_name(Status s) { return s == Status::exact ? "EXACT" : "BOUNDED"; }

}  // namespace aplang
