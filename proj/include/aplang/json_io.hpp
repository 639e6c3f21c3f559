// json_io.hpp - JSON and TSV wire formats for every value the CLI reads
// or writes. Serialization uses ordered maps and sorted content throughout
// so identical inputs always produce identical bytes.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aplang/automaton.hpp"
#include "aplang/contextual.hpp"
#include "aplang/decide.hpp"
#include "aplang/decision.hpp"
#include "aplang/error.hpp"
#include "aplang/sequence.hpp"

namespace aplang {

using json = nlohmann::ordered_json;

namespace detail {

inline char single_char(const json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().size() != 1)
        throw Error(errc::bad_format, std::string(what) + " must be a single-character string");
    return j.get<std::string>().front();
}

inline std::string word_field(const json& j, const char* what) {
    if (!j.is_string())
        throw Error(errc::bad_format, std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline const json& required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(errc::bad_format, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace detail

inline json alphabet_to_json(const Alphabet& a) {
    json letters = json::array();
    for (char c : a) letters.push_back(std::string(1, c));
    return letters;
}

inline Alphabet alphabet_from_json(const json& j) {
    if (!j.is_array()) throw Error(errc::bad_format, "\"alphabet\" must be an array");
    std::string letters;
    for (const json& item : j) letters += detail::single_char(item, "alphabet entry");
    return Alphabet(letters);
}

// {"alphabet":["a","b"],"states":3,"initial":[0],"accepting":[2],
//  "transitions":[[0,"a",1],[1,"b",2]]}
inline json automaton_to_json(const Automaton& a) {
    json j;
    j["alphabet"] = alphabet_to_json(a.alphabet());
    j["states"] = a.state_count();
    j["initial"] = a.initial();
    j["accepting"] = a.accepting();
    json transitions = json::array();
    for (const Transition& t : a.transitions())
        transitions.push_back(json::array({t.from, std::string(1, t.letter), t.to}));
    j["transitions"] = transitions;
    return j;
}

inline Automaton automaton_from_json(const json& j) {
    Alphabet alphabet = alphabet_from_json(detail::required(j, "alphabet"));
    const json& states = detail::required(j, "states");
    if (!states.is_number_integer())
        throw Error(errc::bad_format, "\"states\" must be an integer");
    auto state_list = [&](const char* key) {
        const json& field = detail::required(j, key);
        if (!field.is_array())
            throw Error(errc::bad_format, std::string("\"") + key + "\" must be an array");
        std::vector<int> out;
        for (const json& item : field) {
            if (!item.is_number_integer())
                throw Error(errc::bad_format, std::string("\"") + key + "\" entries must be integers");
            out.push_back(item.get<int>());
        }
        return out;
    };
    const json& trans = detail::required(j, "transitions");
    if (!trans.is_array()) throw Error(errc::bad_format, "\"transitions\" must be an array");
    std::vector<Transition> transitions;
    for (const json& item : trans) {
        if (!item.is_array() || item.size() != 3)
            throw Error(errc::bad_format, "each transition must be [from, letter, to]");
        if (!item[0].is_number_integer() || !item[2].is_number_integer())
            throw Error(errc::bad_format, "transition endpoints must be integers");
        transitions.push_back({item[0].get<int>(), detail::single_char(item[1], "transition letter"),
                               item[2].get<int>()});
    }
    return Automaton(std::move(alphabet), states.get<int>(), state_list("initial"),
                     state_list("accepting"), std::move(transitions));
}

// {"alphabet":[...],"base":["ab"],"contexts":[["a","b"]],"mode":"internal",
//  "selector":null | {"0": <automaton>}}
inline json grammar_to_json(const ContextualGrammar& g) {
    json j;
    j["alphabet"] = alphabet_to_json(g.alphabet());
    j["base"] = g.base();
    json contexts = json::array();
    for (const Context& c : g.contexts()) contexts.push_back(json::array({c.left, c.right}));
    j["contexts"] = contexts;
    j["mode"] = grammar_mode_name(g.mode());
    if (g.selector().empty()) {
        j["selector"] = nullptr;
    } else {
        json selector = json::object();
        for (const auto& [index, automaton] : g.selector())
            selector[std::to_string(index)] = automaton_to_json(automaton);
        j["selector"] = selector;
    }
    return j;
}

inline ContextualGrammar grammar_from_json(const json& j) {
    Alphabet alphabet = alphabet_from_json(detail::required(j, "alphabet"));
    const json& base_field = detail::required(j, "base");
    if (!base_field.is_array()) throw Error(errc::bad_format, "\"base\" must be an array");
    std::vector<Word> base;
    for (const json& item : base_field) base.push_back(detail::word_field(item, "base word"));
    const json& ctx_field = detail::required(j, "contexts");
    if (!ctx_field.is_array()) throw Error(errc::bad_format, "\"contexts\" must be an array");
    std::vector<Context> contexts;
    for (const json& item : ctx_field) {
        if (!item.is_array() || item.size() != 2)
            throw Error(errc::bad_format, "each context must be [left, right]");
        contexts.push_back({detail::word_field(item[0], "context side"),
                            detail::word_field(item[1], "context side")});
    }
    std::string mode_name = detail::word_field(detail::required(j, "mode"), "\"mode\"");
    GrammarMode mode;
    if (mode_name == "external")
        mode = GrammarMode::external;
    else if (mode_name == "internal")
        mode = GrammarMode::internal;
    else
        throw Error(errc::bad_format, "\"mode\" must be \"external\" or \"internal\"");
    std::map<int, Automaton> selector;
    if (j.contains("selector") && !j.at("selector").is_null()) {
        const json& sel = j.at("selector");
        if (!sel.is_object()) throw Error(errc::bad_format, "\"selector\" must be null or an object");
        for (const auto& [key, value] : sel.items()) {
            int index = 0;
            try {
                index = std::stoi(key);
            } catch (const std::exception&) {
                throw Error(errc::bad_format, "selector keys must be context indices");
            }
            selector.emplace(index, automaton_from_json(value));
        }
    }
    return ContextualGrammar(std::move(alphabet), std::move(base), std::move(contexts), mode,
                             std::move(selector));
}

// {"verdict":"YES","status":"BOUNDED","bound":6,"witness":"ab","notes":[...]}
// A two-word witness or counterexample is emitted as a two-element array.
inline json decision_to_json(const Decision& d) {
    json j;
    j["verdict"] = verdict_name(d.verdict);
    j["status"] = status_name(d.status);
    if (d.status == Status::bounded && d.bound) j["bound"] = *d.bound;
    auto words_field = [](const std::vector<Word>& words) -> json {
        if (words.size() == 1) return words.front();
        json arr = json::array();
        for (const Word& w : words) arr.push_back(w);
        return arr;
    };
    if (!d.witness.empty()) j["witness"] = words_field(d.witness);
    if (!d.counterexample.empty()) j["counterexample"] = words_field(d.counterexample);
    j["notes"] = d.notes;
    return j;
}

inline json pumping_witness_to_json(const PumpingWitness& p) {
    json j;
    j["word"] = p.w;
    j["cycle_states"] = p.cycle_states;
    j["entry_path_len"] = p.entry_path_len;
    return j;
}

inline json recurrence_report_to_json(const RecurrenceReport& r) {
    json j;
    j["n"] = r.n;
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = "UNBOUNDED_IN_PREFIX";
    j["prefix_len"] = r.prefix_len;
    j["exactness"] = exactness_name(r.exactness);
    return j;
}

// TSV table with the canonical column set, one row per report.
inline std::string recurrence_table_tsv(const std::vector<RecurrenceReport>& rows) {
    std::string out = "n\tvalue\tprefix_len\texactness\n";
    for (const RecurrenceReport& r : rows) {
        out += std::to_string(r.n);
        out += '\t';
        out += r.value ? std::to_string(*r.value) : std::string("UNBOUNDED_IN_PREFIX");
        out += '\t';
        out += std::to_string(r.prefix_len);
        out += '\t';
        out += exactness_name(r.exactness);
        out += '\n';
    }
    return out;
}

inline json generation_report_to_json(const GenerationReport& r) {
    json j;
    j["max_len"] = r.max_len;
    j["truncated"] = r.truncated;
    j["count"] = r.words.size();
    j["words"] = r.words;
    return j;
}

inline json letter_star_audit_to_json(const LetterStarAudit& r) {
    json j;
    j["max_len"] = r.max_len;
    j["k"] = r.k;
    j["word_count"] = r.word_count;
    j["generation_truncated"] = r.generation_truncated;
    j["closed_up_to_k"] = r.closed_up_to_k;
    j["redundant_up_to_k"] = r.redundant_up_to_k;
    j["redundancy_vacuous"] = r.redundancy_vacuous;
    j["is_letter_star"] = r.is_letter_star;
    if (r.letter) j["letter"] = std::string(1, *r.letter);
    j["consistent"] = r.consistent;
    if (r.closure_gap) j["closure_gap"] = *r.closure_gap;
    if (r.redundancy_gap)
        j["redundancy_gap"] = json::array({r.redundancy_gap->first, r.redundancy_gap->second});
    j["growth_warning"] = r.growth_warning;
    return j;
}

// {"kind":"periodic","word":"ab"} or
// {"kind":"morphic","alphabet":["0","1"],"images":{"0":"01","1":"10"},"seed":"0"}
inline SequenceSpec sequence_spec_from_json(const json& j) {
    std::string kind = detail::word_field(detail::required(j, "kind"), "\"kind\"");
    if (kind == "periodic")
        return SequenceSpec::periodic(detail::word_field(detail::required(j, "word"), "\"word\""));
    if (kind != "morphic")
        throw Error(errc::bad_format, "\"kind\" must be \"periodic\" or \"morphic\"");
    Alphabet alphabet = alphabet_from_json(detail::required(j, "alphabet"));
    const json& images_field = detail::required(j, "images");
    if (!images_field.is_object()) throw Error(errc::bad_format, "\"images\" must be an object");
    std::map<char, Word> images;
    for (const auto& [key, value] : images_field.items()) {
        if (key.size() != 1)
            throw Error(errc::bad_format, "image keys must be single letters");
        images[key.front()] = detail::word_field(value, "image");
    }
    char seed = detail::single_char(detail::required(j, "seed"), "\"seed\"");
    return SequenceSpec::morphic_fixed_point(Morphism(std::move(alphabet), std::move(images)), seed);
}

inline json sequence_spec_to_json(const SequenceSpec& s) {
    json j;
    if (s.kind() == SequenceSpec::Kind::periodic) {
        j["kind"] = "periodic";
        j["word"] = s.period();
        return j;
    }
    j["kind"] = "morphic";
    j["alphabet"] = alphabet_to_json(s.morphism().alphabet());
    json images = json::object();
    for (const auto& [c, image] : s.morphism().images()) images[std::string(1, c)] = image;
    j["images"] = images;
    j["seed"] = std::string(1, s.seed());
    return j;
}

}  // namespace aplang
