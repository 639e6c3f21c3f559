// aplang - command-line front end for the almost-periodicity toolbox.
// Every subcommand maps 1:1 to a library operation; this file only parses
// inputs, dispatches, and formats reports.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <aplang/aplang.hpp>

namespace {

using aplang::json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw aplang::Error(aplang::errc::bad_format, "cannot read file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw aplang::Error(aplang::errc::bad_format, "invalid JSON in " + origin);
    return j;
}

// Options shared by every subcommand that takes a regular language.
struct LanguageInput {
    std::string regex;
    std::string alphabet;
    std::string automaton_file;

    void attach(CLI::App* cmd) {
        auto* r = cmd->add_option("--regex", regex, "pattern over the declared alphabet");
        auto* a = cmd->add_option("--alphabet", alphabet, "alphabet letters, e.g. ab");
        auto* f = cmd->add_option("--automaton", automaton_file, "automaton JSON file");
        r->needs(a);
        r->excludes(f);
    }

    aplang::Automaton load(std::string& digest_payload) const {
        if (!automaton_file.empty()) {
            std::string text = read_file(automaton_file);
            digest_payload = "automaton:" + text;
            return aplang::automaton_from_json(parse_json_text(text, automaton_file));
        }
        if (regex.empty())
            throw aplang::Error(aplang::errc::invalid_argument,
                                "need --regex with --alphabet, or --automaton");
        digest_payload = "regex:" + regex + "\nalphabet:" + alphabet;
        return aplang::compile_regex(regex, aplang::Alphabet(alphabet));
    }
};

// Options shared by the sequence-lab subcommands.
struct SequenceInput {
    std::string periodic;
    bool use_thue_morse = false;
    std::string sequence_file;

    void attach(CLI::App* cmd) {
        auto* p = cmd->add_option("--periodic", periodic, "period word of a periodic sequence");
        auto* t = cmd->add_flag("--thue-morse", use_thue_morse, "use the Thue-Morse sequence");
        auto* f = cmd->add_option("--sequence", sequence_file, "sequence spec JSON file");
        p->excludes(t);
        p->excludes(f);
        t->excludes(f);
    }

    aplang::SequenceSpec load(std::string& digest_payload) const {
        if (use_thue_morse) {
            digest_payload = "sequence:thue-morse";
            return aplang::thue_morse();
        }
        if (!sequence_file.empty()) {
            std::string text = read_file(sequence_file);
            digest_payload = "sequence:" + text;
            return aplang::sequence_spec_from_json(parse_json_text(text, sequence_file));
        }
        if (periodic.empty())
            throw aplang::Error(aplang::errc::invalid_argument,
                                "need --periodic, --thue-morse, or --sequence");
        digest_payload = "sequence:periodic:" + periodic;
        return aplang::SequenceSpec::periodic(periodic);
    }
};

struct Output {
    bool as_json = false;
    std::string command;
    std::string digest_payload;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit(const json& result, const std::string& human) const {
        if (as_json) {
            json report;
            report["command"] = command;
            report["input_digest"] = fnv1a_hex(digest_payload);
            report["result"] = result;
            std::cout << report.dump(2) << "\n";
            return;
        }
        std::cout << human;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cout << "elapsed: " << elapsed << " ms\n";
    }
};

std::string decision_text(const aplang::Decision& d) {
    std::ostringstream out;
    out << aplang::verdict_name(d.verdict);
    out << "  [" << aplang::status_name(d.status);
    if (d.status == aplang::Status::bounded && d.bound) out << "(" << *d.bound << ")";
    out << "]\n";
    auto join = [](const std::vector<aplang::Word>& words) {
        std::string s;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) s += ", ";
            s += aplang::display_word(words[i]);
        }
        return s;
    };
    if (!d.witness.empty()) out << "witness: " << join(d.witness) << "\n";
    if (!d.counterexample.empty()) out << "counterexample: " << join(d.counterexample) << "\n";
    for (const std::string& note : d.notes) out << "note: " << note << "\n";
    return out.str();
}

void emit_decision(const Output& out, const aplang::Decision& d) {
    out.emit(aplang::decision_to_json(d), decision_text(d));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for almost periodic languages and sequences"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::function<void()> action;

    LanguageInput closed_in;
    auto* cmd_closed = app.add_subcommand("is-closed", "is the language closed under factors?");
    closed_in.attach(cmd_closed);
    cmd_closed->callback([&] {
        action = [&] {
            Output out{as_json, "is-closed"};
            aplang::Automaton a = closed_in.load(out.digest_payload);
            emit_decision(out, aplang::is_closed(a));
        };
    });

    LanguageInput finite_in;
    auto* cmd_finite = app.add_subcommand("is-finite", "is the language a finite set?");
    finite_in.attach(cmd_finite);
    cmd_finite->callback([&] {
        action = [&] {
            Output out{as_json, "is-finite"};
            aplang::Automaton a = finite_in.load(out.digest_payload);
            aplang::Decision d;
            d.verdict = aplang::is_finite(a) ? aplang::Verdict::yes : aplang::Verdict::no;
            d.status = aplang::Status::exact;
            d.notes.push_back(d.yes() ? "the language is a finite set"
                                      : "the language is infinite");
            emit_decision(out, d);
        };
    });

    LanguageInput factors_in;
    auto* cmd_factors = app.add_subcommand("factors", "emit an automaton for the factor set Sub(L)");
    factors_in.attach(cmd_factors);
    cmd_factors->callback([&] {
        action = [&] {
            Output out{as_json, "factors"};
            aplang::Automaton a = factors_in.load(out.digest_payload);
            aplang::Automaton sub =
                aplang::determinize_minimize(aplang::build_factor_automaton(a).factors);
            json j = aplang::automaton_to_json(sub);
            out.emit(j, j.dump(2) + "\n");
        };
    });

    LanguageInput pump_in;
    auto* cmd_pump = app.add_subcommand("pump-word", "extract a pumping word of an infinite language");
    pump_in.attach(cmd_pump);
    cmd_pump->callback([&] {
        action = [&] {
            Output out{as_json, "pump-word"};
            aplang::Automaton a = pump_in.load(out.digest_payload);
            aplang::PumpingWitness p = aplang::extract_pumping_word(a);
            std::ostringstream human;
            human << "pumping word: " << aplang::display_word(p.w) << "\n"
                  << "entry path length: " << p.entry_path_len << "\n";
            out.emit(aplang::pumping_witness_to_json(p), human.str());
        };
    });

    LanguageInput ap_in;
    auto* cmd_ap = app.add_subcommand("is-almost-periodic",
                                      "is the language closed and redundant?");
    ap_in.attach(cmd_ap);
    cmd_ap->callback([&] {
        action = [&] {
            Output out{as_json, "is-almost-periodic"};
            aplang::Automaton a = ap_in.load(out.digest_payload);
            emit_decision(out, aplang::is_almost_periodic(a));
        };
    });

    LanguageInput apseq_in;
    auto* cmd_apseq = app.add_subcommand(
        "is-ap-sequence-factors",
        "is the language the factor set of an almost periodic infinite word?");
    apseq_in.attach(cmd_apseq);
    cmd_apseq->callback([&] {
        action = [&] {
            Output out{as_json, "is-ap-sequence-factors"};
            aplang::Automaton a = apseq_in.load(out.digest_payload);
            emit_decision(out, aplang::is_factor_language_of_almost_periodic_word(a));
        };
    });

    LanguageInput conf_in;
    std::vector<std::string> conf_pair;
    int conf_max_len = 6;
    auto* cmd_conf = app.add_subcommand("confluence",
                                        "common-superword tests: one pair, or all short factor pairs");
    conf_in.attach(cmd_conf);
    auto* conf_pair_opt =
        cmd_conf->add_option("--pair", conf_pair, "decide one pair of words exactly")->expected(2);
    auto* conf_len_opt =
        cmd_conf->add_option("--max-len", conf_max_len, "check all factor pairs up to this length");
    conf_pair_opt->excludes(conf_len_opt);
    cmd_conf->callback([&] {
        action = [&] {
            Output out{as_json, "confluence"};
            aplang::Automaton a = conf_in.load(out.digest_payload);
            if (!conf_pair.empty()) {
                out.digest_payload += "\npair:" + conf_pair[0] + "," + conf_pair[1];
                emit_decision(out, aplang::pair_has_common_superword(a, conf_pair[0], conf_pair[1]));
            } else {
                out.digest_payload += "\nmax_len:" + std::to_string(conf_max_len);
                emit_decision(out, aplang::bounded_confluence(a, conf_max_len));
            }
        };
    });

    LanguageInput bi_in;
    int bi_max_len = 6;
    auto* cmd_bi = app.add_subcommand("is-biinfinite-factors",
                                      "is the language the factor set of a bi-infinite word?");
    bi_in.attach(cmd_bi);
    cmd_bi->add_option("--max-len", bi_max_len, "bound for the confluence leg");
    cmd_bi->callback([&] {
        action = [&] {
            Output out{as_json, "is-biinfinite-factors"};
            aplang::Automaton a = bi_in.load(out.digest_payload);
            out.digest_payload += "\nmax_len:" + std::to_string(bi_max_len);
            emit_decision(out, aplang::is_biinfinite_factor_language(a, bi_max_len));
        };
    });

    auto* cmd_seq = app.add_subcommand("seq", "infinite-sequence laboratory");
    cmd_seq->require_subcommand(1);

    SequenceInput seqp_in;
    int seqp_n = 32;
    auto* cmd_seqp = cmd_seq->add_subcommand("prefix", "print a prefix of the sequence");
    seqp_in.attach(cmd_seqp);
    cmd_seqp->add_option("--n", seqp_n, "prefix length");
    cmd_seqp->callback([&] {
        action = [&] {
            Output out{as_json, "seq prefix"};
            aplang::SequenceSpec s = seqp_in.load(out.digest_payload);
            out.digest_payload += "\nn:" + std::to_string(seqp_n);
            aplang::Word p = aplang::prefix(s, seqp_n);
            json j;
            j["n"] = seqp_n;
            j["prefix"] = p;
            out.emit(j, p + "\n");
        };
    });

    SequenceInput seqf_in;
    int seqf_n = 2;
    int seqf_prefix_len = 4096;
    auto* cmd_seqf = cmd_seq->add_subcommand("factors", "factors of a given length seen in a prefix");
    seqf_in.attach(cmd_seqf);
    cmd_seqf->add_option("--n", seqf_n, "factor length");
    cmd_seqf->add_option("--prefix-len", seqf_prefix_len, "prefix length to scan");
    cmd_seqf->callback([&] {
        action = [&] {
            Output out{as_json, "seq factors"};
            aplang::SequenceSpec s = seqf_in.load(out.digest_payload);
            out.digest_payload +=
                "\nn:" + std::to_string(seqf_n) + "\nprefix_len:" + std::to_string(seqf_prefix_len);
            std::vector<aplang::Word> factors =
                aplang::factors_of_length(s, seqf_n, seqf_prefix_len);
            json j;
            j["n"] = seqf_n;
            j["prefix_len"] = seqf_prefix_len;
            j["count"] = factors.size();
            j["factors"] = factors;
            std::ostringstream human;
            human << "n\tfactor\n";
            for (const aplang::Word& f : factors) human << seqf_n << "\t" << f << "\n";
            out.emit(j, human.str());
        };
    });

    SequenceInput seqr_in;
    int seqr_max_n = 6;
    int seqr_prefix_len = 4096;
    std::string seqr_factor;
    auto* cmd_seqr = cmd_seq->add_subcommand("recurrence", "recurrence table over factor lengths");
    seqr_in.attach(cmd_seqr);
    cmd_seqr->add_option("--max-n", seqr_max_n, "table rows n = 1..max-n");
    cmd_seqr->add_option("--prefix-len", seqr_prefix_len, "prefix length to scan");
    auto* seqr_factor_opt = cmd_seqr->add_option(
        "--factor", seqr_factor, "single-factor mode: recurrence value of this word");
    cmd_seqr->callback([&] {
        action = [&] {
            Output out{as_json, "seq recurrence"};
            aplang::SequenceSpec s = seqr_in.load(out.digest_payload);
            std::vector<aplang::RecurrenceReport> rows;
            if (seqr_factor_opt->count() > 0) {
                out.digest_payload += "\nfactor:" + seqr_factor +
                                      "\nprefix_len:" + std::to_string(seqr_prefix_len);
                rows.push_back(aplang::recurrence_for_factor(s, seqr_factor, seqr_prefix_len));
            } else {
                out.digest_payload += "\nmax_n:" + std::to_string(seqr_max_n) +
                                      "\nprefix_len:" + std::to_string(seqr_prefix_len);
                for (int n = 1; n <= seqr_max_n; ++n)
                    rows.push_back(aplang::recurrence_function(s, n, seqr_prefix_len));
            }
            json j = json::array();
            for (const aplang::RecurrenceReport& r : rows)
                j.push_back(aplang::recurrence_report_to_json(r));
            out.emit(j, aplang::recurrence_table_tsv(rows));
        };
    });

    SequenceInput seqq_in;
    int seqq_max_period = 8;
    int seqq_n = 12;
    int seqq_prefix_len = 4096;
    auto* cmd_seqq = cmd_seq->add_subcommand(
        "probe", "can a short-period word reproduce the observed factors?");
    seqq_in.attach(cmd_seqq);
    cmd_seqq->add_option("--max-period", seqq_max_period, "longest candidate period");
    cmd_seqq->add_option("--n", seqq_n, "factor length to compare");
    cmd_seqq->add_option("--prefix-len", seqq_prefix_len, "prefix length to scan");
    cmd_seqq->callback([&] {
        action = [&] {
            Output out{as_json, "seq probe"};
            aplang::SequenceSpec s = seqq_in.load(out.digest_payload);
            out.digest_payload += "\nmax_period:" + std::to_string(seqq_max_period) +
                                  "\nn:" + std::to_string(seqq_n) +
                                  "\nprefix_len:" + std::to_string(seqq_prefix_len);
            emit_decision(out, aplang::eventual_periodicity_probe(s, seqq_max_period, seqq_n,
                                                                  seqq_prefix_len));
        };
    });

    auto* cmd_ctx = app.add_subcommand("ctx", "contextual grammars");
    cmd_ctx->require_subcommand(1);

    std::string ctxg_file;
    int ctxg_max_len = 12;
    int ctxg_max_words = 4096;
    auto* cmd_ctxg = cmd_ctx->add_subcommand("generate", "bounded closure of the grammar");
    cmd_ctxg->add_option("--grammar", ctxg_file, "grammar JSON file")->required();
    cmd_ctxg->add_option("--max-len", ctxg_max_len, "longest word to keep");
    cmd_ctxg->add_option("--max-words", ctxg_max_words, "word budget before truncation");
    cmd_ctxg->callback([&] {
        action = [&] {
            Output out{as_json, "ctx generate"};
            std::string text = read_file(ctxg_file);
            out.digest_payload = "grammar:" + text + "\nmax_len:" + std::to_string(ctxg_max_len) +
                                 "\nmax_words:" + std::to_string(ctxg_max_words);
            aplang::ContextualGrammar g =
                aplang::grammar_from_json(parse_json_text(text, ctxg_file));
            aplang::GenerationReport r = aplang::generate(g, ctxg_max_len, ctxg_max_words);
            std::ostringstream human;
            for (const aplang::Word& w : r.words) human << aplang::display_word(w) << "\n";
            if (r.truncated) human << "(truncated at " << ctxg_max_words << " words)\n";
            out.emit(aplang::generation_report_to_json(r), human.str());
        };
    });

    std::string ctxp_file;
    int ctxp_max_len = 12;
    int ctxp_k = 4;
    auto* cmd_ctxp = cmd_ctx->add_subcommand("probe", "letter-star consistency audit");
    cmd_ctxp->add_option("--grammar", ctxp_file, "grammar JSON file")->required();
    cmd_ctxp->add_option("--max-len", ctxp_max_len, "generation bound");
    cmd_ctxp->add_option("--k", ctxp_k, "closedness/redundancy margin");
    cmd_ctxp->callback([&] {
        action = [&] {
            Output out{as_json, "ctx probe"};
            std::string text = read_file(ctxp_file);
            out.digest_payload = "grammar:" + text + "\nmax_len:" + std::to_string(ctxp_max_len) +
                                 "\nk:" + std::to_string(ctxp_k);
            aplang::ContextualGrammar g =
                aplang::grammar_from_json(parse_json_text(text, ctxp_file));
            aplang::LetterStarAudit r = aplang::letter_star_probe(g, ctxp_max_len, ctxp_k);
            std::ostringstream human;
            human << "words generated: " << r.word_count
                  << (r.generation_truncated ? " (truncated)" : "") << "\n"
                  << "closed up to " << r.k << ": " << (r.closed_up_to_k ? "yes" : "no") << "\n"
                  << "redundant up to " << r.k << ": " << (r.redundant_up_to_k ? "yes" : "no")
                  << (r.redundancy_vacuous ? " (vacuous)" : "") << "\n"
                  << "letter star: " << (r.is_letter_star ? std::string(1, *r.letter) + "*" : "no")
                  << "\n"
                  << "consistent: " << (r.consistent ? "yes" : "NO, escalate") << "\n";
            if (r.growth_warning)
                human << "warning: some context adds fewer than 2 letters\n";
            out.emit(aplang::letter_star_audit_to_json(r), human.str());
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const aplang::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
