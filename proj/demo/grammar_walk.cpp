// Contextual-grammar tour: generate two small grammars and audit them
// with the letter-star consistency probe.

#include <iostream>

#include <aplang/aplang.hpp>

namespace {

void tour(const char* title, const aplang::ContextualGrammar& g) {
    using namespace aplang;
    std::cout << title << "\n";
    GenerationReport gen = generate(g, 8, 256);
    std::cout << "  words up to length 8:";
    for (const Word& w : gen.words) std::cout << " " << display_word(w);
    if (gen.truncated) std::cout << " ...";
    std::cout << "\n";
    LetterStarAudit probe = letter_star_probe(g, 12, 4);
    std::cout << "  closed: " << (probe.closed_up_to_k ? "yes" : "no")
              << ", redundant: " << (probe.redundant_up_to_k ? "yes" : "no")
              << ", letter star: " << (probe.is_letter_star ? "yes" : "no")
              << ", consistent: " << (probe.consistent ? "yes" : "no") << "\n\n";
}

}  // namespace

int main() {
    using namespace aplang;

    ContextualGrammar unary(Alphabet("a"), {""}, {{"a", ""}}, GrammarMode::external);
    tour("external unary grammar, base {λ}, context (a, λ):", unary);

    ContextualGrammar nested(Alphabet("ab"), {"ab"}, {{"a", "b"}}, GrammarMode::internal);
    tour("internal grammar, base {ab}, context (a, b):", nested);

    Automaton only_a = compile_regex("a", Alphabet("ab"));
    ContextualGrammar selective(Alphabet("ab"), {"ab"}, {{"", "b"}}, GrammarMode::internal,
                                {{0, only_a}});
    tour("internal grammar with selector z = a, context (λ, b):", selective);
    return 0;
}
