// Walkthrough of the core decision pipeline on the language of all
// factors of powers of ab: build the cycle automaton, extract a pumping
// word, and run the almost-periodicity and bi-infinite tests.

#include <iostream>

#include <aplang/aplang.hpp>

int main() {
    using namespace aplang;

    Automaton alternating = build_periodic_factor_automaton("ab", Alphabet("ab"));
    std::cout << "Sub((ab)*) as an automaton:\n"
              << automaton_to_json(alternating).dump(2) << "\n\n";

    PumpingWitness pump = extract_pumping_word(alternating);
    std::cout << "pumping word: " << display_word(pump.w) << "\n\n";

    std::cout << "is_almost_periodic:\n"
              << decision_to_json(is_almost_periodic(alternating)).dump(2) << "\n\n";

    std::cout << "is_factor_language_of_almost_periodic_word:\n"
              << decision_to_json(is_factor_language_of_almost_periodic_word(alternating)).dump(2)
              << "\n\n";

    std::cout << "is_biinfinite_factor_language (bound 6):\n"
              << decision_to_json(is_biinfinite_factor_language(alternating, 6)).dump(2) << "\n\n";

    Automaton ab_star = compile_regex("a*b*", Alphabet("ab"));
    std::cout << "a*b* for contrast, is_almost_periodic:\n"
              << decision_to_json(is_almost_periodic(ab_star)).dump(2) << "\n";
    return 0;
}
