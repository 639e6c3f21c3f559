// Sequence-lab tour on the Thue-Morse word: prefix, factor counts, the
// recurrence table, and the eventual-periodicity probe that separates it
// from every short-period word.

#include <iostream>

#include <aplang/aplang.hpp>

int main() {
    using namespace aplang;

    SequenceSpec tm = thue_morse();
    std::cout << "prefix(32) = " << prefix(tm, 32) << "\n\n";

    std::cout << "factor counts (prefix 4096):\n";
    for (int n = 1; n <= 6; ++n)
        std::cout << "  n=" << n << ": " << factors_of_length(tm, n, 4096).size() << "\n";

    std::vector<RecurrenceReport> rows;
    for (int n = 1; n <= 6; ++n) rows.push_back(recurrence_function(tm, n, 4096));
    std::cout << "\nrecurrence table:\n" << recurrence_table_tsv(rows);

    std::cout << "\neventual periodicity probe (periods up to 4, n = 8):\n";
    Decision probe = eventual_periodicity_probe(tm, 4, 8, 4096);
    std::cout << verdict_name(probe.verdict) << "; first notes:\n";
    for (std::size_t i = 0; i < probe.notes.size() && i < 5; ++i)
        std::cout << "  " << probe.notes[i] << "\n";

    std::cout << "\nperiodic contrast, periodic(aab):\n";
    Decision periodic = eventual_periodicity_probe(SequenceSpec::periodic("aab"), 4, 8, 4096);
    std::cout << verdict_name(periodic.verdict);
    if (!periodic.witness.empty()) std::cout << ", witness " << periodic.witness.front();
    std::cout << "\n";
    return 0;
}
