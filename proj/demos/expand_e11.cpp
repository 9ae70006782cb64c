// Expands e_11^# of a surface bundle E^24 -> M^22 into Pontryagin numbers
// of E and prints the coefficient of each p_J.

#include <iostream>

#include <mmmnum/char_numbers.hpp>

int main() {
    using namespace mmmnum;
    CharNumberExpansion e11 = expand_odd_mmm(6);
    std::cout << "e_11^# = sum over partitions J of 6 of a_J * p_J^#:\n";
    for (const Partition& j : partitions(e11.degree))
        std::cout << "  a_" << partition_key(j) << " = " << e11.terms.at(j) << "\n";
    return 0;
}
