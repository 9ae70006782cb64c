// Tabulates Atiyah-Kodaira instances over a small parameter grid: each row
// is a 4-manifold fibering as a surface bundle in two ways, with its two
// fiber genera, signature and e_1^#.

#include <iostream>

#include <mmmnum/atiyah_kodaira.hpp>

int main() {
    using namespace mmmnum;
    std::cout << "g_S  k  genus_hat  h      g          sigma        e1\n";
    for (unsigned g = 2; g <= 4; ++g) {
        for (unsigned k = 2; k <= 4; ++k) {
            AKReport r = ak_report(AKParams{g, k});
            std::cout << g << "    " << k << "  " << r.genus_hat << "  "
                      << r.fiber_genus_over_hat << "  " << r.fiber_genus_over_S
                      << "  " << r.signature << "  " << r.e1_number << "\n";
        }
    }
    return 0;
}
