#pragma once

// Characteristic-number calculators built on the Newton polynomials.
//
// For a surface bundle E^{4n} -> M^{4n-2} the odd MMM number satisfies
// e^#_{2n-1}(E -> M) = sum_J a_J p_J^#(E), where the a_J are the
// coefficients of f_n. For a holomorphic fibration X^{n+1} -> Y^n the
// analogous Chern expansion uses f_{n+1}: e^#_n(X -> Y) = sum_J a_J c_J^#(X).
// Evaluation on user-supplied integer number vectors is exact.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "flavor.hpp"
#include "newton.hpp"
#include "partitions.hpp"

namespace mmmnum {

// The integer linear functional sum_J a_J * (number)_J. `degree` is the
// partition size the terms range over: n for pontryagin (expanding
// e_{2n-1}), n+1 for chern (expanding e_n).
struct CharNumberExpansion {
    unsigned n = 0;
    Flavor flavor = Flavor::pontryagin;
    unsigned degree = 0;
    std::map<Partition, Int> terms;
};

// An assignment partition -> integer: the Pontryagin numbers p_J^#(E) or
// Chern numbers c_J^#(X) the functional is evaluated on.
struct CharNumberVector {
    Flavor flavor = Flavor::pontryagin;
    unsigned degree = 0;
    std::map<Partition, Int> values;
};

// e^#_{2n-1} as a polynomial in the Pontryagin numbers of the total space.
inline CharNumberExpansion expand_odd_mmm(unsigned n) {
    if (n == 0) throw std::invalid_argument("expand_odd_mmm: n must be >= 1");
    return CharNumberExpansion{n, Flavor::pontryagin, n, newton_coefficients(n)};
}

// e^#_n of a holomorphic fibration as a combination of Chern numbers.
inline CharNumberExpansion expand_complex_mmm(unsigned n) {
    if (n == 0) throw std::invalid_argument("expand_complex_mmm: n must be >= 1");
    return CharNumberExpansion{n, Flavor::chern, n + 1, newton_coefficients(n + 1)};
}

// sum_J a_J * v(J), exact. The vector must match flavor and degree and be
// total over partitions(degree).
inline Int evaluate(const CharNumberExpansion& exp, const CharNumberVector& v) {
    if (exp.flavor != v.flavor)
        throw std::invalid_argument("evaluate: flavor mismatch");
    if (exp.degree != v.degree)
        throw std::invalid_argument("evaluate: degree mismatch");
    Int total = 0;
    for (const auto& [j, a] : exp.terms) {
        auto it = v.values.find(j);
        if (it == v.values.end())
            throw std::invalid_argument("evaluate: vector missing partition " +
                                        partition_key(j));
        total += a * it->second;
    }
    return total;
}

// Genus obstruction: a nonzero e^#_{2n-1} forces every surface-bundle
// fibering of the total space to have fiber genus > 2n; the least admissible
// genus 2n+1 is returned. Zero gives no bound.
inline std::optional<Int> min_genus_bound(unsigned n, const Int& value) {
    if (value == 0) return std::nullopt;
    return Int(2 * static_cast<unsigned long>(n) + 1);
}

// e_1^# = 3 sigma for a surface bundle over a surface (Hirzebruch signature
// formula applied to the 4-manifold total space).
inline Int signature_to_e1(const Int& sigma) { return 3 * sigma; }

}  // namespace mmmnum
