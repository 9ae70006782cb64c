#pragma once

// Enumerative invariants of the Atiyah-Kodaira branched-cover construction.
//
// From a genus-g_S surface S (g_S >= 2) and an integer k >= 2, the
// construction takes the k^{2 g_S}-sheeted characteristic cover Shat -> S,
// forms the k disjoint graphs Delta_i of the deck-translated projections
// Shat -> S inside Shat x S, and passes to a cyclic k-sheeted cover of
// Shat x S branched over their union. The resulting 4-manifold fibers as a
// surface bundle in two ways; everything this module computes is the
// arithmetic of that picture: cover degrees, branch counts, fiber genera by
// Riemann-Hurwitz, the branch-locus self-intersection, the signature, and
// e_1^# = 3 sigma.

#include <optional>
#include <stdexcept>
#include <string>

#include "char_numbers.hpp"
#include "polynomial.hpp"  // for Int

namespace mmmnum {

struct AKParams {
    unsigned genus_S = 2;  // genus of S, >= 2
    unsigned sheets = 2;   // k, >= 2
};

inline void validate(const AKParams& p) {
    if (p.genus_S < 2)
        throw std::invalid_argument("AKParams: genus of S must be >= 2");
    if (p.sheets < 2) throw std::invalid_argument("AKParams: sheets must be >= 2");
}

struct AKReport {
    Int cover_degree;            // k^{2 g_S}, degree of Shat -> S
    Int genus_hat;               // genus of Shat
    Int branch_points_on_S;      // k
    Int branch_points_on_hat;    // k^{2 g_S + 1}
    Int fiber_genus_over_hat;    // h, fiber of M -> Shat
    Int fiber_genus_over_S;      // g, fiber of M -> S
    Int delta_self_intersection; // [Delta]^2 = sum_i [Delta_i]^2
    Int signature;               // sigma(M)
    Int e1_number;               // e_1^# = 3 sigma
    std::optional<Int> genus_bound;  // least admissible fiber genus, if any
};

// Genus of a cyclic cover with every branch point totally ramified (one
// preimage, ramification defect sheets-1):
//   chi = sheets*(2 - 2*base_genus) - (sheets-1)*branch_points,
// genus = 1 - chi/2. Odd chi or negative genus is malformed branching data.
inline Int riemann_hurwitz_genus(const Int& sheets, const Int& base_genus,
                                 const Int& branch_points) {
    if (sheets < 1) throw std::invalid_argument("riemann_hurwitz_genus: sheets < 1");
    if (base_genus < 0 || branch_points < 0)
        throw std::invalid_argument("riemann_hurwitz_genus: negative input");
    Int chi = sheets * (2 - 2 * base_genus) - (sheets - 1) * branch_points;
    if (chi % 2 != 0)
        throw std::invalid_argument(
            "riemann_hurwitz_genus: branching data gives odd Euler characteristic");
    Int genus = 1 - chi / 2;
    if (genus < 0)
        throw std::invalid_argument("riemann_hurwitz_genus: negative genus");
    return genus;
}

inline AKReport ak_report(const AKParams& p) {
    validate(p);
    const Int k = p.sheets;
    const Int gS = p.genus_S;

    AKReport r;
    r.cover_degree = boost::multiprecision::pow(k, 2 * p.genus_S);
    // Unbranched cover: chi(Shat) = k^{2 g_S} * chi(S).
    r.genus_hat = 1 + r.cover_degree * (gS - 1);
    r.branch_points_on_S = k;
    r.branch_points_on_hat = r.cover_degree * k;  // k^{2 g_S + 1}

    // Fiber of M -> Shat: cyclic k-cover of S branched over Delta ∩ S (k
    // points); fiber of M -> S: cyclic k-cover of Shat branched over
    // Delta ∩ Shat (k^{2 g_S + 1} points).
    r.fiber_genus_over_hat = riemann_hurwitz_genus(k, gS, r.branch_points_on_S);
    r.fiber_genus_over_S = riemann_hurwitz_genus(k, r.genus_hat, r.branch_points_on_hat);

    // Each Delta_i is the graph of a degree-k^{2 g_S} map Shat -> S, so its
    // normal bundle is the pullback of TS and [Delta_i]^2 = deg * chi(S);
    // the k graphs are disjoint.
    Int chi_S = 2 - 2 * gS;
    r.delta_self_intersection = k * (r.cover_degree * chi_S);

    // Signature of a cyclic k-fold branched cover (classical formula, not
    // part of the construction itself): sigma = -((k^2-1)/(3k)) * [Delta]^2.
    Int numer = -(k * k - 1) * r.delta_self_intersection;
    Int denom = 3 * k;
    if (numer % denom != 0)
        throw std::logic_error("ak_report: signature formula did not divide exactly");
    r.signature = numer / denom;

    r.e1_number = signature_to_e1(r.signature);
    r.genus_bound = min_genus_bound(1, r.e1_number);
    return r;
}

// Cross-checks one instance end to end, all exactly:
//  (a) e_1^# = 3 sigma;
//  (b) when e_1^# != 0, the least admissible fiber genus does not exceed
//      either observed fiber genus (both fiberings clear the obstruction);
//  (c) the signature division is exact (no hidden rounding).
inline bool ak_consistency_check(const AKParams& p) {
    validate(p);
    AKReport r = ak_report(p);
    if (r.e1_number != signature_to_e1(r.signature)) return false;
    if (r.e1_number != 0) {
        std::optional<Int> bound = min_genus_bound(1, r.e1_number);
        if (!bound) return false;
        const Int& h = r.fiber_genus_over_hat;
        const Int& g = r.fiber_genus_over_S;
        if (*bound > (h < g ? h : g)) return false;
    }
    Int k = p.sheets;
    Int numer = -(k * k - 1) * r.delta_self_intersection;
    return numer % (3 * k) == 0;
}

// Flat JSON object with the exact report field names; all values are
// integer literals (arbitrary precision), genus_bound is null when absent.
inline std::string to_json(const AKReport& r) {
    auto field = [](const char* name, const Int& v) {
        return '"' + std::string(name) + "\":" + v.str();
    };
    std::string out = "{";
    out += field("cover_degree", r.cover_degree) + ',';
    out += field("genus_hat", r.genus_hat) + ',';
    out += field("branch_points_on_S", r.branch_points_on_S) + ',';
    out += field("branch_points_on_hat", r.branch_points_on_hat) + ',';
    out += field("fiber_genus_over_hat", r.fiber_genus_over_hat) + ',';
    out += field("fiber_genus_over_S", r.fiber_genus_over_S) + ',';
    out += field("delta_self_intersection", r.delta_self_intersection) + ',';
    out += field("signature", r.signature) + ',';
    out += field("e1_number", r.e1_number) + ',';
    out += "\"genus_bound\":" + (r.genus_bound ? r.genus_bound->str() : "null");
    out += '}';
    return out;
}

}  // namespace mmmnum
