#pragma once

// Independent brute-force oracles for the Newton polynomials:
//
//  * the classical implicit definition f_n(e_1,...,e_n) = y_1^n + ... + y_m^n
//    over a ground ring of weight-1 variables, expanded exactly; and
//
//  * symbolic models of the fibered tangent-bundle splitting, checking that
//    substituting p_i(TE) = e^2 b_{i-1} + b_i into f_n collapses to
//    e^{2n} + f_n(b_1,...,b_n) (and the Chern analogue with f_{n+1} and
//    c_i(TX) = e c_{i-1} + c_i collapsing to e^{n+1} + f_{n+1}(c)).

#include <stdexcept>
#include <string>
#include <vector>

#include "flavor.hpp"
#include "newton.hpp"
#include "polynomial.hpp"

namespace mmmnum {

// Ground ring of the classical definition: y1,...,ym, each of weight 1.
struct SymmetricWorkspace {
    unsigned m = 0;
    VarTablePtr table;
};

inline SymmetricWorkspace make_symmetric_workspace(unsigned m) {
    if (m == 0) throw std::invalid_argument("SymmetricWorkspace: m must be >= 1");
    std::vector<std::string> names;
    for (unsigned i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
    return SymmetricWorkspace{m, make_table(std::move(names),
                                            std::vector<unsigned>(m, 1))};
}

// e_i(y1,...,ym): the sum of all squarefree degree-i monomials. e_0 = 1,
// and e_i = 0 for i > m by convention.
inline GradedPoly elementary_symmetric(unsigned i, const SymmetricWorkspace& w) {
    if (i == 0) return GradedPoly::constant(w.table, 1);
    if (i > w.m) return GradedPoly::zero(w.table);
    GradedPoly out(w.table);
    std::vector<unsigned> chosen;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (chosen.size() == i) {
            Monomial m(w.m);
            for (unsigned v : chosen) m.exponents[v] = 1;
            out += GradedPoly::term(w.table, std::move(m), 1);
            return;
        }
        for (unsigned v = next; v < w.m; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// y1^n + ... + ym^n.
inline GradedPoly power_sum(unsigned n, const SymmetricWorkspace& w) {
    if (n == 0) throw std::invalid_argument("power_sum: n must be >= 1");
    GradedPoly out(w.table);
    for (unsigned v = 0; v < w.m; ++v) {
        Monomial m(w.m);
        m.exponents[v] = n;
        out += GradedPoly::term(w.table, std::move(m), 1);
    }
    return out;
}

// Classical oracle: f_n(e_1,...,e_n) = power_sum(n), expanded exactly over
// m ground variables. Requires m >= n, where the identity holds on the nose;
// smaller m would need e_i = 0 truncation and is rejected.
inline bool verify_newton_identity(unsigned n, unsigned m) {
    if (n == 0) throw std::invalid_argument("verify_newton_identity: n must be >= 1");
    if (m < n)
        throw std::invalid_argument("verify_newton_identity: requires m >= n");
    SymmetricWorkspace w = make_symmetric_workspace(m);
    SubstitutionMap images;
    for (unsigned i = 1; i <= n; ++i)
        images.emplace(i - 1, elementary_symmetric(i, w));
    return substitute(newton_poly(n).poly, images) == power_sum(n, w);
}

// Symbolic model of one fibering: the vertical Euler class e plus abstract
// pulled-back base classes b1..bn (weight i) or c1..c_{n+1} (weight i).
struct FiberModel {
    Flavor kind = Flavor::pontryagin;
    unsigned n = 0;
    VarTablePtr table;  // [e, base classes...]
};

inline FiberModel make_fiber_model(Flavor kind, unsigned n) {
    if (n == 0) throw std::invalid_argument("FiberModel: n must be >= 1");
    const unsigned count = (kind == Flavor::pontryagin) ? n : n + 1;
    const char stem = (kind == Flavor::pontryagin) ? 'b' : 'c';
    std::vector<std::string> names{"e"};
    std::vector<unsigned> weights{1};
    for (unsigned i = 1; i <= count; ++i) {
        names.push_back(std::string(1, stem) + std::to_string(i));
        weights.push_back(i);
    }
    return FiberModel{kind, n, make_table(std::move(names), std::move(weights))};
}

// Checks the collapse identity for the model, exactly:
//
//   pontryagin: f_n(e^2 + b1, e^2 b1 + b2, ...) = e^{2n} + f_n(b1,...,bn)
//   chern:      f_{n+1}(e + c1, e c1 + c2, ...) = e^{n+1} + f_{n+1}(c1,...)
//
// and additionally that every term of the residual (left side minus the
// Euler power) is free of e and has pure base weighted degree exactly n
// (resp. n+1) -- the degree that makes it vanish on the base manifold.
inline bool verify_fiber_substitution(const FiberModel& model) {
    const bool pont = model.kind == Flavor::pontryagin;
    const unsigned degree = pont ? model.n : model.n + 1;
    const unsigned euler_exp = pont ? 2 : 1;
    const GradedPoly& f = newton_poly(degree).poly;
    const VarTablePtr& table = model.table;

    GradedPoly e = GradedPoly::variable(table, 0);
    GradedPoly e_pow = GradedPoly::constant(table, 1);
    for (unsigned i = 0; i < euler_exp; ++i) e_pow = e_pow * e;

    SubstitutionMap images;       // x_i -> e^w * base_{i-1} + base_i, base_0 = 1
    SubstitutionMap base_images;  // x_i -> base_i
    for (unsigned i = 1; i <= degree; ++i) {
        GradedPoly prev = (i == 1) ? GradedPoly::constant(table, 1)
                                   : GradedPoly::variable(table, i - 1);
        images.emplace(i - 1, e_pow * prev + GradedPoly::variable(table, i));
        base_images.emplace(i - 1, GradedPoly::variable(table, i));
    }

    GradedPoly lhs = substitute(f, images);
    Monomial top(table->size());
    top.exponents[0] = euler_exp * degree;
    GradedPoly euler_power = GradedPoly::term(table, std::move(top), 1);
    GradedPoly base_part = substitute(f, base_images);
    if (lhs != euler_power + base_part) return false;

    GradedPoly residual = lhs - euler_power;
    for (const auto& [m, c] : residual.terms()) {
        if (m.exponents[0] != 0) return false;  // no factor of e allowed
        if (m.weighted_degree(*table) != static_cast<long long>(degree)) return false;
    }
    return true;
}

}  // namespace mmmnum
