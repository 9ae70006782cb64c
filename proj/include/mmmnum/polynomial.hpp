#pragma once

// Exact multivariate polynomial arithmetic over arbitrary-precision integers
// with a weighted grading on the variables. This is the substrate for the
// Newton polynomials and for all cohomology-model computations: everything
// here is pure, exact and immutable after construction.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mmmnum {

using Int = boost::multiprecision::cpp_int;

// Ordered list of variables with positive integer weights. The order is
// fixed at construction and defines the canonical monomial order.
class VarTable {
public:
    VarTable(std::vector<std::string> names, std::vector<unsigned> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            throw std::invalid_argument("VarTable: names/weights length mismatch");
        for (unsigned w : weights_)
            if (w == 0) throw std::invalid_argument("VarTable: weights must be >= 1");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("VarTable: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("VarTable: duplicate variable " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    unsigned weight(std::size_t i) const { return weights_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const VarTable& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<unsigned> weights_;
    std::map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<std::string> names,
                              std::vector<unsigned> weights) {
    return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

// x1,...,xn with weight(xi) = i.
inline VarTablePtr x_table(unsigned n) {
    std::vector<std::string> names;
    std::vector<unsigned> weights;
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(i);
    }
    return make_table(std::move(names), std::move(weights));
}

// t,x1,...,xn with weight(t) = 1; used for homogenization.
inline VarTablePtr tx_table(unsigned n) {
    std::vector<std::string> names{"t"};
    std::vector<unsigned> weights{1};
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(i);
    }
    return make_table(std::move(names), std::move(weights));
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// Dense exponent vector parallel to a VarTable.
struct Monomial {
    std::vector<unsigned> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}

    bool empty_product() const {
        return std::all_of(exponents.begin(), exponents.end(),
                           [](unsigned e) { return e == 0; });
    }

    long long weighted_degree(const VarTable& t) const {
        long long d = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            d += static_cast<long long>(exponents[i]) * t.weight(i);
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

// Exact polynomial over a VarTable: a finite map monomial -> nonzero integer
// coefficient. Canonical form (no zero coefficients) is maintained by every
// operation, so equality is table equality plus term-map equality.
class GradedPoly {
public:
    explicit GradedPoly(VarTablePtr table) : table_(std::move(table)) {
        if (!table_) throw std::invalid_argument("GradedPoly: null table");
    }

    static GradedPoly zero(VarTablePtr table) { return GradedPoly(std::move(table)); }

    static GradedPoly constant(VarTablePtr table, Int c) {
        GradedPoly p(std::move(table));
        p.add_term(Monomial(p.table_->size()), std::move(c));
        return p;
    }

    static GradedPoly variable(VarTablePtr table, std::size_t index) {
        GradedPoly p(std::move(table));
        if (index >= p.table_->size())
            throw std::invalid_argument("GradedPoly: variable index out of range");
        Monomial m(p.table_->size());
        m.exponents[index] = 1;
        p.add_term(std::move(m), 1);
        return p;
    }

    static GradedPoly term(VarTablePtr table, Monomial m, Int c) {
        GradedPoly p(std::move(table));
        if (m.exponents.size() != p.table_->size())
            throw std::invalid_argument("GradedPoly: monomial length mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const VarTablePtr& table() const { return table_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool operator==(const GradedPoly& o) const {
        return same_table(table_, o.table_) && terms_ == o.terms_;
    }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly& operator+=(const GradedPoly& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

    GradedPoly operator-() const {
        GradedPoly r(table_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        a.check_table(b);
        GradedPoly r(a.table_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.table_->size());
                for (std::size_t i = 0; i < m.exponents.size(); ++i)
                    m.exponents[i] = ma.exponents[i] + mb.exponents[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    friend GradedPoly operator*(const Int& s, const GradedPoly& p) {
        GradedPoly r(p.table_);
        if (s == 0) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend GradedPoly operator*(const GradedPoly& p, const Int& s) { return s * p; }

    // Terms sorted canonically: descending weighted degree, then descending
    // lexicographic on exponent vectors. This is the printing order and the
    // order golden files are frozen in.
    std::vector<std::pair<Monomial, Int>> canonical_terms() const {
        std::vector<std::pair<Monomial, Int>> v(terms_.begin(), terms_.end());
        const VarTable& t = *table_;
        std::sort(v.begin(), v.end(), [&t](const auto& a, const auto& b) {
            long long da = a.first.weighted_degree(t);
            long long db = b.first.weighted_degree(t);
            if (da != db) return da > db;
            return b.first.exponents < a.first.exponents;
        });
        return v;
    }

private:
    void check_table(const GradedPoly& o) const {
        if (!same_table(table_, o.table_))
            throw std::invalid_argument("GradedPoly: operands use different VarTables");
    }

    void add_term(Monomial m, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VarTablePtr table_;
    std::map<Monomial, Int> terms_;
};

// Ring-homomorphism image of p: every used variable of p must have an image,
// and all images must live over one shared target table.
using SubstitutionMap = std::map<std::size_t, GradedPoly>;

inline GradedPoly substitute(const GradedPoly& p, const SubstitutionMap& images) {
    // Work out the target table and validate the images.
    VarTablePtr target;
    for (const auto& [idx, img] : images) {
        if (idx >= p.table()->size())
            throw std::invalid_argument("substitute: image index out of range");
        if (!target)
            target = img.table();
        else if (!same_table(target, img.table()))
            throw std::invalid_argument("substitute: images use different VarTables");
    }
    if (!target) {
        // No images: legal only if p uses no variables at all.
        for (const auto& [m, c] : p.terms())
            if (!m.empty_product())
                throw std::invalid_argument("substitute: missing image for a used variable");
        return p;
    }

    // Cache powers of each image as needed.
    std::map<std::size_t, std::vector<GradedPoly>> powers;
    auto image_power = [&](std::size_t idx, unsigned e) -> const GradedPoly& {
        auto it = images.find(idx);
        if (it == images.end())
            throw std::invalid_argument("substitute: missing image for variable " +
                                        p.table()->name(idx));
        auto& pw = powers[idx];
        if (pw.empty()) pw.push_back(GradedPoly::constant(target, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * it->second);
        return pw[e];
    };

    GradedPoly result(target);
    for (const auto& [m, c] : p.terms()) {
        GradedPoly t = GradedPoly::constant(target, c);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) t = t * image_power(i, m.exponents[i]);
        result += t;
    }
    return result;
}

// Renames p's variables into `target` (every variable of p must exist there,
// with any weight). Used to embed f_n into extended tables.
inline GradedPoly embed(const GradedPoly& p, const VarTablePtr& target) {
    SubstitutionMap images;
    for (std::size_t i = 0; i < p.table()->size(); ++i) {
        auto idx = target->index_of(p.table()->name(i));
        if (!idx)
            throw std::invalid_argument("embed: target lacks variable " +
                                        p.table()->name(i));
        images.emplace(i, GradedPoly::variable(target, *idx));
    }
    if (images.empty()) {
        GradedPoly r(target);
        for (const auto& [m, c] : p.terms()) r += GradedPoly::constant(target, c);
        return r;
    }
    return substitute(p, images);
}

// Sum of exactly the terms of weighted degree d (0 if none).
inline GradedPoly homogeneous_component(const GradedPoly& p, long long d) {
    GradedPoly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (m.weighted_degree(*p.table()) == d)
            r += GradedPoly::term(p.table(), m, c);
    return r;
}

// Weighted degree of p if homogeneous (the zero polynomial counts as
// homogeneous of every degree and reports nullopt).
inline std::optional<long long> homogeneous_degree(const GradedPoly& p) {
    std::optional<long long> d;
    for (const auto& [m, c] : p.terms()) {
        long long md = m.weighted_degree(*p.table());
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Canonical text form, e.g. "x1^3 - 3*x1*x2 + 3*x3"; "1" for the empty
// monomial, so constants print as bare integers. parse_poly accepts exactly
// this grammar (with free whitespace around '+', '-' and '*').

inline std::string to_string(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.canonical_terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Int a = neg ? Int(-c) : c;
        std::string vars;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += p.table()->name(i);
            if (m.exponents[i] > 1) vars += '^' + std::to_string(m.exponents[i]);
        }
        if (vars.empty()) {
            out += a.str();
        } else if (a == 1) {
            out += vars;
        } else {
            out += a.str() + '*' + vars;
        }
    }
    return out;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline std::string parse_token(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
    if (i == start) throw std::invalid_argument("parse_poly: expected token in '" +
                                                std::string(s) + "'");
    return std::string(s.substr(start, i - start));
}

}  // namespace detail

inline GradedPoly parse_poly(const VarTablePtr& table, std::string_view s) {
    GradedPoly result(table);
    std::size_t i = 0;
    detail::skip_ws(s, i);
    if (i == s.size()) throw std::invalid_argument("parse_poly: empty input");
    bool first = true;
    while (i < s.size()) {
        detail::skip_ws(s, i);
        Int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected '+' or '-'");
        }
        first = false;

        Int coeff = 1;
        Monomial m(table->size());
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            std::string tok = detail::parse_token(s, i);
            if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
                if (saw_factor)
                    throw std::invalid_argument("parse_poly: coefficient must lead its term");
                if (tok.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("parse_poly: bad coefficient " + tok);
                coeff = Int(tok);
            } else {
                auto idx = table->index_of(tok);
                if (!idx) throw std::invalid_argument("parse_poly: unknown variable " + tok);
                unsigned e = 1;
                detail::skip_ws(s, i);
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string exp = detail::parse_token(s, i);
                    if (exp.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("parse_poly: bad exponent " + exp);
                    e = static_cast<unsigned>(std::stoul(exp));
                }
                m.exponents[*idx] += e;
            }
            saw_factor = true;
            detail::skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        result += GradedPoly::term(table, std::move(m), sign * coeff);
    }
    return result;
}

}  // namespace mmmnum
