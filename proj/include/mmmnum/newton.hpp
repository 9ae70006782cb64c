#pragma once

// Newton polynomials f_n built by the recursion
//
//   f_1 = x1,   f_n = sum_{k=1}^{n-1} (-1)^{k-1} x_k f_{n-k} + (-1)^{n-1} n x_n
//
// together with mechanical checks of their defining properties: the shift
// identity f_n(1+x1, x1+x2, ..., x_{n-1}+x_n) = 1 + f_n, its homogenized
// form with an extra weight-1 variable t, and uniqueness of f_n via an
// exact integer rank computation.

#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "partitions.hpp"
#include "polynomial.hpp"

namespace mmmnum {

struct NewtonPoly {
    unsigned n = 0;
    GradedPoly poly;  // over x1..xn, weight(xi) = i; homogeneous of degree n
};

// f_n, memoized: computing f_n fills the cache with f_1..f_{n-1} as well.
// The cache is compute-once/read-many; returned references stay valid for
// the lifetime of the program.
inline const NewtonPoly& newton_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("newton_poly: n must be >= 1");
    static std::mutex mutex;
    static std::deque<NewtonPoly> cache;  // cache[i] = f_{i+1}
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() < n) {
        const unsigned m = static_cast<unsigned>(cache.size()) + 1;
        VarTablePtr table = x_table(m);
        GradedPoly f(table);
        for (unsigned k = 1; k + 1 <= m; ++k) {
            GradedPoly xk = GradedPoly::variable(table, k - 1);
            GradedPoly part = xk * embed(cache[m - k - 1].poly, table);
            f += (k % 2 == 1) ? part : -part;
        }
        GradedPoly last = Int(m) * GradedPoly::variable(table, m - 1);
        f += (m % 2 == 1) ? last : -last;
        cache.push_back(NewtonPoly{m, std::move(f)});
    }
    return cache[n - 1];
}

namespace detail {

// Images for xi -> x_{i-1} + xi with x0 = 1, over the same n-variable table.
inline SubstitutionMap shift_images(const VarTablePtr& table) {
    SubstitutionMap images;
    for (std::size_t i = 0; i < table->size(); ++i) {
        GradedPoly prev = (i == 0) ? GradedPoly::constant(table, 1)
                                   : GradedPoly::variable(table, i - 1);
        images.emplace(i, prev + GradedPoly::variable(table, i));
    }
    return images;
}

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t integer_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace detail

// True iff f_n(1+x1, ..., x_{n-1}+x_n) = 1 + f_n, computed exactly.
inline bool check_shift_property(unsigned n) {
    const GradedPoly& f = newton_poly(n).poly;
    GradedPoly lhs = substitute(f, detail::shift_images(f.table()));
    GradedPoly rhs = GradedPoly::constant(f.table(), 1) + f;
    return lhs == rhs;
}

// True iff f_n(t+x1, t*x1+x2, ..., t*x_{n-1}+x_n) = t^n + f_n over the
// extended table with weight(t) = 1.
inline bool check_homogenized_identity(unsigned n) {
    const GradedPoly& f = newton_poly(n).poly;
    VarTablePtr ext = tx_table(n);
    GradedPoly t = GradedPoly::variable(ext, 0);
    SubstitutionMap images;
    for (std::size_t i = 0; i < n; ++i) {
        GradedPoly prev = (i == 0) ? GradedPoly::constant(ext, 1)
                                   : GradedPoly::variable(ext, i);  // x_{i-1} at slot i
        images.emplace(i, t * prev + GradedPoly::variable(ext, i + 1));
    }
    GradedPoly lhs = substitute(f, images);
    Monomial tn(ext->size());
    tn.exponents[0] = n;
    GradedPoly rhs = GradedPoly::term(ext, std::move(tn), 1) + embed(f, ext);
    return lhs == rhs;
}

// The coefficients a_J of f_n = sum_J a_J x^J as a total map over
// partitions(n); entries that happen to vanish are present with value 0.
inline std::map<Partition, Int> newton_coefficients(unsigned n) {
    const GradedPoly& f = newton_poly(n).poly;
    std::map<Partition, Int> out;
    for (const Partition& j : partitions(n)) {
        Monomial m(std::vector<unsigned>(j.begin(), j.end()));
        out.emplace(j, f.coefficient(m));
    }
    return out;
}

// Verifies the uniqueness argument for degree n: the linear map
// h -> h(1+x1, ..., x_{n-1}+x_n) - h, restricted to the p(n)-dimensional
// space of homogeneous degree-n polynomials, has trivial kernel. The map
// lands in the span of the lower-degree monomials; injectivity is an exact
// integer rank computation.
inline bool uniqueness_kernel_check(unsigned n) {
    if (n == 0) throw std::invalid_argument("uniqueness_kernel_check: n must be >= 1");
    VarTablePtr table = x_table(n);
    SubstitutionMap shift = detail::shift_images(table);

    // Column space: all monomials of weighted degree < n.
    std::map<Monomial, std::size_t> column;
    for (unsigned d = 0; d < n; ++d) {
        for (const Partition& j : partitions(d)) {
            std::vector<unsigned> e(j.begin(), j.end());
            e.resize(n, 0);
            column.emplace(Monomial(std::move(e)), column.size());
        }
    }

    const std::vector<Partition> basis = partitions(n);
    std::vector<std::vector<Int>> matrix(basis.size(),
                                         std::vector<Int>(column.size(), 0));
    for (std::size_t r = 0; r < basis.size(); ++r) {
        Monomial xj(std::vector<unsigned>(basis[r].begin(), basis[r].end()));
        GradedPoly g = substitute(GradedPoly::term(table, xj, 1), shift) -
                       GradedPoly::term(table, xj, 1);
        for (const auto& [m, c] : g.terms()) {
            auto it = column.find(m);
            if (it == column.end())
                throw std::logic_error("uniqueness_kernel_check: unexpected high-degree term");
            matrix[r][it->second] = c;
        }
    }
    return detail::integer_rank(std::move(matrix)) == basis.size();
}

}  // namespace mmmnum
