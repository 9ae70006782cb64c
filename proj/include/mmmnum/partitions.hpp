#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmmnum {

// A partition of n in exponent form: J = (j1,...,jn) with sum_i i*j_i = n.
// J indexes the monomial x1^j1 * ... * xn^jn of weighted degree n.
using Partition = std::vector<unsigned>;

inline unsigned long partition_weight(const Partition& j) {
    unsigned long w = 0;
    for (std::size_t i = 0; i < j.size(); ++i)
        w += (i + 1) * static_cast<unsigned long>(j[i]);
    return w;
}

// All partitions of n as j-vectors of length n, in descending lexicographic
// order on the j-vector (so for n=2: [2,0] = x1^2 before [0,1] = x2).
// partitions(0) is the single empty partition.
inline std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    Partition j(n, 0);
    auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
        if (part > n) {
            if (remaining == 0) out.push_back(j);
            return;
        }
        for (unsigned v = remaining / part + 1; v-- > 0;) {
            j[part - 1] = v;
            self(self, part + 1, remaining - part * v);
        }
        j[part - 1] = 0;
    };
    rec(rec, 1, n);
    return out;
}

// Interchange encoding of a partition key: the exact j-vector, e.g. "[2,0]".
inline std::string partition_key(const Partition& j) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(j[i]);
    }
    s += ']';
    return s;
}

inline Partition parse_partition_key(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition key must look like [j1,...,jn]: " +
                                    std::string(s));
    Partition j;
    std::string_view body = s.substr(1, s.size() - 2);
    if (body.empty()) return j;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad partition entry in key: " + std::string(s));
        j.push_back(static_cast<unsigned>(std::stoul(std::string(tok))));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return j;
}

}  // namespace mmmnum
