#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "svf/signature.hpp"

namespace svf {

/// One normal-form monomial t^k * theta_{i_1}...theta_{i_l}: even exponents
/// plus a bitmask of odd indices (bit j-1 set iff theta_j occurs). The
/// increasing-index normal form is the mask itself; repeated odd factors
/// cannot be represented, products that would create them vanish upstream.
struct Monomial {
    std::vector<unsigned> even_exponents; // size r
    std::uint32_t odd_mask = 0;

    unsigned even_degree() const {
        return std::accumulate(even_exponents.begin(), even_exponents.end(), 0u);
    }

    unsigned total_degree() const {
        return even_degree() + static_cast<unsigned>(std::popcount(odd_mask));
    }

    Parity parity() const { return parity_of_count(std::popcount(odd_mask)); }

    /// 1-based odd indices in increasing order.
    std::vector<unsigned> odd_indices() const {
        std::vector<unsigned> out;
        for (std::uint32_t m = odd_mask; m != 0; m &= m - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
        return out;
    }

    static Monomial one(std::size_t r) { return Monomial{std::vector<unsigned>(r, 0u), 0}; }

    bool operator==(const Monomial& other) const = default;
};

/// Graded order: total degree first, then even exponent vectors
/// lexicographically, then the odd mask. Used for canonical term ordering,
/// printing (largest last in map order, printed in reverse) and the
/// deterministic tie-breaks of the certificate engine.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.even_exponents != b.even_exponents) return a.even_exponents < b.even_exponents;
        return a.odd_mask < b.odd_mask;
    }
};

/// Koszul sign of merging two odd-index sets into increasing order:
/// (-1)^(number of out-of-order pairs). Returns 0 if the sets intersect
/// (a squared odd variable), else +1 or -1.
inline int odd_merge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (std::uint32_t m = b; m != 0; m &= m - 1) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(m));
        inversions += std::popcount(a >> (bit + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

} // namespace svf
