#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "svf/errors.hpp"
#include "svf/rational.hpp"

namespace svf {

/// Z2-degree of a homogeneous object.
enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

constexpr Parity parity_of_count(std::size_t n) {
    return (n & 1u) ? Parity::Odd : Parity::Even;
}

/// Variable layout of the free algebra k[t_1..t_r | theta_1..theta_s].
/// Names are pairwise distinct; positions 0..r-1 are the even coordinates,
/// r..r+s-1 the odd ones when a flat slot index is used.
struct Signature {
    std::size_t even_count = 0;
    std::size_t odd_count = 0;
    std::vector<std::string> even_names;
    std::vector<std::string> odd_names;

    std::size_t slot_count() const { return even_count + odd_count; }

    /// Parity of the basis derivation at a flat slot.
    Parity slot_parity(std::size_t slot) const {
        return slot < even_count ? Parity::Even : Parity::Odd;
    }

    const std::string& slot_name(std::size_t slot) const {
        return slot < even_count ? even_names[slot] : odd_names[slot - even_count];
    }

    bool operator==(const Signature& other) const = default;
};

using SigPtr = std::shared_ptr<const Signature>;

inline void validate_signature(const Signature& sig) {
    if (sig.even_names.size() != sig.even_count || sig.odd_names.size() != sig.odd_count)
        throw Error("signature name lists do not match variable counts");
    std::set<std::string> seen;
    for (const auto& n : sig.even_names)
        if (n.empty() || !seen.insert(n).second) throw Error("signature names must be distinct and nonempty");
    for (const auto& n : sig.odd_names)
        if (n.empty() || !seen.insert(n).second) throw Error("signature names must be distinct and nonempty");
}

inline SigPtr make_signature(std::size_t r, std::size_t s,
                             std::vector<std::string> even_names,
                             std::vector<std::string> odd_names) {
    auto sig = std::make_shared<Signature>(Signature{r, s, std::move(even_names), std::move(odd_names)});
    validate_signature(*sig);
    return sig;
}

/// Default names: t1..tr / theta1..thetas, shortened to "t" / "theta" when
/// there is a single variable of that kind.
inline SigPtr make_signature(std::size_t r, std::size_t s) {
    std::vector<std::string> ev, od;
    for (std::size_t i = 1; i <= r; ++i) ev.push_back(r == 1 ? "t" : "t" + std::to_string(i));
    for (std::size_t j = 1; j <= s; ++j) od.push_back(s == 1 ? "theta" : "theta" + std::to_string(j));
    return make_signature(r, s, std::move(ev), std::move(od));
}

inline bool same_signature(const SigPtr& a, const SigPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_signature(const SigPtr& a, const SigPtr& b) {
    if (!same_signature(a, b)) throw SignatureMismatchError("operands have different signatures");
}

/// Rational closed point: even coordinates only, odd coordinates are
/// implicitly zero.
struct Point {
    std::vector<Rational> even_coords;

    static Point origin(std::size_t r) { return Point{std::vector<Rational>(r, Rational(0))}; }

    bool is_origin() const {
        for (const auto& c : even_coords)
            if (c != 0) return false;
        return true;
    }
};

inline void require_point_matches(const Point& p, const Signature& sig) {
    if (p.even_coords.size() != sig.even_count)
        throw SignatureMismatchError("point dimension does not match signature");
}

} // namespace svf
