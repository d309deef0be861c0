#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svf/field.hpp"
#include "svf/linalg.hpp"
#include "svf/poly.hpp"

namespace svf {

/// Ordered basis of the derivations of the Grassmann algebra on s odd
/// variables: all monomial multiples m*d(theta_j), slot-major and masks
/// ascending within a slot, so index(j, mask) = j*2^s + mask. Dimension
/// s*2^s. Structure constants are computed here from scratch (independent
/// Grassmann arithmetic on bitmasks) so they can be cross-checked against
/// the bracket of the fields module.
class DerivationBasis {
public:
    explicit DerivationBasis(std::size_t s);

    std::size_t odd_count() const { return s_; }
    std::size_t dim() const { return elements_.size(); }
    const SigPtr& signature() const { return sig_; }
    const VectorField& element(std::size_t idx) const { return elements_.at(idx); }
    std::size_t index(std::size_t slot, std::uint32_t mask) const {
        return slot * (std::size_t(1) << s_) + mask;
    }
    Parity element_parity(std::size_t idx) const;

    /// Exact coordinates of a derivation expressed over any (0, s) signature.
    Row coordinates(const VectorField& x) const;
    /// Inverse of coordinates, over this basis' own signature.
    VectorField field_of(const Row& v) const;

    /// Coordinates of [element(idx), field_of(v)], via the stored structure
    /// constants; never calls the fields module.
    Row bracket_row(std::size_t idx, const Row& v) const;

private:
    struct Entry {
        std::size_t target;
        Rational coeff;
    };

    std::size_t s_;
    SigPtr sig_;
    std::vector<VectorField> elements_;
    std::vector<std::vector<std::vector<Entry>>> table_; // [alpha][beta] -> terms
};

/// Exact linear subspace of the coordinate space of a DerivationBasis, kept
/// as reduced row echelon rows; equality of subspaces is row equality.
struct Subspace {
    Mat rows;

    std::size_t dim() const { return rows.size(); }
    bool contains(Row v) const { return in_row_space(rows, std::move(v)); }
    bool operator==(const Subspace& other) const = default;
};

/// Smallest Lie ideal containing the generators: iterates
/// span <- span + [basis, span] until the dimension stabilizes, then checks
/// bracket-stability against every basis element before returning.
Subspace ideal_closure(const std::vector<VectorField>& generators, std::size_t s);

struct ScanRow {
    std::string generator;
    std::size_t closure_dim;
    bool proper;
};

/// Outcome of a simplicity scan. `text` is the full plain-text report; the
/// structured fields back the tests and the interchange document.
struct ScanReport {
    std::size_t s = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    std::vector<ScanRow> table;
    bool proper_found = false;
    std::vector<std::string> ideal_basis; // field texts, set when proper_found
    std::string text;
};

/// Runs ideal_closure on every homogeneous basis element and on `trials`
/// random nonzero homogeneous elements. A proper closure is a disproof of
/// simplicity (it is returned with a verified basis); an all-full scan is
/// evidence only, not a proof, and the report says so.
ScanReport simplicity_scan(std::size_t s, std::size_t trials, std::uint64_t seed);

/// JSON document listing the proper ideal found by a scan as field texts.
/// Requires report.proper_found.
std::string ideal_document(const ScanReport& report);

/// Exactness of A --xi--> A --xi--> A on the Grassmann algebra with s odd
/// variables: builds the multiplication matrix of xi and compares kernel and
/// image as exact subspaces. xi must be parity-odd.
bool is_odd_regular(const SuperPolynomial& xi, std::size_t s);

/// Regularity of a sequence of homogeneous elements: iteratively quotient by
/// each element and test the next on the quotient (even elements must act
/// injectively, odd ones need kernel = image). Empty sequences are
/// vacuously regular.
bool is_regular_sequence(const std::vector<SuperPolynomial>& seq, std::size_t s);

} // namespace svf
